#pragma once

#include <tropical/core.hpp>
#include <tropical/dd.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tropical {

/// The envelope polyhedron of a configuration V: all (y, z) with
/// y_i + z_j <= v_ij, taken in R^{r+n} modulo the line spanned by
/// (1,...,1,-1,...,-1) and realized here in the gauge y_0 = 0. Its
/// bounded faces mirror the tropical complex of V; the tight pairs of
/// all of its faces encode the dual subdivision machinery.
struct EnvelopePolyhedron {
    std::size_t r = 0, n = 0;
    RatMatrix A;      ///< gauge-fixed constraint rows, index i*n + j
    RatVec b;         ///< right-hand sides v_ij
    VertexRaySet vr;  ///< exact vertices and extreme rays with tight pairs

    std::size_t constraint(std::size_t i, std::size_t j) const { return i * n + j; }

    /// y-part of a gauge vector (length r, first entry fixed to 0).
    RatVec y_of(const RatVec& u) const {
        RatVec y(r);
        y[0] = 0;
        for (std::size_t i = 1; i < r; ++i) y[i] = u[i - 1];
        return y;
    }

    /// z-part of a gauge vector (length n).
    RatVec z_of(const RatVec& u) const {
        RatVec z(n);
        for (std::size_t j = 0; j < n; ++j) z[j] = u[r - 1 + j];
        return z;
    }

    std::vector<PolyFace> faces(bool bounded_only) const {
        return face_lattice(vr, A.size(), bounded_only);
    }
};

/// Builds the envelope polyhedron of V and enumerates its vertices and
/// extreme rays exactly.
inline EnvelopePolyhedron build_envelope(const Configuration& V, std::size_t size_limit = 62) {
    const std::size_t r = V.rows(), n = V.cols();
    if (r == 0) throw std::invalid_argument("envelope of an empty configuration");
    if (r * n > size_limit || r * n > 62)
        throw SizeLimitError("configuration exceeds the envelope size limit");

    EnvelopePolyhedron env;
    env.r = r;
    env.n = n;
    const std::size_t d = r - 1 + n;
    env.A.assign(r * n, RatVec(d, Rational(0)));
    env.b.assign(r * n, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& row = env.A[env.constraint(i, j)];
            if (i >= 1) row[i - 1] = 1;
            row[r - 1 + j] = 1;
            env.b[env.constraint(i, j)] = V(i, j);
        }
    env.vr = polyhedron_generators(env.A, env.b);
    if (!env.vr.pointed) throw std::logic_error("envelope polyhedron must be pointed");
    return env;
}

}  // namespace tropical

#pragma once

#include <tropical/rational.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

// Exact vertex/ray enumeration for rational polyhedra via the double
// description method, plus face-lattice extraction from the resulting
// V-description. Sized for desk-scale instances: at most 63 constraints,
// tight sets kept in one machine word.
namespace tropical {

using TightSet = std::uint64_t;

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Rescales v by a positive rational so that its entries are coprime
/// integers. Direction (sign) is preserved.
inline void make_primitive(RatVec& v) {
    Integer lcm(1);
    for (const auto& c : v)
        if (c != 0) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    Integer gcd(0);
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm / denominator(v[i]));
        gcd = boost::multiprecision::gcd(gcd, ints[i]);
    }
    if (gcd == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / gcd);
}

/// Rank of a rational matrix by Gaussian elimination.
inline int matrix_rank(RatMatrix m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

struct ConeGenerators {
    std::vector<RatVec> lineality;       ///< basis of the lineality space
    std::vector<RatVec> rays;            ///< extreme rays (modulo lineality)
    std::vector<TightSet> ray_tight;     ///< bit c set iff constraint c is tight on the ray
};

struct DDOptions {
    bool algebraic_adjacency = false;    ///< rank-based adjacency test instead of combinatorial
};

namespace detail {

inline bool rays_adjacent(const std::vector<RatVec>& rows, const std::vector<RatVec>& rays,
                          const std::vector<TightSet>& tights, std::size_t p, std::size_t q,
                          int dim, int lin_dim, int needed_rank, const DDOptions& opts) {
    const TightSet common = tights[p] & tights[q];
    if (std::popcount(common) < needed_rank) return false;
    if (opts.algebraic_adjacency) {
        RatMatrix sub;
        for (std::size_t c = 0; c < rows.size(); ++c)
            if (common & (TightSet{1} << c)) sub.push_back(rows[c]);
        (void)dim;
        (void)lin_dim;
        return matrix_rank(std::move(sub)) == needed_rank;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (r == p || r == q) continue;
        if ((tights[r] & common) == common) return false;
    }
    return true;
}

}  // namespace detail

/// Extreme rays and lineality of the cone {u : row . u <= 0 for each row}.
/// Tight sets are recomputed from scratch at the end, so the output is
/// self-certifying against bookkeeping slips in the incremental phase.
inline ConeGenerators cone_generators(const std::vector<RatVec>& rows,
                                      const std::vector<int>& order,
                                      const DDOptions& opts = {}) {
    const std::size_t m = rows.size();
    if (m > 63) throw SizeLimitError("instance exceeds the 63-constraint desk-scale limit");
    const std::size_t dim = rows.empty() ? 0 : rows[0].size();

    std::vector<RatVec> lineality(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        lineality[i] = RatVec(dim, Rational(0));
        lineality[i][i] = 1;
    }
    std::vector<RatVec> rays;
    std::vector<TightSet> tights;
    TightSet processed = 0;

    for (int c : order) {
        const RatVec& a = rows[c];
        const TightSet cbit = TightSet{1} << c;

        std::size_t hit = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                hit = i;
                break;
            }

        if (hit < lineality.size()) {
            RatVec l0 = lineality[hit];
            Rational s0 = dot(a, l0);
            if (s0 > 0) {
                for (auto& x : l0) x = -x;
                s0 = -s0;
            }
            std::vector<RatVec> new_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == hit) continue;
                RatVec l = lineality[i];
                Rational s = dot(a, l);
                if (s != 0) {
                    Rational f = s / s0;
                    for (std::size_t j = 0; j < dim; ++j) l[j] -= f * l0[j];
                }
                make_primitive(l);
                new_lin.push_back(std::move(l));
            }
            lineality = std::move(new_lin);
            for (std::size_t r = 0; r < rays.size(); ++r) {
                Rational s = dot(a, rays[r]);
                if (s != 0) {
                    Rational f = s / s0;
                    for (std::size_t j = 0; j < dim; ++j) rays[r][j] -= f * l0[j];
                    make_primitive(rays[r]);
                }
                tights[r] |= cbit;
            }
            make_primitive(l0);
            rays.push_back(std::move(l0));
            tights.push_back(processed);
            processed |= cbit;
            continue;
        }

        std::vector<std::size_t> plus, minus;
        std::vector<Rational> vals(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            vals[r] = dot(a, rays[r]);
            if (vals[r] > 0)
                plus.push_back(r);
            else if (vals[r] < 0)
                minus.push_back(r);
            else
                tights[r] |= cbit;
        }
        processed |= cbit;
        if (plus.empty()) continue;

        const int needed_rank =
            static_cast<int>(dim) - static_cast<int>(lineality.size()) - 2;
        std::vector<RatVec> new_rays;
        std::vector<TightSet> new_tights;
        for (std::size_t p : plus)
            for (std::size_t q : minus) {
                if (!detail::rays_adjacent(rows, rays, tights, p, q, static_cast<int>(dim),
                                           static_cast<int>(lineality.size()), needed_rank, opts))
                    continue;
                RatVec w(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    w[j] = vals[p] * rays[q][j] - vals[q] * rays[p][j];
                make_primitive(w);
                new_rays.push_back(std::move(w));
                new_tights.push_back((tights[p] & tights[q]) | cbit);
            }

        std::vector<RatVec> kept;
        std::vector<TightSet> kept_tights;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (vals[r] > 0) continue;
            kept.push_back(std::move(rays[r]));
            kept_tights.push_back(tights[r]);
        }
        for (std::size_t r = 0; r < new_rays.size(); ++r) {
            kept.push_back(std::move(new_rays[r]));
            kept_tights.push_back(new_tights[r]);
        }
        rays = std::move(kept);
        tights = std::move(kept_tights);
    }

    ConeGenerators out;
    out.lineality = std::move(lineality);
    out.rays = std::move(rays);
    out.ray_tight.resize(out.rays.size());
    for (std::size_t r = 0; r < out.rays.size(); ++r) {
        TightSet t = 0;
        for (std::size_t c = 0; c < m; ++c) {
            Rational s = dot(rows[c], out.rays[r]);
            if (s > 0) throw std::logic_error("double description produced an infeasible ray");
            if (s == 0) t |= TightSet{1} << c;
        }
        out.ray_tight[r] = t;
    }
    return out;
}

inline ConeGenerators cone_generators(const std::vector<RatVec>& rows, const DDOptions& opts = {}) {
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    return cone_generators(rows, order, opts);
}

/// Vertices and extreme rays of {x : A x <= b}, obtained from the
/// homogenization {(x,t) : A x - b t <= 0, t >= 0}. Tight sets refer to
/// the rows of A. `pointed` is false when a lineality direction survives,
/// in which case vertices are meaningless and left empty.
struct VertexRaySet {
    std::vector<RatVec> vertices;
    std::vector<TightSet> vertex_tight;
    std::vector<RatVec> rays;
    std::vector<TightSet> ray_tight;
    bool pointed = true;
};

inline VertexRaySet polyhedron_generators(const RatMatrix& A, const RatVec& b,
                                          const DDOptions& opts = {}) {
    const std::size_t m = A.size();
    if (m != b.size()) throw std::invalid_argument("constraint matrix/rhs size mismatch");
    if (m > 62) throw SizeLimitError("instance exceeds the 62-constraint desk-scale limit");
    const std::size_t d = m ? A[0].size() : 0;

    std::vector<RatVec> rows(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i] = A[i];
        rows[i].push_back(-b[i]);
    }
    rows[m] = RatVec(d + 1, Rational(0));
    rows[m][d] = -1;  // t >= 0

    std::vector<int> order(m + 1);
    order[0] = static_cast<int>(m);  // homogenization row first
    std::iota(order.begin() + 1, order.end(), 0);

    ConeGenerators cone = cone_generators(rows, order, opts);

    VertexRaySet out;
    if (!cone.lineality.empty()) {
        out.pointed = false;
        return out;
    }
    for (std::size_t r = 0; r < cone.rays.size(); ++r) {
        RatVec v = cone.rays[r];
        const Rational t = v[d];
        v.pop_back();
        const TightSet tight = cone.ray_tight[r] & ((TightSet{1} << m) - 1);
        if (t > 0) {
            for (auto& c : v) c /= t;
            out.vertices.push_back(std::move(v));
            out.vertex_tight.push_back(tight);
        } else {
            out.rays.push_back(std::move(v));
            out.ray_tight.push_back(tight);
        }
    }
    return out;
}

/// One face of a polyhedron, identified by its exact tight set.
struct PolyFace {
    TightSet tight = 0;
    std::vector<int> vertices;  ///< indices into VertexRaySet::vertices
    std::vector<int> rays;      ///< indices into VertexRaySet::rays
    bool bounded() const { return rays.empty(); }
};

/// All nonempty faces (including the polyhedron itself) of a pointed
/// polyhedron given by its V-description, or only the bounded ones.
/// Faces are found as tight-set closures of vertex/ray subsets.
inline std::vector<PolyFace> face_lattice(const VertexRaySet& vr, std::size_t num_constraints,
                                          bool bounded_only) {
    if (!vr.pointed) throw std::invalid_argument("face lattice requires a pointed polyhedron");
    std::vector<PolyFace> out;
    if (vr.vertices.empty()) return out;

    const std::size_t nv = vr.vertices.size(), nr = vr.rays.size();
    std::map<TightSet, std::size_t> seen;

    auto close = [&](TightSet mask) -> PolyFace {
        PolyFace f;
        TightSet t = ~TightSet{0};
        for (std::size_t v = 0; v < nv; ++v)
            if ((vr.vertex_tight[v] & mask) == mask) {
                f.vertices.push_back(static_cast<int>(v));
                t &= vr.vertex_tight[v];
            }
        for (std::size_t r = 0; r < nr; ++r)
            if ((vr.ray_tight[r] & mask) == mask) {
                f.rays.push_back(static_cast<int>(r));
                t &= vr.ray_tight[r];
            }
        f.tight = t & ((num_constraints >= 64 ? ~TightSet{0} : (TightSet{1} << num_constraints) - 1));
        return f;
    };

    std::vector<std::size_t> queue;
    auto visit = [&](TightSet mask) {
        PolyFace f = close(mask);
        if (f.vertices.empty()) return;  // pointed: every face carries a vertex
        if (bounded_only && !f.rays.empty()) return;
        auto [it, fresh] = seen.emplace(f.tight, out.size());
        if (!fresh) return;
        queue.push_back(out.size());
        out.push_back(std::move(f));
    };

    if (bounded_only) {
        for (std::size_t v = 0; v < nv; ++v) visit(vr.vertex_tight[v]);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            PolyFace f = out[queue[qi]];
            for (std::size_t v = 0; v < nv; ++v) visit(f.tight & vr.vertex_tight[v]);
        }
    } else {
        visit(0);  // the whole polyhedron
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            PolyFace f = out[queue[qi]];
            for (std::size_t c = 0; c < num_constraints; ++c) {
                const TightSet cbit = TightSet{1} << c;
                if (f.tight & cbit) continue;
                visit(f.tight | cbit);
            }
        }
    }
    return out;
}

/// Affine dimension of a face from its tight constraint rows: the ambient
/// dimension minus the rank of the tight system.
inline int face_dimension(const PolyFace& f, const RatMatrix& A) {
    RatMatrix sub;
    for (std::size_t c = 0; c < A.size(); ++c)
        if (f.tight & (TightSet{1} << c)) sub.push_back(A[c]);
    const int d = A.empty() ? 0 : static_cast<int>(A[0].size());
    return d - matrix_rank(std::move(sub));
}

}  // namespace tropical

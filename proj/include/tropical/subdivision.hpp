#pragma once

#include <tropical/cells.hpp>
#include <tropical/core.hpp>
#include <tropical/envelope.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace tropical {

struct TropicalDeterminant {
    Rational value;     ///< min over permutations of the diagonal sums
    bool singular = false;  ///< the minimum is attained by two or more permutations
};

/// Exhaustive tropical determinant, exact over the rationals. Capped at
/// 8x8 (40320 permutations) to stay within desk scale.
inline TropicalDeterminant trop_det(const RatMatrix& M) {
    const std::size_t k = M.size();
    if (k == 0) throw std::invalid_argument("tropical determinant of an empty matrix");
    if (k > 8) throw SizeLimitError("tropical determinant capped at 8x8");
    for (const auto& row : M)
        if (row.size() != k) throw std::invalid_argument("tropical determinant needs a square matrix");

    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<Rational> best;
    int attained = 0;
    do {
        Rational sum(0);
        for (std::size_t i = 0; i < k; ++i) sum += M[i][perm[i]];
        if (!best || sum < *best) {
            best = sum;
            attained = 1;
        } else if (sum == *best) {
            ++attained;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {*best, attained >= 2};
}

/// A cell of the dual subdivision of a product of two simplices: the set
/// of vertex pairs (e_i, e_j) whose defining equalities cut out a face of
/// the envelope polyhedron. Interior cells come from bounded faces.
struct SubdivisionCell {
    std::vector<std::pair<int, int>> pairs;  ///< sorted (generator, coordinate) pairs
    friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
    friend auto operator<=>(const SubdivisionCell&, const SubdivisionCell&) = default;

    CellType to_type(std::size_t n) const {
        CellType S(n);
        for (auto [i, j] : pairs) S[static_cast<std::size_t>(j)].push_back(i);
        return S;
    }

    /// A cell is a simplex exactly when its bipartite pair graph is a forest.
    bool is_simplex(std::size_t r, std::size_t n) const {
        std::vector<int> parent(r + n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a)
                a = parent[static_cast<std::size_t>(a)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            return a;
        };
        for (auto [i, j] : pairs) {
            int a = find(i), b = find(static_cast<int>(r) + j);
            if (a == b) return false;  // cycle
            parent[static_cast<std::size_t>(a)] = b;
        }
        return true;
    }
};

inline SubdivisionCell subdivision_cell_of(const EnvelopePolyhedron& env, const PolyFace& face) {
    SubdivisionCell cell;
    for (std::size_t i = 0; i < env.r; ++i)
        for (std::size_t j = 0; j < env.n; ++j)
            if (face.tight & (TightSet{1} << env.constraint(i, j)))
                cell.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return cell;
}

/// Interior cells of the regular subdivision dual to the configuration:
/// the tight-pair sets of all bounded envelope faces, all dimensions.
inline std::vector<SubdivisionCell> dual_subdivision(const Configuration& V,
                                                     std::size_t size_limit = 62) {
    EnvelopePolyhedron env = build_envelope(V, size_limit);
    std::vector<SubdivisionCell> cells;
    for (const auto& face : env.faces(true)) cells.push_back(subdivision_cell_of(env, face));
    std::sort(cells.begin(), cells.end());
    return cells;
}

inline bool is_triangulation(const std::vector<SubdivisionCell>& cells, std::size_t r,
                             std::size_t n) {
    return std::all_of(cells.begin(), cells.end(),
                       [&](const SubdivisionCell& c) { return c.is_simplex(r, n); });
}

struct GenericityReport {
    bool generic = false;
    std::vector<int> witness_rows;  ///< offending submatrix when not generic
    std::vector<int> witness_cols;
    bool triangulation = false;     ///< independent route: all interior cells simplices
};

namespace detail {

template <typename Visit>
void for_each_subset(std::size_t total, std::size_t k, Visit visit) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t t = k;
        while (t > 0 && idx[t - 1] == static_cast<int>(total - k + t - 1)) --t;
        if (t == 0) return;
        ++idx[t - 1];
        for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
}

}  // namespace detail

/// Genericity of a configuration with r >= n: no k x k submatrix is
/// tropically singular for 2 <= k <= n. The minor scan and the
/// all-interior-cells-are-simplices route are both evaluated and must
/// agree; the first offending submatrix is reported as witness.
inline GenericityReport is_generic(const Configuration& V, std::size_t size_limit = 62) {
    const std::size_t r = V.rows(), n = V.cols();
    if (r < n)
        throw std::invalid_argument(
            "genericity scan requires r >= n; apply it to the transpose instead");

    GenericityReport report;
    report.generic = true;
    for (std::size_t k = 2; k <= n && report.generic; ++k) {
        detail::for_each_subset(r, k, [&](const std::vector<int>& rows) {
            if (!report.generic) return;
            detail::for_each_subset(n, k, [&](const std::vector<int>& cols) {
                if (!report.generic) return;
                RatMatrix sub(k, RatVec(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b)
                        sub[a][b] = V(static_cast<std::size_t>(rows[a]),
                                      static_cast<std::size_t>(cols[b]));
                if (trop_det(sub).singular) {
                    report.generic = false;
                    report.witness_rows = rows;
                    report.witness_cols = cols;
                }
            });
        });
    }

    report.triangulation = is_triangulation(dual_subdivision(V, size_limit), r, n);
    if (report.generic != report.triangulation)
        throw std::logic_error("minor scan and subdivision route disagree on genericity");
    return report;
}

namespace detail {

inline long long binomial(long long m, long long t) {
    if (t < 0 || t > m) return 0;
    t = std::min(t, m - t);
    long long out = 1;
    for (long long i = 1; i <= t; ++i) out = out * (m - t + i) / i;
    return out;
}

}  // namespace detail

/// The f-vector shared by every generic configuration of r generators in
/// n coordinates: entry k counts bounded cells of dimension k and equals
/// the multinomial coefficient (r+n-k-2; r-k-1, n-k-1, k).
inline std::vector<long> generic_f_vector(std::size_t r, std::size_t n) {
    if (r == 0 || n == 0) throw std::invalid_argument("generic_f_vector needs r, n >= 1");
    const std::size_t len = std::min(r, n);
    std::vector<long> f(len);
    for (std::size_t k = 0; k < len; ++k) {
        const long long a = static_cast<long long>(r) - static_cast<long long>(k) - 1;
        const long long b = static_cast<long long>(n) - static_cast<long long>(k) - 1;
        const long long c = static_cast<long long>(k);
        f[k] = static_cast<long>(detail::binomial(a + b + c, c) * detail::binomial(a + b, b));
    }
    return f;
}

/// The two complexes of a matrix (rows as generators, columns as
/// generators) together with the duality maps between them.
struct DualityTransport {
    TropicalComplex row_complex;  ///< bounded complex of the row configuration
    TropicalComplex col_complex;  ///< bounded complex of the column configuration
    bool maps_verified = false;   ///< forward/backward are mutually inverse on every cell
    bool poset_isomorphic = false;  ///< type transposition is a dim-preserving bijection
};

inline CellType transpose_type(const CellType& S, std::size_t r) {
    CellType T(r);
    for (std::size_t j = 0; j < S.size(); ++j)
        for (int i : S[j]) T[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
    for (auto& Ti : T) std::sort(Ti.begin(), Ti.end());
    return T;
}

/// Forward duality map z -> M (.) (-z).
inline ProjectivePoint duality_forward(const Configuration& M, const ProjectivePoint& z) {
    RatVec neg = z.coords();
    for (auto& c : neg) c = -c;
    return normalize(mat_vec_right(M, neg));
}

/// Backward duality map y -> (-y) (.) M.
inline ProjectivePoint duality_backward(const Configuration& M, const ProjectivePoint& y) {
    RatVec neg = y.coords();
    for (auto& c : neg) c = -c;
    return normalize(mat_vec_left(neg, M));
}

inline DualityTransport duality_transport(const Configuration& M, std::size_t size_limit = 62) {
    DualityTransport out;
    out.row_complex = enumerate_complex(M, true, size_limit);
    out.col_complex = enumerate_complex(M.transposed(), true, size_limit);

    const std::size_t r = M.rows();
    out.poset_isomorphic = out.row_complex.cells.size() == out.col_complex.cells.size();
    out.maps_verified = true;
    for (const auto& cell : out.row_complex.cells) {
        const Cell* dual = out.col_complex.find(transpose_type(cell.type, r));
        if (!dual || dual->dim != cell.dim) {
            out.poset_isomorphic = false;
            break;
        }
        std::set<RatVec> dual_verts;
        for (int vid : dual->vertex_ids)
            dual_verts.insert(out.col_complex.vertices[static_cast<std::size_t>(vid)].coords());

        std::set<RatVec> mapped;
        RatVec centroid(M.cols(), Rational(0));
        for (int vid : cell.vertex_ids) {
            const ProjectivePoint& z = out.row_complex.vertices[static_cast<std::size_t>(vid)];
            ProjectivePoint y = duality_forward(M, z);
            mapped.insert(y.coords());
            if (duality_backward(M, y) != z) out.maps_verified = false;
            for (std::size_t j = 0; j < M.cols(); ++j) centroid[j] += z[j];
        }
        if (mapped != dual_verts) out.maps_verified = false;
        if (!cell.vertex_ids.empty()) {
            for (auto& c : centroid) c /= Rational(static_cast<long>(cell.vertex_ids.size()));
            ProjectivePoint zc = normalize(std::move(centroid));
            if (duality_backward(M, duality_forward(M, zc)) != zc) out.maps_verified = false;
        }
    }
    return out;
}

/// Draws integer configurations until the genericity certificate passes;
/// configurations with r < n are certified through their transpose.
inline Configuration random_generic_configuration(std::size_t r, std::size_t n,
                                                  std::mt19937_64& rng,
                                                  std::size_t size_limit = 62) {
    std::uniform_int_distribution<long> entry(0, static_cast<long>(4 * r * n));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RatMatrix m(r, RatVec(n));
        for (auto& row : m)
            for (auto& c : row) c = entry(rng);
        Configuration V(std::move(m));
        const GenericityReport rep =
            r >= n ? is_generic(V, size_limit) : is_generic(V.transposed(), size_limit);
        if (rep.generic) return V;
    }
    throw std::runtime_error("failed to draw a generic configuration");
}

}  // namespace tropical

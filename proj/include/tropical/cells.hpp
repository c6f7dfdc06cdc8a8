#pragma once

#include <tropical/core.hpp>
#include <tropical/dd.hpp>
#include <tropical/envelope.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropical {

/// The combinatorial label of a cell: an n-tuple of generator index sets,
/// entry j listing the generators whose shifted copies touch the point in
/// coordinate j. Index sets are kept sorted; indices are 0-based.
using CellType = std::vector<std::vector<int>>;

inline std::string to_string(const CellType& S) {
    std::string s = "(";
    for (std::size_t j = 0; j < S.size(); ++j) {
        if (j) s += ",";
        s += "{";
        for (std::size_t t = 0; t < S[j].size(); ++t) {
            if (t) s += ",";
            s += std::to_string(S[j][t] + 1);
        }
        s += "}";
    }
    return s + ")";
}

/// The type of x relative to V: i is in S_j when v_ij - x_j attains
/// min_k (v_ik - x_k). Every generator lands in at least one entry.
inline CellType type_of(const Configuration& V, const ProjectivePoint& x) {
    if (x.dim() != V.cols()) throw std::invalid_argument("dimension mismatch in type_of");
    CellType S(V.cols());
    for (std::size_t i = 0; i < V.rows(); ++i) {
        Rational best = V(i, 0) - x[0];
        for (std::size_t j = 1; j < V.cols(); ++j) best = std::min(best, Rational(V(i, j) - x[j]));
        for (std::size_t j = 0; j < V.cols(); ++j)
            if (V(i, j) - x[j] == best) S[j].push_back(static_cast<int>(i));
    }
    return S;
}

/// Same label computed through the fan picture: i lands in S_j when
/// x_j - v_ij attains max_k (x_k - v_ik). Cross-check route for type_of.
inline CellType fan_type_of(const Configuration& V, const ProjectivePoint& x) {
    if (x.dim() != V.cols()) throw std::invalid_argument("dimension mismatch in fan_type_of");
    CellType S(V.cols());
    for (std::size_t i = 0; i < V.rows(); ++i) {
        Rational best = x[0] - V(i, 0);
        for (std::size_t j = 1; j < V.cols(); ++j) best = std::max(best, Rational(x[j] - V(i, j)));
        for (std::size_t j = 0; j < V.cols(); ++j)
            if (x[j] - V(i, j) == best) S[j].push_back(static_cast<int>(i));
    }
    return S;
}

/// A cell is bounded exactly when every entry of its type is nonempty.
inline bool is_bounded(const CellType& S) {
    for (const auto& Sj : S)
        if (Sj.empty()) return false;
    return true;
}

/// X_T is a face of X_S exactly when S is contained in T entrywise.
inline bool face_of(const CellType& S, const CellType& T) {
    if (S.size() != T.size()) return false;
    for (std::size_t j = 0; j < S.size(); ++j)
        if (!std::includes(T[j].begin(), T[j].end(), S[j].begin(), S[j].end())) return false;
    return true;
}

/// Connected-component labels of the type graph on coordinates
/// {0,...,n-1}, where j and k are joined when S_j and S_k share a
/// generator.
inline std::vector<int> type_graph_components(const CellType& S) {
    const std::size_t n = S.size();
    std::vector<int> parent(n);
    for (std::size_t j = 0; j < n; ++j) parent[j] = static_cast<int>(j);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            bool meet = false;
            std::size_t pj = 0, pk = 0;
            while (pj < S[j].size() && pk < S[k].size()) {
                if (S[j][pj] == S[k][pk]) {
                    meet = true;
                    break;
                }
                (S[j][pj] < S[k][pk]) ? ++pj : ++pk;
            }
            if (meet) parent[find(static_cast<int>(j))] = find(static_cast<int>(k));
        }
    std::vector<int> comp(n);
    std::map<int, int> relabel;
    for (std::size_t j = 0; j < n; ++j) {
        int root = find(static_cast<int>(j));
        auto [it, fresh] = relabel.emplace(root, static_cast<int>(relabel.size()));
        comp[j] = it->second;
    }
    return comp;
}

/// Dimension of a realized cell: one less than the number of connected
/// components of its type graph. Rejects labels in which some generator
/// is missing entirely.
inline int cell_dimension(const CellType& S, std::size_t n) {
    if (S.size() != n) throw std::invalid_argument("type length does not match dimension");
    std::set<int> seen;
    int max_index = -1;
    for (const auto& Sj : S)
        for (int i : Sj) {
            seen.insert(i);
            max_index = std::max(max_index, i);
        }
    if (max_index < 0 || static_cast<int>(seen.size()) != max_index + 1)
        throw std::invalid_argument("unrealized type: some generator occurs in no entry");
    auto comp = type_graph_components(S);
    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    return ncomp - 1;
}

/// One difference constraint x_k - x_j <= rhs.
struct DifferenceInequality {
    int j = 0, k = 0;
    Rational rhs;
    friend bool operator==(const DifferenceInequality&, const DifferenceInequality&) = default;
};

/// The H-description of X_S: x_k - x_j <= v_ik - v_ij for every j, every
/// i in S_j and every k. The list is emitted verbatim, redundant rows
/// included.
inline std::vector<DifferenceInequality> cell_inequalities(const Configuration& V,
                                                           const CellType& S) {
    if (S.size() != V.cols()) throw std::invalid_argument("type length does not match configuration");
    std::vector<DifferenceInequality> out;
    for (std::size_t j = 0; j < S.size(); ++j)
        for (int i : S[j]) {
            if (i < 0 || static_cast<std::size_t>(i) >= V.rows())
                throw std::invalid_argument("type refers to a generator outside the configuration");
            for (std::size_t k = 0; k < V.cols(); ++k) {
                if (k == j) continue;
                out.push_back({static_cast<int>(j), static_cast<int>(k), V(i, k) - V(i, j)});
            }
        }
    return out;
}

/// Membership in X_S: the point satisfies the cell inequalities,
/// equivalently S is contained in its type.
inline bool cell_contains(const Configuration& V, const CellType& S, const ProjectivePoint& x) {
    for (const auto& q : cell_inequalities(V, S))
        if (x[q.k] - x[q.j] > q.rhs) return false;
    return true;
}

namespace detail {

/// Gauge-fixes x_0 = 0 and merges duplicate (j,k) pairs by the tightest
/// bound, yielding an H-polyhedron in R^{n-1}.
inline std::pair<RatMatrix, RatVec> difference_system_rows(
    const std::vector<DifferenceInequality>& system, std::size_t n) {
    std::map<std::pair<int, int>, Rational> merged;
    for (const auto& q : system) {
        if (q.j == q.k || q.j < 0 || q.k < 0 || static_cast<std::size_t>(q.j) >= n ||
            static_cast<std::size_t>(q.k) >= n)
            throw std::invalid_argument("malformed difference inequality");
        auto key = std::make_pair(q.j, q.k);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, q.rhs);
        else
            it->second = std::min(it->second, q.rhs);
    }
    RatMatrix A;
    RatVec b;
    for (const auto& [jk, rhs] : merged) {
        RatVec row(n - 1, Rational(0));
        if (jk.second >= 1) row[jk.second - 1] += 1;
        if (jk.first >= 1) row[jk.first - 1] -= 1;
        A.push_back(std::move(row));
        b.push_back(rhs);
    }
    return {std::move(A), std::move(b)};
}

inline ProjectivePoint gauge_point(const RatVec& u) {
    RatVec x(u.size() + 1, Rational(0));
    for (std::size_t j = 0; j < u.size(); ++j) x[j + 1] = u[j];
    return normalize(std::move(x));
}

}  // namespace detail

/// Ordinary vertices of a bounded cell X_S, as projective points. The
/// list is empty when X_S is empty.
inline std::vector<ProjectivePoint> cell_vertices(const Configuration& V, const CellType& S) {
    if (!is_bounded(S)) throw std::invalid_argument("cell_vertices requires a bounded type");
    if (V.cols() == 1) return {normalize(RatVec{Rational(0)})};
    auto [A, b] = detail::difference_system_rows(cell_inequalities(V, S), V.cols());
    auto vr = polyhedron_generators(A, b);
    if (!vr.pointed || !vr.rays.empty())
        throw std::logic_error("bounded type produced an unbounded polyhedron");
    std::vector<ProjectivePoint> out;
    out.reserve(vr.vertices.size());
    for (const auto& u : vr.vertices) out.push_back(detail::gauge_point(u));
    std::sort(out.begin(), out.end());
    return out;
}

/// Realizes a difference-constraint polytope as the cell of type
/// (1,2,...,n) of an n-generator configuration: generator i carries the
/// bounds on x_k - x_i, absent bounds filled with a large constant.
inline Configuration build_cell_from_inequalities(std::size_t n,
                                                  const std::vector<DifferenceInequality>& system) {
    if (n == 0) throw std::invalid_argument("ambient dimension must be positive");
    Rational max_abs(0);
    for (const auto& q : system) {
        Rational a = q.rhs < 0 ? Rational(-q.rhs) : q.rhs;
        max_abs = std::max(max_abs, a);
    }
    const Rational big = 1 + 2 * max_abs;
    RatMatrix v(n, RatVec(n, big));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 0;
    for (const auto& q : system) {
        if (q.j == q.k || q.j < 0 || q.k < 0 || static_cast<std::size_t>(q.j) >= n ||
            static_cast<std::size_t>(q.k) >= n)
            throw std::invalid_argument("malformed difference inequality");
        v[q.j][q.k] = std::min(v[q.j][q.k], q.rhs);
    }
    return Configuration(std::move(v));
}

/// The identity-like type (S_j = {j}) whose cell build_cell_from_inequalities targets.
inline CellType diagonal_type(std::size_t n) {
    CellType S(n);
    for (std::size_t j = 0; j < n; ++j) S[j] = {static_cast<int>(j)};
    return S;
}

/// One cell of the decomposition induced by a configuration.
struct Cell {
    CellType type;
    int dim = 0;
    bool bounded = false;
    std::vector<int> vertex_ids;  ///< indices into TropicalComplex::vertices
    RatMatrix rays;               ///< recession directions, first coordinate gauged to 0
};

/// The cell decomposition of tropical projective space induced by a
/// configuration (all cells), or its bounded subcomplex. Cells are in
/// bijection with the faces of the envelope polyhedron whose tight pairs
/// cover every generator; labels, boundedness and dimensions all come
/// from that correspondence.
struct TropicalComplex {
    Configuration config;
    bool bounded_only = false;
    std::vector<ProjectivePoint> vertices;          ///< deduplicated 0-skeleton support
    std::vector<Cell> cells;                        ///< sorted by (dim, type)
    std::vector<std::pair<int, int>> face_relations;  ///< (a,b): cell b is a face of cell a
    std::vector<long> f_vector;                     ///< cells per dimension

    const Cell* find(const CellType& S) const {
        for (const auto& c : cells)
            if (c.type == S) return &c;
        return nullptr;
    }

    std::set<CellType> type_set() const {
        std::set<CellType> out;
        for (const auto& c : cells) out.insert(c.type);
        return out;
    }

    int max_dim() const {
        int d = -1;
        for (const auto& c : cells) d = std::max(d, c.dim);
        return d;
    }
};

inline TropicalComplex enumerate_complex_from_envelope(const EnvelopePolyhedron& env,
                                                       const Configuration& V, bool bounded_only) {
    const std::size_t r = V.rows(), n = V.cols();

    struct Raw {
        CellType type;
        int dim;
        bool bounded;
        std::vector<ProjectivePoint> verts;
        RatMatrix rays;
    };
    std::vector<Raw> raws;

    for (const auto& face : env.faces(bounded_only)) {
        CellType S(n);
        std::vector<bool> covered(r, false);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (face.tight & (TightSet{1} << env.constraint(i, j))) {
                    S[j].push_back(static_cast<int>(i));
                    covered[i] = true;
                }
        if (!std::all_of(covered.begin(), covered.end(), [](bool c) { return c; })) continue;

        Raw raw;
        raw.type = std::move(S);
        raw.bounded = face.bounded();
        if (raw.bounded != is_bounded(raw.type))
            throw std::logic_error("boundedness flag disagrees with the type criterion");
        raw.dim = cell_dimension(raw.type, n);
        for (int vid : face.vertices) {
            RatVec z = env.z_of(env.vr.vertices[vid]);
            raw.verts.push_back(normalize(std::move(z)));
        }
        for (int rid : face.rays) {
            RatVec z = env.z_of(env.vr.rays[rid]);
            const Rational shift = z[0];
            for (auto& c : z) c -= shift;
            make_primitive(z);
            raw.rays.push_back(std::move(z));
        }
        std::sort(raw.rays.begin(), raw.rays.end());
        raws.push_back(std::move(raw));
    }

    std::sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.type < b.type;
    });

    TropicalComplex out;
    out.config = V;
    out.bounded_only = bounded_only;
    std::map<RatVec, int> vertex_id;
    for (const auto& raw : raws)
        for (const auto& p : raw.verts) vertex_id.emplace(p.coords(), 0);
    for (auto& [coords, id] : vertex_id) {
        id = static_cast<int>(out.vertices.size());
        out.vertices.push_back(normalize(coords));
    }
    for (auto& raw : raws) {
        Cell cell;
        cell.type = std::move(raw.type);
        cell.dim = raw.dim;
        cell.bounded = raw.bounded;
        for (const auto& p : raw.verts) cell.vertex_ids.push_back(vertex_id.at(p.coords()));
        std::sort(cell.vertex_ids.begin(), cell.vertex_ids.end());
        cell.rays = std::move(raw.rays);
        out.cells.push_back(std::move(cell));
    }

    for (std::size_t a = 0; a < out.cells.size(); ++a)
        for (std::size_t b = 0; b < out.cells.size(); ++b)
            if (a != b && face_of(out.cells[a].type, out.cells[b].type))
                out.face_relations.emplace_back(static_cast<int>(a), static_cast<int>(b));

    out.f_vector.assign(static_cast<std::size_t>(std::max(out.max_dim() + 1, 1)), 0);
    for (const auto& c : out.cells) ++out.f_vector[static_cast<std::size_t>(c.dim)];
    return out;
}

inline TropicalComplex enumerate_complex(const Configuration& V, bool bounded_only,
                                         std::size_t size_limit = 62) {
    if (V.rows() == 0) throw std::invalid_argument("enumerate_complex needs at least one generator");
    EnvelopePolyhedron env = build_envelope(V, size_limit);
    return enumerate_complex_from_envelope(env, V, bounded_only);
}

}  // namespace tropical

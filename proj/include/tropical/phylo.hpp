#pragma once

#include <tropical/core.hpp>
#include <tropical/envelope.hpp>
#include <tropical/hull.hpp>
#include <tropical/subdivision.hpp>

#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropical {

/// A finite semimetric: symmetric nonnegative rational matrix with zero
/// diagonal. The triangle inequality is certified separately by is_metric.
class MetricMatrix {
public:
    explicit MetricMatrix(RatMatrix d) : d_(std::move(d)) {
        const std::size_t n = d_.size();
        if (n == 0) throw std::invalid_argument("metric needs at least one point");
        for (std::size_t i = 0; i < n; ++i) {
            if (d_[i].size() != n) throw std::invalid_argument("metric matrix must be square");
            if (d_[i][i] != 0) throw std::invalid_argument("metric diagonal must be zero");
            for (std::size_t j = 0; j < n; ++j) {
                if (d_[i][j] < 0) throw std::invalid_argument("metric entries must be nonnegative");
                if (d_[i][j] != d_[j][i]) throw std::invalid_argument("metric matrix must be symmetric");
            }
        }
    }

    std::size_t size() const { return d_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i][j]; }
    const RatMatrix& matrix() const { return d_; }

    /// The configuration whose hull is the tropical polytope of the metric:
    /// the rows of -D.
    Configuration negated_configuration() const {
        RatMatrix m(size(), RatVec(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) m[i][j] = -d_[i][j];
        return Configuration(std::move(m));
    }

private:
    RatMatrix d_;
};

/// Triangle-inequality certificate, computed along two independent routes
/// that must agree: the inequalities themselves, and tropical singularity
/// of every principal 3x3 minor of -D.
inline bool is_metric(const MetricMatrix& D) {
    const std::size_t n = D.size();
    bool triangles = true;
    for (std::size_t i = 0; i < n && triangles; ++i)
        for (std::size_t j = 0; j < n && triangles; ++j)
            for (std::size_t k = 0; k < n && triangles; ++k)
                if (D(i, j) > D(i, k) + D(j, k)) triangles = false;

    bool minors = true;
    for (std::size_t i = 0; i < n && minors; ++i)
        for (std::size_t j = i + 1; j < n && minors; ++j)
            for (std::size_t k = j + 1; k < n && minors; ++k) {
                RatMatrix sub = {{Rational(0), -D(i, j), -D(i, k)},
                                 {-D(i, j), Rational(0), -D(j, k)},
                                 {-D(i, k), -D(j, k), Rational(0)}};
                if (!trop_det(sub).singular) minors = false;
            }

    if (triangles != minors)
        throw std::logic_error("triangle route and minor route disagree on metricity");
    return triangles;
}

struct FourPointReport {
    bool holds = true;
    std::array<int, 4> witness = {-1, -1, -1, -1};  ///< first failing quadruple
};

/// The four point condition: for every quadruple, the maximum of the
/// three pairings d_ij+d_kl, d_ik+d_jl, d_il+d_jk is attained twice.
inline FourPointReport four_point_condition(const MetricMatrix& D) {
    if (!is_metric(D)) throw std::invalid_argument("four point condition needs a metric");
    const std::size_t n = D.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) {
                    const Rational s1 = D(i, j) + D(k, l);
                    const Rational s2 = D(i, k) + D(j, l);
                    const Rational s3 = D(i, l) + D(j, k);
                    const Rational top = std::max({s1, s2, s3});
                    int count = (s1 == top) + (s2 == top) + (s3 == top);
                    if (count < 2)
                        return {false,
                                {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k),
                                 static_cast<int>(l)}};
                }
    return {};
}

namespace detail {

inline bool principal_4x4_singular(const MetricMatrix& D) {
    const std::size_t n = D.size();
    bool all = true;
    for_each_subset(n, std::min<std::size_t>(4, n), [&](const std::vector<int>& idx) {
        if (!all || idx.size() < 4) return;
        RatMatrix sub(4, RatVec(4));
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                sub[a][b] = -D(static_cast<std::size_t>(idx[a]), static_cast<std::size_t>(idx[b]));
        if (!trop_det(sub).singular) all = false;
    });
    return all;
}

inline bool all_4x4_singular(const MetricMatrix& D) {
    const std::size_t n = D.size();
    if (n < 4) return true;
    bool all = true;
    for_each_subset(n, 4, [&](const std::vector<int>& rows) {
        if (!all) return;
        for_each_subset(n, 4, [&](const std::vector<int>& cols) {
            if (!all) return;
            RatMatrix sub(4, RatVec(4));
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b)
                    sub[a][b] =
                        -D(static_cast<std::size_t>(rows[a]), static_cast<std::size_t>(cols[b]));
            if (!trop_det(sub).singular) all = false;
        });
    });
    return all;
}

}  // namespace detail

/// Joint verdict of the equivalent tree-metric characterizations. The
/// polytope route reports the exact dimension of the tropical polytope of
/// -D; it counts as tree-like when that dimension is at most one (zero
/// occurs only for degenerate metrics with coincident points).
struct TreeMetricReport {
    bool four_point = false;
    int dim_PD = -1;
    bool dim_at_most_one = false;
    bool principal_4x4_singular = false;
    bool all_4x4_singular = false;
    bool complex_route_skipped = false;  ///< size limit prevented the polytope route
    bool all_minors_skipped = false;     ///< n too large for the exhaustive non-principal scan
    bool tree_metric = false;
};

inline TreeMetricReport is_tree_metric(const MetricMatrix& D, std::size_t size_limit = 62) {
    if (!is_metric(D)) throw std::invalid_argument("tree-metric test needs a metric");
    const std::size_t n = D.size();
    TreeMetricReport rep;
    rep.four_point = four_point_condition(D).holds;
    rep.principal_4x4_singular = detail::principal_4x4_singular(D);

    if (n <= 8) {
        rep.all_4x4_singular = detail::all_4x4_singular(D);
    } else {
        rep.all_minors_skipped = true;
        rep.all_4x4_singular = rep.four_point;
    }

    if (n * n <= size_limit) {
        TropicalComplex complex = enumerate_complex(D.negated_configuration(), true, size_limit);
        rep.dim_PD = complex.max_dim();
        rep.dim_at_most_one = rep.dim_PD <= 1;
    } else {
        rep.complex_route_skipped = true;
        rep.dim_at_most_one = rep.four_point;
    }

    if (rep.four_point != rep.principal_4x4_singular ||
        (!rep.all_minors_skipped && rep.four_point != rep.all_4x4_singular) ||
        (!rep.complex_route_skipped && rep.four_point != rep.dim_at_most_one))
        throw std::logic_error("tree-metric characterizations disagree");
    rep.tree_metric = rep.four_point;
    return rep;
}

/// Isometric embedding of the metric into its tropical polytope:
/// point i is -(1/2) row_i(D); pairwise projective distances reproduce D.
inline std::vector<ProjectivePoint> embed_metric(const MetricMatrix& D) {
    if (!is_metric(D)) throw std::invalid_argument("embedding needs a metric");
    std::vector<ProjectivePoint> out;
    out.reserve(D.size());
    for (std::size_t i = 0; i < D.size(); ++i) {
        RatVec row(D.size());
        for (std::size_t j = 0; j < D.size(); ++j) row[j] = -D(i, j) / 2;
        out.push_back(normalize(std::move(row)));
    }
    return out;
}

/// One bounded face of the injective hull.
struct TightSpanFace {
    std::vector<int> vertex_ids;  ///< indices into TightSpan::span_vertices
    int dim = 0;
};

/// Isbell's injective hull of a finite metric: the bounded complex of
/// {x : x_i + x_j >= d_ij}, computed exactly. The envelope polyhedron of
/// -D is enumerated alongside; whenever each of its vertices satisfies
/// y = z up to the gauge shift (true for tree metrics), the y-projection
/// is certified against the hull's vertex set. For metrics of higher
/// tropical rank the envelope identity genuinely fails and the flag
/// records that; the hull itself is always the bounded complex of the
/// inequality system.
struct TightSpan {
    RatMatrix span_vertices;                      ///< affine points of the hull, sorted
    std::vector<TightSpanFace> faces;             ///< bounded faces, sorted by (dim, vertices)
    std::vector<long> f_vector;                   ///< bounded faces per dimension
    std::vector<ProjectivePoint> leaf_embedding;  ///< i -> -(1/2) row_i(D)
    TropicalComplex projective_complex;           ///< bounded complex of tconv(rows of -D)
    bool envelope_identity = false;               ///< every envelope vertex satisfied y = z

    int max_dim() const {
        int d = 0;
        for (const auto& f : faces) d = std::max(d, f.dim);
        return d;
    }
};

inline TightSpan tight_span(const MetricMatrix& D, std::size_t size_limit = 62) {
    if (!is_metric(D)) throw std::invalid_argument("tight span needs a metric");
    const std::size_t n = D.size();
    TightSpan span;

    // The defining inequality system x_i + x_j >= d_ij, diagonal included.
    RatMatrix A;
    RatVec b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RatVec row(n, Rational(0));
            row[i] -= 1;
            row[j] -= 1;
            A.push_back(std::move(row));
            b.push_back(-D(i, j));
        }
    VertexRaySet vr = polyhedron_generators(A, b);
    if (!vr.pointed || vr.vertices.empty())
        throw std::logic_error("injective hull polyhedron must be pointed and nonempty");

    std::vector<int> order(vr.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a_, int b_) { return vr.vertices[static_cast<std::size_t>(a_)] <
                                           vr.vertices[static_cast<std::size_t>(b_)]; });
    std::vector<int> rank(vr.vertices.size());
    for (std::size_t t = 0; t < order.size(); ++t) {
        rank[static_cast<std::size_t>(order[t])] = static_cast<int>(t);
        span.span_vertices.push_back(vr.vertices[static_cast<std::size_t>(order[t])]);
    }
    for (const auto& face : face_lattice(vr, A.size(), true)) {
        TightSpanFace f;
        for (int vid : face.vertices) f.vertex_ids.push_back(rank[static_cast<std::size_t>(vid)]);
        std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
        f.dim = face_dimension(face, A);
        span.faces.push_back(std::move(f));
    }
    std::sort(span.faces.begin(), span.faces.end(), [](const TightSpanFace& a, const TightSpanFace& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_ids < b.vertex_ids;
    });
    span.f_vector.assign(static_cast<std::size_t>(span.max_dim()) + 1, 0);
    for (const auto& f : span.faces) ++span.f_vector[static_cast<std::size_t>(f.dim)];

    // Envelope route and the y = z certificate.
    Configuration neg = D.negated_configuration();
    EnvelopePolyhedron env = build_envelope(neg, size_limit);
    span.projective_complex = enumerate_complex_from_envelope(env, neg, true);
    span.envelope_identity = true;
    std::set<RatVec> projected;
    for (const auto& u : env.vr.vertices) {
        RatVec y = env.y_of(u), z = env.z_of(u);
        const Rational shift = z[0] - y[0];
        for (std::size_t j = 0; j < n && span.envelope_identity; ++j)
            if (z[j] - y[j] != shift) span.envelope_identity = false;
        if (!span.envelope_identity) break;
        RatVec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = -(y[j] + shift / 2);
        projected.insert(std::move(x));
    }
    if (span.envelope_identity) {
        std::set<RatVec> hull_verts(span.span_vertices.begin(), span.span_vertices.end());
        if (projected != hull_verts)
            throw std::logic_error(
                "envelope y-projection disagrees with the injective hull vertex set");
    }

    span.leaf_embedding = embed_metric(D);
    return span;
}

/// Fixed-point test of the canonical duality involution: -M = M (.) (-M)
/// under the min-plus matrix product. For symmetric nonnegative matrices
/// with zero diagonal this holds exactly when M is a metric.
inline bool involution_fixed(const RatMatrix& M) {
    const std::size_t n = M.size();
    if (n == 0) throw std::invalid_argument("involution test needs a square matrix");
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("involution test needs a square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational best = M[i][0] - M[0][j];
            for (std::size_t k = 1; k < n; ++k) best = std::min(best, Rational(M[i][k] - M[k][j]));
            if (best != -M[i][j]) return false;
        }
    return true;
}

/// Min-plus shortest-path closure: the largest metric dominated by the
/// given symmetric dissimilarity.
inline MetricMatrix metric_closure(RatMatrix d) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], Rational(d[i][k] + d[k][j]));
    return MetricMatrix(std::move(d));
}

/// Random tree metric: a uniform random merge topology on n leaves with
/// integer edge weights in [1, 10]. Deterministic for a fixed seed.
inline MetricMatrix random_tree_metric(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("tree metric needs at least one leaf");
    std::uniform_int_distribution<long> weight(1, 10);

    struct Edge {
        std::size_t a, b;
        Rational w;
    };
    std::vector<Edge> edges;
    std::size_t next_node = n;
    std::vector<std::size_t> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    while (roots.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
        std::size_t ai = pick(rng);
        std::size_t bi = pick(rng);
        while (bi == ai) bi = pick(rng);
        if (ai > bi) std::swap(ai, bi);
        const std::size_t parent = next_node++;
        edges.push_back({roots[ai], parent, Rational(weight(rng))});
        edges.push_back({roots[bi], parent, Rational(weight(rng))});
        roots.erase(roots.begin() + static_cast<long>(bi));
        roots[ai] = parent;
    }

    // All-pairs leaf distances along the tree by repeated relaxation.
    const std::size_t total = next_node;
    std::vector<std::vector<std::optional<Rational>>> dist(
        total, std::vector<std::optional<Rational>>(total));
    for (std::size_t v = 0; v < total; ++v) dist[v][v] = Rational(0);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(total);
    for (const auto& e : edges) {
        adj[e.a].emplace_back(e.b, e.w);
        adj[e.b].emplace_back(e.a, e.w);
    }
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<std::size_t> stack = {src};
        std::vector<bool> seen(total, false);
        seen[src] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto [w, len] : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    dist[src][w] = *dist[src][v] + len;
                    stack.push_back(w);
                }
        }
    }
    RatMatrix d(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = i == j ? Rational(0) : *dist[i][j];
    return MetricMatrix(std::move(d));
}

}  // namespace tropical

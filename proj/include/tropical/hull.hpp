#pragma once

#include <tropical/cells.hpp>
#include <tropical/core.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace tropical {

/// The tropical segment between two points: a concatenation of at most
/// n-1 ordinary segments whose slopes are zero-one directions.
struct SegmentChain {
    std::vector<ProjectivePoint> breakpoints;  ///< first is x, last is y
    std::vector<std::vector<int>> slopes;      ///< 0/1 vectors, one per ordinary piece
};

inline SegmentChain tropical_segment(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch in tropical_segment");
    const std::size_t n = x.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return y[a] - x[a] < y[b] - x[b];
    });

    SegmentChain chain;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational lam = y[order[k]] - x[order[k]];
        RatVec raw(n);
        for (std::size_t j = 0; j < n; ++j) raw[j] = std::min(Rational(lam + x[j]), y[j]);
        ProjectivePoint p = normalize(std::move(raw));
        if (!chain.breakpoints.empty() && chain.breakpoints.back() == p) continue;
        if (!chain.breakpoints.empty()) {
            std::vector<int> slope(n, 0);
            for (std::size_t l = k; l < n; ++l) slope[order[l]] = 1;
            chain.slopes.push_back(std::move(slope));
        }
        chain.breakpoints.push_back(std::move(p));
    }
    return chain;
}

/// Smallest lambda_i with lambda_i (.) v_i (+) x = x, evaluated on the
/// given representative of x against the stored rows:
/// lambda_i = max_j (x_j - v_ij). Shifting the representative of x by
/// c(1,...,1) shifts every lambda_i by c.
inline RatVec lambda_coeffs(const Configuration& V, std::span<const Rational> x_raw) {
    if (x_raw.size() != V.cols()) throw std::invalid_argument("dimension mismatch in lambda_coeffs");
    if (V.rows() == 0) throw std::invalid_argument("lambda_coeffs over empty configuration");
    RatVec lambda(V.rows());
    for (std::size_t i = 0; i < V.rows(); ++i) {
        Rational best = x_raw[0] - V(i, 0);
        for (std::size_t j = 1; j < V.cols(); ++j)
            best = std::max(best, Rational(x_raw[j] - V(i, j)));
        lambda[i] = best;
    }
    return lambda;
}

inline RatVec lambda_coeffs(const Configuration& V, const ProjectivePoint& x) {
    return lambda_coeffs(V, std::span<const Rational>(x.coords()));
}

/// Nearest-point projection onto the hull: the combination of the
/// generators with the lambda coefficients. Fixes the hull pointwise.
inline ProjectivePoint project_onto_hull(const Configuration& V, const ProjectivePoint& x) {
    return t_comb(lambda_coeffs(V, x), V);
}

/// Membership in the tropical hull of the configuration's rows.
inline bool contains(const Configuration& V, const ProjectivePoint& x) {
    if (V.rows() == 0) return false;
    return project_onto_hull(V, x) == x;
}

/// A tropical linear form separating a point from a hull, witnessed at
/// coordinate k: a_k + x_k is the unique minimum at x, while every hull
/// point y has a_k + y_k strictly above min_j (a_j + y_j).
struct SeparatingHyperplane {
    RatVec coefficients;
    int witness = 0;
};

struct InsideCertificate {
    RatVec lambdas;
};
struct OutsideCertificate {
    SeparatingHyperplane hyperplane;
};

/// Exactly one of the two certificates applies to any (V, x) pair.
using HullCertificate = std::variant<InsideCertificate, OutsideCertificate>;

inline bool is_inside(const HullCertificate& c) {
    return std::holds_alternative<InsideCertificate>(c);
}

inline HullCertificate separate(const Configuration& V, const ProjectivePoint& x) {
    RatVec lambda = lambda_coeffs(V, x);
    if (project_onto_hull(V, x) == x) return InsideCertificate{std::move(lambda)};

    CellType S = type_of(V, x);
    std::size_t k = S.size();
    for (std::size_t j = 0; j < S.size(); ++j)
        if (S[j].empty()) {
            k = j;
            break;
        }
    if (k == S.size()) throw std::logic_error("point outside the hull must have an empty type entry");

    // Half the smallest positive slack v_ik + lambda_i - x_k over the rows.
    std::optional<Rational> slack;
    for (std::size_t i = 0; i < V.rows(); ++i) {
        Rational s = V(i, k) + lambda[i] - x[k];
        if (!slack || s < *slack) slack = s;
    }
    if (!slack || *slack <= 0) throw std::logic_error("separation slack must be positive");
    const Rational eps = *slack / 2;

    RatVec a(V.cols());
    for (std::size_t j = 0; j < V.cols(); ++j) a[j] = -x[j];
    a[k] -= eps;
    return OutsideCertificate{SeparatingHyperplane{std::move(a), static_cast<int>(k)}};
}

/// Reduces a combination to at most n generators: for each coordinate,
/// the smallest generator index attaining the minimum is kept.
inline std::vector<int> caratheodory_reduce(const Configuration& V, std::span<const Rational> coeffs,
                                            const ProjectivePoint& x) {
    if (coeffs.size() != V.rows()) throw std::invalid_argument("coefficient count mismatch");
    RatVec raw(V.cols());
    for (std::size_t j = 0; j < V.cols(); ++j) {
        Rational best = coeffs[0] + V(0, j);
        for (std::size_t i = 1; i < V.rows(); ++i) best = std::min(best, Rational(coeffs[i] + V(i, j)));
        raw[j] = best;
    }
    if (normalize(raw) != x)
        throw std::invalid_argument("point is not the combination of the given coefficients");
    std::set<int> picked;
    for (std::size_t j = 0; j < V.cols(); ++j)
        for (std::size_t i = 0; i < V.rows(); ++i)
            if (coeffs[i] + V(i, j) == raw[j]) {
                picked.insert(static_cast<int>(i));
                break;
            }
    return {picked.begin(), picked.end()};
}

inline std::vector<int> caratheodory_reduce(const Configuration& V, const RatVec& coeffs,
                                            const ProjectivePoint& x) {
    return caratheodory_reduce(V, std::span<const Rational>(coeffs), x);
}

namespace detail {

inline Configuration select_rows(const Configuration& V, const std::vector<int>& keep) {
    RatMatrix m;
    for (int i : keep) m.push_back(V.row(static_cast<std::size_t>(i)));
    if (m.empty()) return Configuration::empty(V.cols());
    return Configuration(std::move(m));
}

}  // namespace detail

/// Indices of the unique minimal generating subset, found by deleting,
/// in the given order, every row that the remaining rows still generate.
/// The surviving set does not depend on the order.
inline std::vector<int> minimal_generator_indices(const Configuration& V,
                                                  const std::vector<int>& order) {
    std::vector<bool> alive(V.rows(), true);
    for (int i : order) {
        std::vector<int> rest;
        for (std::size_t t = 0; t < V.rows(); ++t)
            if (alive[t] && static_cast<int>(t) != i) rest.push_back(static_cast<int>(t));
        if (rest.empty()) continue;
        if (contains(detail::select_rows(V, rest), V.normalized_row(static_cast<std::size_t>(i))))
            alive[static_cast<std::size_t>(i)] = false;
    }
    std::vector<int> keep;
    for (std::size_t t = 0; t < V.rows(); ++t)
        if (alive[t]) keep.push_back(static_cast<int>(t));
    return keep;
}

inline std::vector<int> minimal_generator_indices(const Configuration& V) {
    std::vector<int> order(V.rows());
    std::iota(order.begin(), order.end(), 0);
    return minimal_generator_indices(V, order);
}

inline Configuration minimal_generators(const Configuration& V) {
    return detail::select_rows(V, minimal_generator_indices(V));
}

/// A generating set for the intersection of two hulls: ordinary vertices
/// of the pairwise intersections of bounded cells, reduced to the unique
/// minimal generating set. Returns an empty configuration when the hulls
/// are disjoint.
inline Configuration intersect_polytopes(const Configuration& V, const Configuration& W,
                                         std::size_t size_limit = 62) {
    if (V.cols() != W.cols()) throw std::invalid_argument("ambient dimension mismatch");
    const std::size_t n = V.cols();
    TropicalComplex cv = enumerate_complex(V, true, size_limit);
    TropicalComplex cw = enumerate_complex(W, true, size_limit);

    std::set<RatVec> points;
    for (const auto& cs : cv.cells)
        for (const auto& ct : cw.cells) {
            auto system = cell_inequalities(V, cs.type);
            auto more = cell_inequalities(W, ct.type);
            system.insert(system.end(), more.begin(), more.end());
            if (n == 1) {
                points.insert(RatVec{Rational(0)});
                continue;
            }
            auto [A, b] = detail::difference_system_rows(system, n);
            auto vr = polyhedron_generators(A, b);
            for (const auto& u : vr.vertices) points.insert(detail::gauge_point(u).coords());
        }
    if (points.empty()) return Configuration::empty(n);
    RatMatrix rows(points.begin(), points.end());
    return minimal_generators(Configuration(std::move(rows)));
}

}  // namespace tropical

#pragma once

#include <tropical/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>

namespace tropical {

/// Min-plus addition: a (+) b = min(a, b).
inline Rational t_add(const Rational& a, const Rational& b) { return a < b ? a : b; }

/// Min-plus multiplication: a (.) b = a + b.
inline Rational t_mul(const Rational& a, const Rational& b) { return a + b; }

/// A point of tropical projective space: a rational n-vector taken modulo
/// adding multiples of (1,...,1). Stored with first coordinate zero.
class ProjectivePoint {
public:
    explicit ProjectivePoint(RatVec raw) : coords_(std::move(raw)) {
        if (coords_.empty()) throw std::invalid_argument("projective point needs dimension >= 1");
        const Rational shift = coords_[0];
        if (shift != 0)
            for (auto& c : coords_) c -= shift;
    }

    std::size_t dim() const { return coords_.size(); }
    const RatVec& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_ < b.coords_;
    }

private:
    RatVec coords_;
};

/// Canonical representative of a raw vector modulo (1,...,1).
inline ProjectivePoint normalize(RatVec raw) { return ProjectivePoint(std::move(raw)); }

inline std::string to_string(const ProjectivePoint& p) { return to_string(p.coords()); }

/// An ordered configuration of r generators in tropical projective
/// space, kept as the raw r x n matrix. Rows are normalized on access.
class Configuration {
public:
    Configuration() = default;

    explicit Configuration(RatMatrix entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("configuration needs at least one row");
        cols_ = entries_[0].size();
        if (cols_ == 0) throw std::invalid_argument("configuration needs at least one column");
        for (const auto& row : entries_)
            if (row.size() != cols_) throw std::invalid_argument("ragged configuration matrix");
    }

    /// Empty configuration in ambient dimension n (the hull of nothing).
    static Configuration empty(std::size_t n) {
        Configuration c;
        c.cols_ = n;
        return c;
    }

    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return cols_; }

    const RatVec& row(std::size_t i) const { return entries_[i]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const RatMatrix& matrix() const { return entries_; }

    ProjectivePoint normalized_row(std::size_t i) const { return ProjectivePoint(entries_[i]); }

    Configuration transposed() const {
        RatMatrix t(cols_, RatVec(rows()));
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) t[j][i] = entries_[i][j];
        return Configuration(std::move(t));
    }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    RatMatrix entries_;
    std::size_t cols_ = 0;
};

/// Tropical linear combination a_1 (.) v_1 (+) ... (+) a_r (.) v_r.
/// Coordinate j of the raw result is min_i (a_i + v_ij).
inline ProjectivePoint t_comb(std::span<const Rational> coeffs, const Configuration& V) {
    if (coeffs.size() != V.rows())
        throw std::invalid_argument("coefficient count does not match generator count");
    if (V.rows() == 0) throw std::invalid_argument("combination over empty configuration");
    RatVec out(V.cols());
    for (std::size_t j = 0; j < V.cols(); ++j) {
        Rational best = coeffs[0] + V(0, j);
        for (std::size_t i = 1; i < V.rows(); ++i) best = t_add(best, coeffs[i] + V(i, j));
        out[j] = best;
    }
    return normalize(std::move(out));
}

inline ProjectivePoint t_comb(const RatVec& coeffs, const Configuration& V) {
    return t_comb(std::span<const Rational>(coeffs), V);
}

/// (V (.) w)_i = min_j (v_ij + w_j): right action on a length-n vector.
inline RatVec mat_vec_right(const Configuration& V, std::span<const Rational> w) {
    if (w.size() != V.cols()) throw std::invalid_argument("vector length does not match column count");
    RatVec out(V.rows());
    for (std::size_t i = 0; i < V.rows(); ++i) {
        Rational best = V(i, 0) + w[0];
        for (std::size_t j = 1; j < V.cols(); ++j) best = t_add(best, V(i, j) + w[j]);
        out[i] = best;
    }
    return out;
}

inline RatVec mat_vec_right(const Configuration& V, const RatVec& w) {
    return mat_vec_right(V, std::span<const Rational>(w));
}

/// (u (.) V)_j = min_i (u_i + v_ij): left action on a length-r vector.
inline RatVec mat_vec_left(std::span<const Rational> u, const Configuration& V) {
    if (u.size() != V.rows()) throw std::invalid_argument("vector length does not match row count");
    RatVec out(V.cols());
    for (std::size_t j = 0; j < V.cols(); ++j) {
        Rational best = u[0] + V(0, j);
        for (std::size_t i = 1; i < V.rows(); ++i) best = t_add(best, u[i] + V(i, j));
        out[j] = best;
    }
    return out;
}

inline RatVec mat_vec_left(const RatVec& u, const Configuration& V) {
    return mat_vec_left(std::span<const Rational>(u), V);
}

/// Projective infinity-norm distance: max over i<j of |x_i + y_j - x_j - y_i|,
/// equivalently the spread of x - y. A genuine metric on projective classes.
inline Rational proj_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch in proj_distance");
    Rational lo = x[0] - y[0], hi = lo;
    for (std::size_t i = 1; i < x.dim(); ++i) {
        Rational d = x[i] - y[i];
        if (d < lo) lo = d;
        if (d > hi) hi = d;
    }
    return hi - lo;
}

}  // namespace tropical

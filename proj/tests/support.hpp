#pragma once

#include <tropical/core.hpp>

#include <random>

// Shared helpers for the test suites: deterministic generators of small
// rationals, points and configurations.
namespace testsupport {

using tropical::Configuration;
using tropical::ProjectivePoint;
using tropical::Rational;
using tropical::RatMatrix;
using tropical::RatVec;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -12, int hi = 12, int max_den = 4) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline RatVec random_vector(Rng& rng, std::size_t n, int lo = -12, int hi = 12, int max_den = 4) {
    RatVec v(n);
    for (auto& c : v) c = random_rational(rng, lo, hi, max_den);
    return v;
}

inline ProjectivePoint random_point(Rng& rng, std::size_t n, int lo = -12, int hi = 12,
                                    int max_den = 4) {
    return tropical::normalize(random_vector(rng, n, lo, hi, max_den));
}

inline Configuration random_configuration(Rng& rng, std::size_t r, std::size_t n, int lo = -12,
                                          int hi = 12, int max_den = 1) {
    RatMatrix m(r);
    for (auto& row : m) row = random_vector(rng, n, lo, hi, max_den);
    return Configuration(std::move(m));
}

inline RatVec vec(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline ProjectivePoint point(std::initializer_list<long> xs) { return tropical::normalize(vec(xs)); }

inline Configuration config(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m;
    for (const auto& r : rows) m.push_back(vec(r));
    return Configuration(std::move(m));
}

// The three-generator configuration used throughout the library's examples.
inline Configuration triangle3() { return config({{0, 0, 2}, {0, 2, 0}, {0, 1, -2}}); }

}  // namespace testsupport

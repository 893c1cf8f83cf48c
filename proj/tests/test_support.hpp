#pragma once

#include <cmath>
#include <random>

#include "qmem/core.hpp"

namespace qtest {

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
    return std::pow(10.0, uniform(g, std::log10(lo), std::log10(hi)));
}

/// Haar-random pure state: two complex Gaussians, normalized.
inline qmem::MemoryState haar_state(std::mt19937_64& g) {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        const qmem::Complex a1(n(g), n(g));
        const qmem::Complex a2(n(g), n(g));
        if (std::norm(a1) + std::norm(a2) > 1e-12) {
            return qmem::MemoryState::normalized(a1, a2);
        }
    }
}

/// Haar-random SU(2): normalized quaternion q0 I + i (q . sigma).
inline qmem::Unitary2 haar_unitary(std::mt19937_64& g) {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        double q0 = n(g), q1 = n(g), q2 = n(g), q3 = n(g);
        const double norm = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
        if (norm < 1e-6) continue;
        q0 /= norm; q1 /= norm; q2 /= norm; q3 /= norm;
        qmem::Mat2 m;
        m << qmem::Complex(q0, q3), qmem::Complex(q2, q1),
             qmem::Complex(-q2, q1), qmem::Complex(q0, -q3);
        return qmem::Unitary2::from_matrix(m);
    }
}

inline double max_abs_diff(const qmem::Mat2& a, const qmem::Mat2& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const qmem::Vec2& a, const qmem::Vec2& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace qtest

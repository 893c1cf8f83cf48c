#include "qmem/oracle.hpp"

#include <cmath>
#include <cstdio>

#include "qmem/smatrix.hpp"

namespace qmem {
namespace oracle {

namespace {
const Complex kI(0.0, 1.0);
}

MatchingConditions MatchingConditions::for_strengths(double g1, double g3) {
    return {g1 * sigma1(), -g3 * sigma3()};
}

MatchingConditions derive_matching(const Coupling& c) {
    return MatchingConditions::for_strengths(c.g1(), c.g3());
}

NumericSMatrices numeric_smatrix(const MatchingConditions& mc, const WaveNumber& k) {
    const double kv = k.value();

    // Even sector, Psi = a e^{-ik|x|} + B e^{ik|x|}:
    //   value continuous with average a + B, derivative jump 2ik(B - a),
    // so (2ik I - D) B = (2ik I + D) a. The d'_p condition is satisfied
    // identically (the average derivative of an even wave vanishes at 0).
    const Mat2 even_lhs = 2.0 * kI * kv * Mat2::Identity() - mc.derivative_jump;
    const Mat2 even_rhs = 2.0 * kI * kv * Mat2::Identity() + mc.derivative_jump;

    // Odd sector, Psi = sgn(x)[a e^{-ik|x|} - B e^{ik|x|}] (free limit is
    // the smooth sine wave, B = a):
    //   derivative continuous with average -ik(a + B), value jump 2(a - B),
    // so (2 I - ik V) B = (2 I + ik V) a. The delta condition is satisfied
    // identically (the average value of an odd wave vanishes at 0).
    const Mat2 odd_lhs = 2.0 * Mat2::Identity() - kI * kv * mc.value_jump;
    const Mat2 odd_rhs = 2.0 * Mat2::Identity() + kI * kv * mc.value_jump;

    const auto solve = [](const Mat2& lhs, const Mat2& rhs) {
        Eigen::FullPivLU<Mat2> lu(lhs);
        if (!lu.isInvertible()) {
            throw SolverError("singular matching-condition system");
        }
        return Mat2(lu.solve(rhs));
    };
    return {solve(even_lhs, even_rhs), solve(odd_lhs, odd_rhs)};
}

NumericSMatrices numeric_smatrix(const Coupling& c, const WaveNumber& k) {
    return numeric_smatrix(derive_matching(c), k);
}

VerificationReport verify_closed_form(const Coupling& c,
                                      const std::vector<WaveNumber>& k_grid,
                                      double tol) {
    if (k_grid.empty()) {
        throw DomainError("verification grid must be nonempty");
    }
    VerificationReport report;
    report.tolerance = tol;
    report.points = k_grid.size();
    for (const WaveNumber& k : k_grid) {
        const NumericSMatrices numeric = numeric_smatrix(c, k);
        const Mat2 closed_even = scattering_matrix(Parity::even, c, k).matrix();
        const Mat2 closed_odd = scattering_matrix(Parity::odd, c, k).matrix();
        const double dev =
            std::max((numeric.even - closed_even).cwiseAbs().maxCoeff(),
                     (numeric.odd - closed_odd).cwiseAbs().maxCoeff());
        if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_k = k.value();
        }
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

std::vector<WaveNumber> log_grid(double k_lo, double k_hi, std::size_t points) {
    if (!(k_lo > 0.0) || !(k_hi >= k_lo) || points == 0) {
        throw DomainError("log grid requires 0 < k_lo <= k_hi and points >= 1");
    }
    std::vector<WaveNumber> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.emplace_back(k_lo);
        return grid;
    }
    const double llo = std::log10(k_lo);
    const double lhi = std::log10(k_hi);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid.emplace_back(std::pow(10.0, llo + t * (lhi - llo)));
    }
    return grid;
}

std::string VerificationReport::summary() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max_deviation = %.15g at k = %.15g over %zu points "
                  "(tolerance %.15g): %s",
                  max_deviation, worst_k, points, tolerance,
                  pass ? "PASS" : "FAIL");
    return buf;
}

} // namespace oracle
} // namespace qmem

#include "qmem/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qmem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroAngleTol = 1e-12;
constexpr double kGimbalTol = 1e-13;

double wrap_2pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    if (y >= kTwoPi) y = 0.0;
    return y;
}

double relevant_coupling(Parity parity, const Coupling& c) {
    return parity == Parity::even ? c.g1() : c.g3();
}

// k realizing the requested channel phase, from the inverted phase formulas.
double invert_phase(Parity parity, const Coupling& c, double phi) {
    const double t = std::tan(-phi / 2.0);
    if (parity == Parity::even) {
        return c.g1() / (2.0 * t);
    }
    return (2.0 / c.g3()) * t;
}

} // namespace

KBounds::KBounds(double k_min, double k_max) : k_min_(k_min), k_max_(k_max) {
    if (!(k_min > 0.0) || !(k_min < k_max) || !std::isfinite(k_max)) {
        throw DomainError("wavenumber bounds require 0 < k_min < k_max");
    }
}

KBounds KBounds::for_coupling(const Coupling& c, double eps_phi) {
    if (!(eps_phi > 0.0) || !(eps_phi < kPi / 2.0)) {
        throw DomainError("phase margin must lie in (0, pi/2)");
    }
    const double t = std::tan(eps_phi / 2.0);
    const double g1 = std::abs(c.g1());
    const double g3 = std::abs(c.g3());
    const double even_lo = g1 * t / 2.0;
    const double even_hi = g1 / (2.0 * t);
    const double odd_lo = 2.0 * t / g3;
    const double odd_hi = 2.0 / (g3 * t);
    return KBounds(std::min(even_lo, odd_lo), std::max(even_hi, odd_hi));
}

std::pair<double, double> feasible_phase_interval(Parity parity, const Coupling& c,
                                                  const KBounds& b, double eps_phi) {
    const double phi_at_min =
        phase_shift(parity, c, WaveNumber(b.k_min())).radians;
    const double phi_at_max =
        phase_shift(parity, c, WaveNumber(b.k_max())).radians;
    double lo = std::min(phi_at_min, phi_at_max);
    double hi = std::max(phi_at_min, phi_at_max);
    if (relevant_coupling(parity, c) > 0.0) {
        lo = std::max(lo, -kPi + eps_phi);
        hi = std::min(hi, -eps_phi);
    } else {
        lo = std::max(lo, eps_phi);
        hi = std::min(hi, kPi - eps_phi);
    }
    return {lo, hi};
}

EulerXZX euler_xzx(const Unitary2& u) {
    static const Mat2 hadamard =
        (Mat2() << 1, 1, 1, -1).finished() / std::numbers::sqrt2;
    // Conjugation by H swaps sigma1 and sigma3, reducing X-Z-X to Z-X-Z.
    const Mat2 v = hadamard * u.matrix() * hadamard;
    const double m00 = std::abs(v(0, 0));
    const double m01 = std::abs(v(0, 1));
    const double beta = std::atan2(m01, m00);
    double alpha = 0.0;
    double gamma = 0.0;
    if (m01 <= kGimbalTol) {
        alpha = std::arg(v(0, 0));
    } else if (m00 <= kGimbalTol) {
        alpha = std::arg(v(0, 1)) - kPi / 2.0;
    } else {
        const double sum = std::arg(v(0, 0));
        const double diff = std::arg(v(0, 1)) - kPi / 2.0;
        alpha = 0.5 * (sum + diff);
        gamma = 0.5 * (sum - diff);
    }
    return {wrap_2pi(alpha), wrap_2pi(beta), wrap_2pi(gamma)};
}

std::vector<ScatteringEvent> rotation_to_events(Parity parity, double theta,
                                                const Coupling& c,
                                                const KBounds& b,
                                                double eps_phi) {
    const bool positive = relevant_coupling(parity, c) > 0.0;

    // Representative of theta mod 2pi on the side of zero the coupling
    // sign makes reachable: (-2pi, 0] for positive, [0, 2pi) for negative.
    double r = std::fmod(theta, kTwoPi);
    if (positive && r > 0.0) r -= kTwoPi;
    if (!positive && r < 0.0) r += kTwoPi;
    if (std::abs(r) <= kZeroAngleTol || std::abs(std::abs(r) - kTwoPi) <= kZeroAngleTol) {
        return {};
    }

    const auto [lo, hi] = feasible_phase_interval(parity, c, b, eps_phi);
    if (lo > hi) {
        throw SchedulingError("no feasible per-event phase for the " +
                              std::string(to_string(parity)) +
                              " channel under the given wavenumber bounds");
    }

    const auto make_event = [&](double phi) {
        double k = invert_phase(parity, c, phi);
        k = std::clamp(k, b.k_min(), b.k_max());
        return ScatteringEvent{parity, WaveNumber(k)};
    };

    constexpr double kEdgeSlack = 1e-12;
    if (r >= lo - kEdgeSlack && r <= hi + kEdgeSlack) {
        return {make_event(std::clamp(r, lo, hi))};
    }
    const double half = r / 2.0;
    if (half >= lo - kEdgeSlack && half <= hi + kEdgeSlack) {
        const ScatteringEvent ev = make_event(std::clamp(half, lo, hi));
        return {ev, ev};
    }

    std::ostringstream msg;
    msg << "rotation of " << theta << " rad on the " << to_string(parity)
        << " channel is unreachable: per-event phase must lie in [" << lo
        << ", " << hi << "] rad, so reachable angles are ["
        << 2.0 * lo << ", " << hi << "] (mod 2pi)";
    throw SchedulingError(msg.str());
}

Schedule synthesize_unitary(const Unitary2& u, const Coupling& c,
                            const KBounds& b, double eps_phi) {
    const EulerXZX angles = euler_xzx(u);

    // X(alpha+pi) Z(beta) X(gamma+pi) equals X(alpha) Z(beta) X(gamma)
    // exactly, and shifting beta by pi only flips the global sign, so a
    // target whose raw angles fall inside the margin holes can always be
    // re-gauged onto reachable ones.
    const std::pair<bool, bool> gauges[] = {
        {false, false}, {true, false}, {false, true}, {true, true}};
    SchedulingError last("unreachable target");
    for (const auto& [shift_outer, shift_mid] : gauges) {
        const double alpha = angles.alpha + (shift_outer ? kPi : 0.0);
        const double beta = angles.beta + (shift_mid ? kPi : 0.0);
        const double gamma = angles.gamma + (shift_outer ? kPi : 0.0);
        try {
            // Application order: X(gamma) first, then Z(beta), then X(alpha).
            auto events = rotation_to_events(Parity::even, gamma, c, b, eps_phi);
            const auto mid = rotation_to_events(Parity::odd, beta, c, b, eps_phi);
            const auto outer = rotation_to_events(Parity::even, alpha, c, b, eps_phi);
            events.insert(events.end(), mid.begin(), mid.end());
            events.insert(events.end(), outer.begin(), outer.end());
            return Schedule{std::move(events), u};
        } catch (const SchedulingError& err) {
            last = err;
        }
    }
    throw last;
}

Unitary2 state_transfer_unitary(const MemoryState& from, const MemoryState& to) {
    const Vec2 f = from.vector();
    const Vec2 t = to.vector();
    const Vec2 f_perp(-std::conj(f(1)), std::conj(f(0)));
    const Vec2 t_perp(-std::conj(t(1)), std::conj(t(0)));
    Mat2 f_basis;
    f_basis.col(0) = f;
    f_basis.col(1) = f_perp;
    Mat2 t_basis;
    t_basis.col(0) = t;
    t_basis.col(1) = t_perp;
    return Unitary2::from_matrix(t_basis * f_basis.adjoint());
}

Unitary2 schedule_product(const Schedule& sch, const Coupling& c) {
    Unitary2 product = Unitary2::identity();
    for (const ScatteringEvent& ev : sch.events) {
        product = scattering_matrix(ev, c) * product;
    }
    return product;
}

} // namespace qmem

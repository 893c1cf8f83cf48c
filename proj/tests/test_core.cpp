#include <doctest.h>

#include <numbers>

#include "qmem/core.hpp"
#include "test_support.hpp"

using namespace qmem;
using qtest::max_abs_diff;

namespace {
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Complex kI(0.0, 1.0);
} // namespace

TEST_CASE("normalize scales and rejects the zero vector") {
    const MemoryState a = normalize(2.0, 0.0);
    CHECK(std::abs(a.a1() - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(a.a2()) <= 1e-15);

    const MemoryState b = normalize(1.0, 1.0);
    CHECK(std::abs(b.a1() - Complex(kInvSqrt2)) <= 1e-15);
    CHECK(std::abs(b.a2() - Complex(kInvSqrt2)) <= 1e-15);

    CHECK_THROWS_AS(normalize(0.0, 0.0), NormalizationError);

    std::mt19937_64 g(11);
    for (int i = 0; i < 2000; ++i) {
        const MemoryState s = qtest::haar_state(g);
        CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("canonical_phase fixes the global phase deterministically") {
    const MemoryState a = canonical_phase(normalize(kI, 0.0));
    CHECK(std::abs(a.a1() - Complex(1.0)) <= 1e-15);
    CHECK(std::abs(a.a2()) <= 1e-15);

    const MemoryState b = canonical_phase(normalize(0.0, -1.0));
    CHECK(std::abs(b.a1()) <= 1e-15);
    CHECK(std::abs(b.a2() - Complex(1.0)) <= 1e-15);

    // (1+i)/2, (1-i)/2 -> multiply by e^{-i pi/4}: (1/sqrt2, -i/sqrt2).
    const MemoryState c =
        canonical_phase(normalize(Complex(0.5, 0.5), Complex(0.5, -0.5)));
    CHECK(std::abs(c.a1() - Complex(kInvSqrt2)) <= 1e-12);
    CHECK(std::abs(c.a2() - (-kI * kInvSqrt2)) <= 1e-12);

    std::mt19937_64 g(12);
    for (int i = 0; i < 1000; ++i) {
        const MemoryState s = qtest::haar_state(g);
        const MemoryState canon = canonical_phase(s);
        // a1 real >= 0, or a2 real > 0 when a1 vanishes
        if (std::abs(canon.a1()) >= 1e-12) {
            CHECK(canon.a1().imag() == 0.0);
            CHECK(canon.a1().real() >= 0.0);
        } else {
            CHECK(canon.a2().imag() == 0.0);
            CHECK(canon.a2().real() > 0.0);
        }
        // idempotent
        CHECK(max_abs_diff(canonical_phase(canon).vector(), canon.vector()) <= 1e-12);
        // invariant under any global phase
        const double theta = qtest::uniform(g, 0.0, 2.0 * std::numbers::pi);
        const MemoryState rotated = MemoryState::normalized(
            std::polar(1.0, theta) * s.a1(), std::polar(1.0, theta) * s.a2());
        CHECK(max_abs_diff(canonical_phase(rotated).vector(), canon.vector()) <= 1e-12);
    }
}

TEST_CASE("apply_unitary acts as matrix multiplication") {
    std::mt19937_64 g(13);
    const MemoryState s = qtest::haar_state(g);
    const MemoryState ident = apply_unitary(Unitary2::identity(), s);
    CHECK(max_abs_diff(ident.vector(), s.vector()) <= 1e-15);

    // sigma1 has det -1; the boundary rescales it into SU(2), so the Pauli
    // action holds up to a global phase.
    const Unitary2 pauli_x = Unitary2::from_matrix(sigma1());
    const MemoryState flipped =
        canonical_phase(apply_unitary(pauli_x, MemoryState::standard()));
    CHECK(std::abs(flipped.a1()) <= 1e-15);
    CHECK(std::abs(flipped.a2() - Complex(1.0)) <= 1e-15);

    // exp(i sigma3 (-pi/2)) = diag(-i, i) on (1,1)/sqrt2.
    const MemoryState rotated = apply_unitary(
        Unitary2::exp_z(-std::numbers::pi / 2.0), normalize(1.0, 1.0));
    CHECK(std::abs(rotated.a1() - (-kI * kInvSqrt2)) <= 1e-12);
    CHECK(std::abs(rotated.a2() - (kI * kInvSqrt2)) <= 1e-12);
}

TEST_CASE("apply_unitary preserves norm, fidelity, and composes") {
    std::mt19937_64 g(14);
    for (int i = 0; i < 500; ++i) {
        const Unitary2 u = qtest::haar_unitary(g);
        const Unitary2 v = qtest::haar_unitary(g);
        const MemoryState s = qtest::haar_state(g);
        const MemoryState t = qtest::haar_state(g);

        const MemoryState us = apply_unitary(u, s);
        CHECK(std::abs(us.norm() - 1.0) <= 1e-12);
        CHECK(std::abs(fidelity_up_to_phase(us, apply_unitary(u, t)) -
                       fidelity_up_to_phase(s, t)) <= 1e-12);

        const MemoryState chained = apply_unitary(u, apply_unitary(v, s));
        const MemoryState direct = apply_unitary(u * v, s);
        CHECK(max_abs_diff(chained.vector(), direct.vector()) <= 1e-12);
    }
}

TEST_CASE("Unitary2 boundary validation") {
    Mat2 shear;
    shear << 1, 1, 0, 1;
    CHECK_THROWS_AS(Unitary2::from_matrix(shear), UnitaryError);

    std::mt19937_64 g(15);
    for (int i = 0; i < 200; ++i) {
        const Unitary2 u = qtest::haar_unitary(g);
        const Mat2 u2 = std::polar(1.0, qtest::uniform(g, 0.0, 6.28)) * u.matrix();
        const Unitary2 rescaled = Unitary2::from_matrix(u2);
        CHECK(std::abs(rescaled.det() - Complex(1.0)) <= 1e-12);
        CHECK(max_abs_diff(rescaled.matrix().adjoint() * rescaled.matrix(),
                           Mat2::Identity()) <= 1e-12);
    }
}

TEST_CASE("fidelity_up_to_phase") {
    CHECK(std::abs(fidelity_up_to_phase(MemoryState::standard(),
                                        normalize(kI, 0.0)) - 1.0) <= 1e-15);
    CHECK(fidelity_up_to_phase(MemoryState::standard(), normalize(0.0, 1.0)) <=
          1e-15);
    CHECK(std::abs(fidelity_up_to_phase(MemoryState::standard(),
                                        normalize(1.0, 1.0)) - kInvSqrt2) <= 1e-15);
}

TEST_CASE("domain types validate their parameters") {
    CHECK_THROWS_AS(Coupling(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Coupling(1.0, 0.0), DomainError);
    CHECK_NOTHROW(Coupling(-2.0, 1.0));
    CHECK_THROWS_AS(WaveNumber(0.0), DomainError);
    CHECK_THROWS_AS(WaveNumber(-1.0), DomainError);
    CHECK_NOTHROW(WaveNumber(1e-8));
}

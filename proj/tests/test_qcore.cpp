#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "parrondo/qcore.hpp"

using namespace parrondo;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState plus_state() { return PureState({Complex{kInvSqrt2, 0}, Complex{kInvSqrt2, 0}}); }

// Deterministic normalized random state on `qubits` qubits.
PureState random_state(Rng& rng, int qubits) {
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto& a : amps) {
        a = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) a /= norm;
    return PureState(std::move(amps));
}

}  // namespace

TEST_CASE("PureState construction validates its invariants") {
    SUBCASE("accepts normalized power-of-two vectors") {
        const PureState s({Complex{1, 0}, Complex{0, 0}});
        CHECK(s.num_qubits() == 1);
        CHECK(s.dim() == 2);
    }
    SUBCASE("rejects non-power-of-two lengths") {
        CHECK_THROWS_AS(PureState({Complex{1, 0}, Complex{0, 0}, Complex{0, 0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(PureState({Complex{1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(PureState(std::vector<Complex>{}), std::invalid_argument);
    }
    SUBCASE("rejects norm off by more than 1e-9") {
        CHECK_THROWS_AS(PureState({Complex{1.001, 0}, Complex{0, 0}}), std::invalid_argument);
        // Within tolerance passes.
        CHECK_NOTHROW(PureState({Complex{1.0 + 4e-10, 0}, Complex{0, 0}}));
    }
    SUBCASE("rejects NaN and Inf amplitudes") {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(PureState({Complex{nan, 0}, Complex{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(PureState({Complex{0, inf}, Complex{1, 0}}), std::invalid_argument);
    }
    SUBCASE("basis places the single unit amplitude") {
        const PureState s = PureState::basis(3, 5);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(s[i] == (i == 5 ? Complex{1, 0} : Complex{0, 0}));
        }
    }
}

TEST_CASE("BasisLabel maps bits to indices big-endian") {
    // First qubit is the most significant bit: |011> = index 3 on 3 qubits.
    const BasisLabel label{{0, 1, 1}};
    CHECK(label.index() == 3);
    CHECK(label.to_string() == "|011>");

    const BasisLabel back = BasisLabel::from_index(3, 3);
    CHECK(back.bits == std::vector<int>{0, 1, 1});

    const BasisLabel six = BasisLabel::from_index(6, 3);
    CHECK(six.bits == std::vector<int>{1, 1, 0});
    CHECK(six.index() == 6);
}

TEST_CASE("tensor builds Kronecker products in big-endian order") {
    const PureState zero = PureState::basis(1, 0);
    const PureState one = PureState::basis(1, 1);

    SUBCASE("|0>|0>|0> puts unit amplitude at index 0") {
        const PureState s = tensor({zero, zero, zero});
        CHECK(s.dim() == 8);
        CHECK(s[0] == Complex{1, 0});
        for (std::size_t i = 1; i < 8; ++i) CHECK(s[i] == Complex{0, 0});
    }
    SUBCASE("plus^3 gives all eight amplitudes 1/sqrt(8)") {
        const PureState s = tensor({plus_state(), plus_state(), plus_state()});
        const double expect = 1.0 / std::sqrt(8.0);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(s[i].real() == doctest::Approx(expect).epsilon(1e-14));
            CHECK(s[i].imag() == 0.0);
        }
    }
    SUBCASE("|1>|0> sits at index 2 of a length-4 vector") {
        const PureState s = tensor({one, zero});
        CHECK(s.dim() == 4);
        CHECK(s[2] == Complex{1, 0});
        CHECK(s[0] == Complex{0, 0});
    }
    SUBCASE("empty factor list is rejected") {
        CHECK_THROWS_AS(tensor(std::initializer_list<PureState>{}), std::invalid_argument);
    }
    SUBCASE("qubit count is capped at 20") {
        const std::vector<PureState> factors(21, PureState::basis(1, 0));
        CHECK_THROWS_AS(tensor(std::span<const PureState>(factors)), std::invalid_argument);
        const std::vector<PureState> ok(20, PureState::basis(1, 0));
        CHECK(tensor(std::span<const PureState>(ok)).num_qubits() == 20);
    }
    SUBCASE("associative within 1e-12 on random states") {
        Rng rng(42);
        for (int trial = 0; trial < 20; ++trial) {
            const PureState a = random_state(rng, 1);
            const PureState b = random_state(rng, 2);
            const PureState c = random_state(rng, 1);
            const PureState left = tensor({tensor({a, b}), c});
            const PureState right = tensor({a, tensor({b, c})});
            REQUIRE(left.dim() == right.dim());
            for (std::size_t i = 0; i < left.dim(); ++i) {
                CHECK(std::abs(left[i] - right[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("norm_squared is 1 for constructed states") {
    CHECK(norm_squared(PureState::basis(3, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm_squared(tensor({plus_state(), plus_state(), plus_state()})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(std::abs(norm_squared(random_state(rng, 4)) - 1.0) < 1e-9);
    }
}

TEST_CASE("win_probability sums the mass on odd basis indices") {
    SUBCASE("|001> is a certain win") {
        CHECK(win_probability(PureState::basis(3, 1)) == 1.0);
        CHECK(loss_probability(PureState::basis(3, 1)) == 0.0);
    }
    SUBCASE("|000> is a certain loss") {
        CHECK(win_probability(PureState::basis(3, 0)) == 0.0);
    }
    SUBCASE("equal superposition wins half the time") {
        const PureState s = tensor({plus_state(), plus_state(), plus_state()});
        CHECK(win_probability(s) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("win and loss masses always partition the norm") {
        Rng rng(11);
        for (int trial = 0; trial < 25; ++trial) {
            const PureState s = random_state(rng, 3);
            CHECK(win_probability(s) + loss_probability(s) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("invariant under a global phase") {
        Rng rng(13);
        for (int trial = 0; trial < 10; ++trial) {
            const PureState s = random_state(rng, 3);
            const double angle = rng.uniform() * 6.28;
            const Complex phase{std::cos(angle), std::sin(angle)};
            std::vector<Complex> rotated = s.amplitudes();
            for (auto& a : rotated) a *= phase;
            const PureState t(std::move(rotated));
            CHECK(std::abs(win_probability(s) - win_probability(t)) < 1e-12);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "spinstat/su2.hpp"

using namespace spinstat;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// Numerical-integration oracle for the multi-fold coefficients:
// (1/pi) int_0^{2pi} sin^2(psi) prod chi^{s_i}(psi) dpsi on a uniform grid.
// The integrand is a trigonometric polynomial of bandwidth sum(2s_i) + 2,
// so the rectangle rule with more nodes than that is exact.
double cg_by_quadrature(const std::vector<TwiceSpin>& spins) {
    int band = 2;
    for (TwiceSpin s : spins) band += s.twice;
    const int nodes = 4 * (band + 2);
    double acc = 0;
    for (int j = 0; j < nodes; ++j) {
        const double psi = 2.0 * kPi * j / nodes;
        double term = std::sin(psi) * std::sin(psi);
        for (TwiceSpin s : spins) term *= su2_character(s, psi);
        acc += term;
    }
    return acc * (2.0 * kPi / nodes) / kPi;
}

} // namespace

TEST_CASE("su2_character special values") {
    for (int t = 0; t <= 6; ++t)
        CHECK(su2_character(TwiceSpin(t), 0.0) == doctest::Approx(t + 1).epsilon(1e-14));
    for (double psi : {0.3, 1.1, 2.9})
        CHECK(su2_character(TwiceSpin(1), psi) ==
              doctest::Approx(2.0 * std::cos(psi)).epsilon(1e-13));
    CHECK(su2_character(TwiceSpin(2), kPi / 2) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("su2_character agrees with the sine ratio away from its zeros") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    for (int t = 0; t <= 6; ++t)
        for (int i = 0; i < 200; ++i) {
            const double psi = dist(rng);
            if (std::abs(std::sin(psi)) <= 1e-6) continue;
            const double ratio = std::sin((t + 1) * psi) / std::sin(psi);
            CHECK(std::abs(su2_character(TwiceSpin(t), psi) - ratio) < 1e-10);
        }
}

TEST_CASE("character identity under argument scaling") {
    // sin^2(r psi) chi^s(r psi) = sin^2(psi) chi^{rs+(r-1)/2}(psi) chi^{(r-1)/2}(psi)
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    for (int r = 1; r <= 4; ++r)
        for (int t = 0; t <= 4; ++t)
            for (int i = 0; i < 100; ++i) {
                const double psi = dist(rng);
                const double lhs = std::pow(std::sin(r * psi), 2) *
                                   su2_character(TwiceSpin(t), r * psi);
                const double rhs = std::pow(std::sin(psi), 2) *
                                   su2_character(TwiceSpin(r * t + r - 1), psi) *
                                   su2_character(TwiceSpin(r - 1), psi);
                CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
            }
}

TEST_CASE("U(2) tableaux and their spins") {
    CHECK(spin_of_u2(U2Tableau(2, 1)) == TwiceSpin(1));
    CHECK(spin_of_u2(U2Tableau(3, 3)) == TwiceSpin(0));
    CHECK(spin_of_u2(U2Tableau(3, 0)) == TwiceSpin(3));
    CHECK(U2Tableau(2, 1).shape() == make_partition({2, 1}));
    CHECK(U2Tableau(2, 0).shape() == make_partition({2}));
    CHECK_THROWS_AS(U2Tableau(1, 2), NotWeaklyDecreasing);
}

TEST_CASE("triangle rule") {
    CHECK(triangle_cg(TwiceSpin(1), TwiceSpin(1), TwiceSpin(2)) == 1);
    CHECK(triangle_cg(TwiceSpin(1), TwiceSpin(1), TwiceSpin(1)) == 0); // parity
    CHECK(triangle_cg(TwiceSpin(5), TwiceSpin(2), TwiceSpin(1)) == 0); // triangle
    CHECK(triangle_cg(TwiceSpin(0), TwiceSpin(0), TwiceSpin(0)) == 1);
}

TEST_CASE("multi_cg base cases and paper-table values") {
    CHECK(multi_cg({TwiceSpin(0)}) == 1);
    CHECK(multi_cg({TwiceSpin(2)}) == 0);
    for (int t = 0; t <= 5; ++t) {
        CHECK(multi_cg({TwiceSpin(t), TwiceSpin(t)}) == 1);
        CHECK(multi_cg({TwiceSpin(t), TwiceSpin(t + 1)}) == 0);
    }
    // C(5/2, 1, S(a1), S(a2), S(a3)) values behind the three-particle example
    CHECK(multi_cg({TwiceSpin(5), TwiceSpin(2), TwiceSpin(1), TwiceSpin(0), TwiceSpin(0)}) == 0);
    CHECK(multi_cg({TwiceSpin(5), TwiceSpin(2), TwiceSpin(0), TwiceSpin(1), TwiceSpin(0)}) == 0);
    CHECK(multi_cg({TwiceSpin(5), TwiceSpin(2), TwiceSpin(2), TwiceSpin(1), TwiceSpin(0)}) == 1);
    CHECK(multi_cg({TwiceSpin(5), TwiceSpin(2), TwiceSpin(1), TwiceSpin(1), TwiceSpin(1)}) == 1);
    CHECK_THROWS_AS(multi_cg(std::span<const TwiceSpin>{}), EmptyInput);
}

TEST_CASE("multi_cg is symmetric under permutations (exhaustive, r <= 5)") {
    // tuples drawn with twice-spins <= 6; compare every permutation of a
    // sorted representative against its value
    for (int r = 2; r <= 5; ++r) {
        std::vector<int> t(r, 0);
        auto advance = [&]() {
            int i = 0;
            while (i < r) {
                if (t[i] < 6 && (i + 1 == r || t[i] < t[i + 1])) {
                    ++t[i];
                    for (int j = 0; j < i; ++j) t[j] = 0;
                    return true;
                }
                ++i;
            }
            return false;
        };
        do {
            std::vector<TwiceSpin> spins;
            for (int v : t) spins.emplace_back(v);
            const long long base = multi_cg(spins);
            std::vector<TwiceSpin> perm = spins;
            do {
                CHECK(multi_cg(perm) == base);
            } while (std::next_permutation(perm.begin(), perm.end()));
        } while (advance());
    }
}

TEST_CASE("multi_cg equals the character integral (r <= 4, twice-spins <= 5)") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 5; ++c) {
                const std::vector<TwiceSpin> t3{TwiceSpin(a), TwiceSpin(b), TwiceSpin(c)};
                CHECK(std::abs(cg_by_quadrature(t3) - multi_cg(t3)) < 1e-8);
                for (int d = 0; d <= 5; ++d) {
                    const std::vector<TwiceSpin> t4{TwiceSpin(a), TwiceSpin(b),
                                                    TwiceSpin(c), TwiceSpin(d)};
                    CHECK(std::abs(cg_by_quadrature(t4) - multi_cg(t4)) < 1e-8);
                }
            }
}

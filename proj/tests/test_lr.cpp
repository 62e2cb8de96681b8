#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "spinstat/lr.hpp"

using namespace spinstat;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

// Test-local horizontal-strip predicate, independent of the LR enumerator.
bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) return false;
    for (int i = 1; i < outer.rows(); ++i)
        if (outer.parts()[i] > inner.row(i - 1)) return false;
    return true;
}

// Test-local standard-tableau counter (linear extensions by box insertion).
long long syt_count(const Partition& p) {
    std::vector<int> rows(p.rows(), 0);
    long long acc = 0;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == p.size()) {
            ++acc;
            return;
        }
        for (int r = 0; r < p.rows(); ++r) {
            if (rows[r] == p.parts()[r]) continue;
            if (r > 0 && rows[r] == rows[r - 1]) continue;
            ++rows[r];
            self(self, placed + 1);
            --rows[r];
        }
    };
    rec(rec, 0);
    return acc;
}

long long binomial(int n, int k) {
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

} // namespace

TEST_CASE("two-fold examples") {
    CHECK(lr_coefficient(P({2, 1}), P({1, 1}), P({1})) == 1);
    CHECK(lr_coefficient(P({2}), P({1}), P({1})) == 1);
    CHECK(lr_coefficient(P({1, 1}), P({1}), P({1})) == 1);
    CHECK(lr_coefficient(P({3}), P({1}), P({1})) == 0); // size mismatch
    CHECK(lr_coefficient(P({2, 2}), P({3}), P({1})) == 0);
    CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
    CHECK(lr_coefficient(P({2, 1}), Partition(), P({2, 1})) == 1);
}

TEST_CASE("multi-fold examples") {
    CHECK(lr_multi(P({2, 1}), {P({1}), P({1}), P({1})}) == 2);
    CHECK(lr_multi(P({2, 1}), {P({2, 1}), Partition(), Partition()}) == 1);
    for (int k = 0; k <= 6; ++k)
        for (const Partition& f : partitions_of(k, k))
            CHECK(lr_multi(f, {f}) == 1);
    CHECK(lr_multi(P({2}), {P({1})}) == 0);
    CHECK_THROWS_AS(lr_multi(P({2}), std::span<const Partition>{}), EmptyInput);
}

TEST_CASE("symmetry in the two factors for |gamma| <= 8") {
    for (int g = 0; g <= 8; ++g)
        for (const Partition& gamma : partitions_of(g, g))
            for (int a = 0; a <= g; ++a)
                for (const Partition& alpha : partitions_of(a, g))
                    for (const Partition& beta : partitions_of(g - a, g))
                        CHECK(lr_coefficient(gamma, alpha, beta) ==
                              lr_coefficient(gamma, beta, alpha));
}

TEST_CASE("Pieri rule: a single-row factor detects horizontal strips") {
    for (int g = 1; g <= 8; ++g)
        for (const Partition& gamma : partitions_of(g, g))
            for (int a = 0; a < g; ++a)
                for (const Partition& alpha : partitions_of(a, g)) {
                    const long long got = lr_coefficient(gamma, alpha, P({g - a}));
                    const long long want = is_horizontal_strip(gamma, alpha) ? 1 : 0;
                    CHECK(got == want);
                }
}

TEST_CASE("dimension consistency against standard-tableau counts") {
    // sum_gamma Y^gamma_{alpha beta} f^gamma = f^alpha f^beta C(|gamma|, |alpha|)
    for (int g = 1; g <= 6; ++g)
        for (int a = 0; a <= g; ++a)
            for (const Partition& alpha : partitions_of(a, g))
                for (const Partition& beta : partitions_of(g - a, g)) {
                    long long lhs = 0;
                    for (const Partition& gamma : partitions_of(g, g))
                        lhs += lr_coefficient(gamma, alpha, beta) * syt_count(gamma);
                    CHECK(lhs == syt_count(alpha) * syt_count(beta) * binomial(g, a));
                }
}

TEST_CASE("multi-fold value is invariant under factor permutations") {
    for (int g = 0; g <= 6; ++g)
        for (const Partition& gamma : partitions_of(g, g))
            for (int a = 0; a <= g; ++a)
                for (int b = 0; a + b <= g; ++b)
                    for (const Partition& fa : partitions_of(a, g))
                        for (const Partition& fb : partitions_of(b, g))
                            for (const Partition& fc : partitions_of(g - a - b, g)) {
                                std::vector<Partition> factors{fa, fb, fc};
                                std::sort(factors.begin(), factors.end());
                                const long long base = lr_multi(gamma, factors);
                                do {
                                    CHECK(lr_multi(gamma, factors) == base);
                                } while (std::next_permutation(factors.begin(),
                                                               factors.end()));
                            }
}

TEST_CASE("probe: swapping a box between factors can change the coefficient") {
    // Y^gamma_{a1,a2} = Y^gamma_{a1+box,a2-box} read literally fails already
    // at gamma = (1,1); that cancellation only happens inside the signed,
    // CG-weighted class sums.
    CHECK(lr_coefficient(P({1, 1}), P({1}), P({1})) == 1);
    CHECK(lr_coefficient(P({1, 1}), P({2}), Partition()) == 0);
}

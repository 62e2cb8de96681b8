#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "spinstat/symgroup.hpp"

using namespace spinstat;

namespace {

// Independent class-size oracle: enumerate all n! permutations and tally
// cycle types by brute force.
std::map<std::vector<int>, long long> class_sizes_by_enumeration(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<int>, long long> tally;
    do {
        std::vector<bool> seen(n, false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            cycles.push_back(len);
        }
        std::sort(cycles.rbegin(), cycles.rend());
        ++tally[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tally;
}

// Independent dimension oracle: count standard Young tableaux by placing
// 1..n in growth order.
long long count_syt(std::vector<int> shape, std::vector<int>& rows) {
    const int placed = std::accumulate(rows.begin(), rows.end(), 0);
    const int total = std::accumulate(shape.begin(), shape.end(), 0);
    if (placed == total) return 1;
    long long acc = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (rows[r] == shape[r]) continue;
        if (r > 0 && rows[r] == rows[r - 1]) continue;
        ++rows[r];
        acc += count_syt(shape, rows);
        --rows[r];
    }
    return acc;
}

long long syt_count(const Partition& p) {
    std::vector<int> rows(p.rows(), 0);
    std::vector<int> shape = p.parts();
    return count_syt(shape, rows);
}

CycleType cycle(std::vector<int> parts) { return CycleType{make_partition(std::move(parts))}; }

} // namespace

TEST_CASE("class data for small n") {
    const auto c3 = conjugacy_classes(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].cycle_type.cycles == make_partition({1, 1, 1}));
    CHECK(c3[0].class_size == 1);
    CHECK(c3[1].cycle_type.cycles == make_partition({2, 1}));
    CHECK(c3[1].class_size == 3);
    CHECK(c3[2].cycle_type.cycles == make_partition({3}));
    CHECK(c3[2].class_size == 2);

    const auto c2 = conjugacy_classes(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].class_size == 1);
    CHECK(c2[1].class_size == 1);
    CHECK(c2[1].sign == -1);
}

TEST_CASE("class sizes match brute-force enumeration for n = 4 (and 2, 3, 5)") {
    for (int n : {2, 3, 4, 5}) {
        const auto expected = class_sizes_by_enumeration(n);
        const auto classes = conjugacy_classes(n);
        REQUIRE(classes.size() == expected.size());
        long long sum = 0;
        for (const ClassData& cd : classes) {
            const auto it = expected.find(cd.cycle_type.cycles.parts());
            REQUIRE(it != expected.end());
            CHECK(cd.class_size == it->second);
            CHECK(cd.sign == ((n - cd.cycle_type.cycle_count()) % 2 == 0 ? 1 : -1));
            sum += cd.class_size;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("classes sum to n! up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        long long sum = 0;
        for (const ClassData& cd : conjugacy_classes(n)) sum += cd.class_size;
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("character values of the S_3 standard representation") {
    const Partition e = make_partition({2, 1});
    CHECK(sn_character(e, cycle({1, 1, 1})) == 2);
    CHECK(sn_character(e, cycle({2, 1})) == 0);
    CHECK(sn_character(e, cycle({3})) == -1);
}

TEST_CASE("trivial and sign representations") {
    for (int n = 1; n <= 6; ++n) {
        const Partition triv = make_partition({n});
        const Partition sign(std::vector<int>(n, 1));
        for (const ClassData& cd : conjugacy_classes(n)) {
            CHECK(sn_character(triv, cd.cycle_type) == 1);
            CHECK(sn_character(sign, cd.cycle_type) == cd.sign);
        }
    }
    CHECK(sn_character(make_partition({1, 1, 1, 1}), cycle({2, 1, 1})) == -1);
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(sn_character(make_partition({2, 1}), cycle({2, 2})), SizeMismatch);
}

TEST_CASE("dimensions: hook lengths vs standard-tableau enumeration") {
    CHECK(sn_dimension(make_partition({2, 1})) == 2);
    CHECK(sn_dimension(make_partition({5})) == 1);
    CHECK(sn_dimension(make_partition({2, 2})) == 2);
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n, n)) {
            CHECK(sn_dimension(lambda) == syt_count(lambda));
            CHECK(sn_dimension(lambda) ==
                  sn_character(lambda, CycleType{Partition(std::vector<int>(n, 1))}));
        }
}

TEST_CASE("character orthogonality for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto lambdas = partitions_of(n, n);
        const auto classes = conjugacy_classes(n);
        for (const Partition& a : lambdas)
            for (const Partition& b : lambdas) {
                long long inner = 0;
                for (const ClassData& cd : classes)
                    inner += cd.class_size * sn_character(a, cd.cycle_type) *
                             sn_character(b, cd.cycle_type);
                CHECK(inner == (a == b ? factorial(n) : 0));
            }
    }
}

TEST_CASE("regular-representation identity (dimension-weighted)") {
    // sum_lambda d_lambda chi^lambda(sigma) = n! exactly on the identity class
    for (int n = 1; n <= 6; ++n)
        for (const ClassData& cd : conjugacy_classes(n)) {
            long long sum = 0;
            for (const Partition& lambda : partitions_of(n, n))
                sum += sn_dimension(lambda) * sn_character(lambda, cd.cycle_type);
            CHECK(sum == (cd.cycle_type.cycle_count() == n ? factorial(n) : 0));
        }

    // the unweighted variant genuinely differs: for n = 3 the identity column
    // sums to 4, not 3! = 6
    long long unweighted = 0;
    for (const Partition& lambda : partitions_of(3, 3))
        unweighted += sn_character(lambda, cycle({1, 1, 1}));
    CHECK(unweighted == 4);
}

TEST_CASE("sum of squared dimensions is n! for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        long long sum = 0;
        for (const Partition& lambda : partitions_of(n, n)) {
            const long long d = sn_dimension(lambda);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

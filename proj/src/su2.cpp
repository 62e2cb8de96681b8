#include "spinstat/su2.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

namespace spinstat {

U2Tableau::U2Tableau(int r1, int r2) : row1(r1), row2(r2) {
    if (r2 < 0 || r1 < r2)
        throw NotWeaklyDecreasing("U2Tableau needs row1 >= row2 >= 0");
}

Partition U2Tableau::shape() const {
    return Partition(row2 > 0 ? std::vector<int>{row1, row2}
                              : std::vector<int>{row1});
}

double su2_character(TwiceSpin s, double psi) {
    // pair e^{ik psi} with e^{-ik psi}; k runs over -2s..2s in steps of 2
    double acc = s.twice % 2 == 0 ? 1.0 : 0.0;
    for (int k = s.twice % 2 == 0 ? 2 : 1; k <= s.twice; k += 2)
        acc += 2.0 * std::cos(k * psi);
    return acc;
}

TwiceSpin spin_of_u2(const U2Tableau& alpha) {
    return TwiceSpin(alpha.row1 - alpha.row2);
}

int triangle_cg(TwiceSpin s1, TwiceSpin s2, TwiceSpin s3) {
    if ((s1.twice + s2.twice + s3.twice) % 2 != 0) return 0;
    return std::abs(s1.twice - s2.twice) <= s3.twice &&
                   s3.twice <= s1.twice + s2.twice
               ? 1
               : 0;
}

namespace {

long long multi_cg_impl(std::vector<int> t) {
    const std::size_t r = t.size();
    if (r == 1) return t[0] == 0 ? 1 : 0;
    if (r == 2) return t[0] == t[1] ? 1 : 0;
    if (r == 3)
        return triangle_cg(TwiceSpin(t[0]), TwiceSpin(t[1]), TwiceSpin(t[2]));

    thread_local std::map<std::vector<int>, long long> memo;
    if (auto it = memo.find(t); it != memo.end()) return it->second;

    // couple the last two spins into an intermediate spin and recurse
    const int a = t[r - 2], b = t[r - 1];
    const int head_parity =
        std::accumulate(t.begin(), t.end() - 2, 0) % 2;
    long long acc = 0;
    if ((head_parity + a + b) % 2 == 0) {
        std::vector<int> front(t.begin(), t.end() - 2);
        front.push_back(0);
        for (int mid = std::abs(a - b); mid <= a + b; mid += 2) {
            front.back() = mid;
            acc += multi_cg_impl(front);
        }
    }
    memo.emplace(std::move(t), acc);
    return acc;
}

} // namespace

long long multi_cg(std::span<const TwiceSpin> spins) {
    if (spins.empty()) throw EmptyInput("multi_cg needs at least one spin");
    std::vector<int> t;
    t.reserve(spins.size());
    for (TwiceSpin s : spins) t.push_back(s.twice);
    return multi_cg_impl(std::move(t));
}

long long multi_cg(std::initializer_list<TwiceSpin> spins) {
    return multi_cg(std::span<const TwiceSpin>(spins.begin(), spins.size()));
}

} // namespace spinstat

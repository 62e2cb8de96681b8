#include "spinstat/symgroup.hpp"

#include <algorithm>
#include <map>

namespace spinstat {

long long factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<ClassData> conjugacy_classes(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("conjugacy_classes supports 1 <= n <= 12");
    std::vector<ClassData> out;
    for (const Partition& type : partitions_of(n, n)) {
        long long denom = 1;
        std::vector<int> mult(n + 1, 0);
        for (int len : type.parts()) ++mult[len];
        for (int len = 1; len <= n; ++len)
            for (int j = 1; j <= mult[len]; ++j) denom *= static_cast<long long>(len) * j;
        ClassData cd;
        cd.cycle_type = CycleType{type};
        cd.class_size = factorial(n) / denom;
        cd.sign = (n - type.rows()) % 2 == 0 ? 1 : -1;
        out.push_back(std::move(cd));
    }
    std::sort(out.begin(), out.end(), [](const ClassData& a, const ClassData& b) {
        return a.cycle_type < b.cycle_type;
    });
    return out;
}

namespace {

// Border-strip recursion on beta numbers b_i = lambda_i + (L-1-i).  Removing
// a strip of length t is moving one beta number down by t onto a free slot;
// the sign is (-1)^(number of occupied slots jumped over).
long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& cycles) {
    if (lambda.empty()) return 1;

    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    auto key = std::make_pair(lambda, cycles);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int L = static_cast<int>(lambda.size());

    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        const int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++crossings;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> mu(L);
        for (int k = 0; k < L; ++k) mu[k] = nb[k] - (L - 1 - k);
        while (!mu.empty() && mu.back() == 0) mu.pop_back();

        const long long sub = mn_recurse(mu, rest);
        total += (crossings % 2 == 0) ? sub : -sub;
    }

    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

long long sn_character(const Partition& lambda, const CycleType& cls) {
    if (lambda.size() != cls.n())
        throw SizeMismatch("sn_character: |lambda| = " + std::to_string(lambda.size()) +
                           " but cycle type sums to " + std::to_string(cls.n()));
    return mn_recurse(lambda.parts(), cls.cycles.parts());
}

long long sn_dimension(const Partition& lambda) {
    if (lambda.empty()) return 1;
    const Partition conj = conjugate(lambda);
    // every prefix product of hooks divides n!, so dividing as we go is exact
    long long dim = factorial(lambda.size());
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j)
            dim /= lambda.parts()[i] + conj.parts()[j] - i - j - 1;
    return dim;
}

} // namespace spinstat

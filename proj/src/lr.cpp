#include "spinstat/lr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

namespace spinstat {

namespace {

// Counts LR fillings by placing the values 1..len(beta) one at a time.  The
// boxes of value v form a horizontal strip on top of the shape built so far,
// and the lattice condition reduces (for semistandard fillings read right to
// left, top to bottom) to: #v in rows <= r never exceeds #(v-1) in rows < r.
class LrCounter {
public:
    LrCounter(const Partition& gamma, const Partition& alpha, const Partition& beta)
        : gamma_(gamma.parts()), beta_(beta.parts()), rows_(gamma.rows()) {
        shape_.assign(rows_, 0);
        for (int i = 0; i < alpha.rows(); ++i) shape_[i] = alpha.parts()[i];
    }

    long long count() {
        prev_cum_.assign(rows_ + 1, 0);
        place_value(0);
        return count_;
    }

private:
    void place_value(std::size_t v) {
        if (v == beta_.size()) {
            ++count_; // box counts match, so the shape necessarily equals gamma
            return;
        }
        const std::vector<int> old_shape = shape_;
        std::vector<int> cum(rows_ + 1, 0);
        fill_row(v, 0, beta_[v], old_shape, cum);
    }

    void fill_row(std::size_t v, int r, int remaining,
                  const std::vector<int>& old_shape, std::vector<int>& cum) {
        if (r == rows_) {
            if (remaining == 0) {
                std::vector<int> saved_prev = std::move(prev_cum_);
                prev_cum_ = cum;
                place_value(v + 1);
                prev_cum_ = std::move(saved_prev);
            }
            return;
        }
        const int base = old_shape[r];
        // horizontal strip: new boxes in row r stay at or left of the end of
        // the previous shape's row r-1; the shape must remain a partition
        int hi = gamma_[r] - base;
        if (r > 0) {
            hi = std::min(hi, shape_[r - 1] - base);
            hi = std::min(hi, old_shape[r - 1] - base);
        }
        // lattice: cumulative count of v through row r bounded by the count
        // of v-1 through row r-1 (no bound for the first value)
        const int lattice_cap = (v == 0) ? remaining : prev_cum_[r] - cum[r];
        hi = std::min({hi, remaining, lattice_cap});
        for (int add = 0; add <= hi; ++add) {
            shape_[r] = base + add;
            cum[r + 1] = cum[r] + add;
            fill_row(v, r + 1, remaining - add, old_shape, cum);
        }
        shape_[r] = base;
    }

    std::vector<int> gamma_;
    std::vector<int> beta_;
    int rows_;
    std::vector<int> shape_;
    std::vector<int> prev_cum_; // cumulative count of the previous value by row
    long long count_ = 0;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

} // namespace

long long lr_coefficient(const Partition& gamma, const Partition& alpha,
                         const Partition& beta) {
    if (gamma.size() != alpha.size() + beta.size()) return 0;
    if (!contains(gamma, alpha) || !contains(gamma, beta)) return 0;
    if (beta.empty()) return 1; // sizes force gamma == alpha here

    thread_local std::map<LrKey, long long> memo;
    LrKey key{gamma.parts(), alpha.parts(), beta.parts()};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    long long value = LrCounter(gamma, alpha, beta).count();
    memo.emplace(std::move(key), value);
    return value;
}

long long lr_multi(const Partition& gamma, std::span<const Partition> factors) {
    if (factors.empty()) throw EmptyInput("lr_multi needs at least one factor");

    int total = 0;
    for (const Partition& f : factors) {
        total += f.size();
        if (!contains(gamma, f)) return 0;
    }
    if (total != gamma.size()) return 0;
    if (factors.size() == 1) return factors.front() == gamma ? 1 : 0;

    thread_local std::map<std::vector<std::vector<int>>, long long> memo;
    std::vector<std::vector<int>> key;
    key.reserve(factors.size() + 1);
    key.push_back(gamma.parts());
    for (const Partition& f : factors) key.push_back(f.parts());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const Partition& last = factors.back();
    const auto head = factors.first(factors.size() - 1);
    long long acc = 0;
    for (const Partition& mid : partitions_of(gamma.size() - last.size(), gamma.rows())) {
        if (!contains(gamma, mid)) continue;
        const long long outer = lr_coefficient(gamma, mid, last);
        if (outer == 0) continue;
        acc += lr_multi(mid, head) * outer;
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

long long lr_multi(const Partition& gamma, std::initializer_list<Partition> factors) {
    return lr_multi(gamma, std::span<const Partition>(factors.begin(), factors.size()));
}

} // namespace spinstat

#include "spinstat/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace spinstat {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRoundingBound = 1e-6;
} // namespace

CyclotomicSum::CyclotomicSum(int order) : order_(order), coef_(order, 0) {
    if (order < 1) throw std::invalid_argument("CyclotomicSum order must be positive");
}

CyclotomicSum CyclotomicSum::one(int order) {
    CyclotomicSum s(order);
    s.coef_[0] = 1;
    return s;
}

void CyclotomicSum::add(long long coeff, long long k) {
    k %= order_;
    if (k < 0) k += order_;
    coef_[static_cast<std::size_t>(k)] += coeff;
}

void CyclotomicSum::scale(long long c) {
    for (long long& v : coef_) v *= c;
}

CyclotomicSum CyclotomicSum::lifted(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::invalid_argument("CyclotomicSum lift needs a multiple of the order");
    CyclotomicSum out(new_order);
    const int stride = new_order / order_;
    for (int k = 0; k < order_; ++k) out.coef_[k * stride] = coef_[k];
    return out;
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
    if (other.order_ != order_)
        throw std::invalid_argument("CyclotomicSum += needs matching orders");
    for (int k = 0; k < order_; ++k) coef_[k] += other.coef_[k];
    return *this;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
    const int order = std::lcm(a.order_, b.order_);
    const CyclotomicSum la = a.lifted(order);
    const CyclotomicSum lb = b.lifted(order);
    CyclotomicSum out(order);
    for (int i = 0; i < order; ++i) {
        if (la.coef_[i] == 0) continue;
        for (int j = 0; j < order; ++j) {
            if (lb.coef_[j] == 0) continue;
            int k = i + j;
            if (k >= order) k -= order;
            out.coef_[k] += la.coef_[i] * lb.coef_[j];
        }
    }
    return out;
}

std::complex<double> CyclotomicSum::value() const {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < order_; ++k) {
        if (coef_[k] == 0) continue;
        const double angle = kTwoPi * k / order_;
        acc += static_cast<double>(coef_[k]) *
               std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

Problem::Problem(Partition f_, int n_, TwiceSpin twice_s_, Partition lambda_)
    : f(std::move(f_)), n(n_), twice_s(twice_s_), lambda(std::move(lambda_)) {
    if (n < 2) throw std::invalid_argument("Problem needs n >= 2");
    if (f.rows() > 2 * n)
        throw std::invalid_argument("tableau f may have at most 2n rows");
    if (twice_s.twice < 0) throw std::invalid_argument("twice_s must be >= 0");
    if (lambda.size() != n)
        throw SizeMismatch("lambda must be a partition of n");
}

std::optional<U2Tableau> beta_of(const Partition& f, int n, TwiceSpin s) {
    if (n < 1 || f.size() % n != 0) return std::nullopt;
    const int q = f.size() / n;
    if (q < s.twice || (q - s.twice) % 2 != 0) return std::nullopt;
    return U2Tableau((q + s.twice) / 2, (q - s.twice) / 2);
}

long long a_identity(const Partition& f, int n, TwiceSpin s) {
    const auto beta = beta_of(f, n, s);
    if (!beta)
        throw BetaUndefined("beta(f,s) undefined for |f| = " + std::to_string(f.size()) +
                            ", n = " + std::to_string(n) + ", 2s = " + std::to_string(s.twice));
    const std::vector<Partition> factors(n, beta->shape());
    return lr_multi(f, factors);
}

namespace {

// Per-cycle inner sum over tuples of U(2)-tableaux, as an element of
// Z[zeta_m]: sum of Y^beta_{alphas} * zeta_m^{sum_p p|alpha_p|} * CG.
CyclotomicSum cycle_tuple_sum(int m, const Partition& beta, TwiceSpin s) {
    CyclotomicSum acc(m);
    std::vector<U2Tableau> tuple(m);
    std::vector<Partition> shapes(m);
    std::vector<TwiceSpin> cg_args;
    cg_args.reserve(m + 2);
    cg_args.emplace_back(m * s.twice + m - 1); // m s + (m-1)/2
    cg_args.emplace_back(m - 1);               // (m-1)/2

    auto visit = [&](auto&& self, int p, int remaining, int phase) -> void {
        if (p == m) {
            if (remaining != 0) return;
            for (int i = 0; i < m; ++i) shapes[i] = tuple[i].shape();
            const long long y = lr_multi(beta, shapes);
            if (y == 0) return;
            cg_args.resize(2);
            for (const U2Tableau& a : tuple) cg_args.push_back(spin_of_u2(a));
            const long long cg = multi_cg(cg_args);
            if (cg == 0) return;
            acc.add(y * cg, phase);
            return;
        }
        for (int k = 0; k <= remaining; ++k)
            for (int j = 0; 2 * j <= k; ++j) {
                tuple[p] = U2Tableau(k - j, j);
                self(self, p + 1, remaining - k, phase + (p + 1) * k);
            }
    };
    visit(visit, 0, beta.size(), 0);
    return acc;
}

} // namespace

CyclotomicSum a_class_exact(const Partition& f, int n, TwiceSpin s, const CycleType& cls) {
    if (cls.n() != n)
        throw SizeMismatch("cycle type does not sum to n");
    if (n < 1 || f.size() % n != 0)
        throw std::invalid_argument("a_class requires n | |f|");
    const int q = f.size() / n;
    const std::vector<int>& cycles = cls.cycles.parts();
    const int c = cls.cycle_count();

    int order = 1;
    for (int m : cycles) order = std::lcm(order, m);

    // candidate beta_b per cycle, with the per-cycle sums computed once per
    // distinct (m, beta)
    std::map<std::pair<int, Partition>, CyclotomicSum> inner;
    std::vector<std::vector<const Partition*>> candidates(c);
    std::vector<std::vector<Partition>> pools(c);
    for (int b = 0; b < c; ++b) {
        const int m = cycles[b];
        pools[b] = partitions_of(m * q, std::min(2 * m, f.rows()));
        for (const Partition& beta : pools[b]) {
            if (!contains(f, beta)) continue;
            candidates[b].push_back(&beta);
            inner.try_emplace(std::make_pair(m, beta), cycle_tuple_sum(m, beta, s));
        }
    }

    // enumerate beta tuples; the multi-fold LR weight Y^f_{betas} is carried
    // incrementally as a distribution over intermediate shapes contained in f
    CyclotomicSum total(order);
    std::vector<const Partition*> chosen(c);

    auto visit = [&](auto&& self, int b, const std::map<Partition, long long>& dist,
                     const CyclotomicSum& partial) -> void {
        if (b == c) {
            auto it = dist.find(f);
            if (it == dist.end()) return;
            CyclotomicSum term = partial.lifted(order);
            term.scale(it->second);
            total += term;
            return;
        }
        for (const Partition* beta : candidates[b]) {
            // grow every intermediate shape by beta via two-fold coefficients
            std::map<Partition, long long> next;
            for (const auto& [shape, weight] : dist) {
                for (const Partition& grown :
                     partitions_of(shape.size() + beta->size(), f.rows())) {
                    if (!contains(f, grown)) continue;
                    const long long y = lr_coefficient(grown, shape, *beta);
                    if (y) next[grown] += weight * y;
                }
            }
            if (next.empty()) continue;
            const CyclotomicSum& factor = inner.at(std::make_pair(cycles[b], *beta));
            self(self, b + 1, next, partial * factor);
        }
    };

    std::map<Partition, long long> start;
    start[Partition()] = 1;
    visit(visit, 0, start, CyclotomicSum::one(1));
    return total;
}

std::complex<double> a_class(const Partition& f, int n, TwiceSpin s, const CycleType& cls) {
    return a_class_exact(f, n, s, cls).value();
}

EngineValue nu_value(const Problem& p) {
    if (p.f.size() % p.n != 0) return {0, 0.0};
    if (!beta_of(p.f, p.n, p.twice_s)) return {0, 0.0};
    const int q = p.f.size() / p.n;

    std::complex<double> acc = 0.0;
    for (const ClassData& cd : conjugacy_classes(p.n)) {
        const long long chi = sn_character(p.lambda, cd.cycle_type);
        if (chi == 0) continue;
        const long long sgn_pow = (cd.sign < 0 && q % 2 != 0) ? -1 : 1;
        std::complex<double> a;
        if (cd.cycle_type.cycle_count() == p.n) {
            // identity class: all beta_b collapse to beta(f,s)
            a = static_cast<double>(a_identity(p.f, p.n, p.twice_s));
        } else {
            a = a_class_exact(p.f, p.n, p.twice_s, cd.cycle_type).value();
        }
        acc += static_cast<double>(cd.class_size * chi * sgn_pow) * a;
    }
    acc /= static_cast<double>(factorial(p.n));

    const long long rounded = std::llround(acc.real());
    const double residue = std::abs(acc - static_cast<double>(rounded));
    if (residue >= kRoundingBound)
        throw NonIntegerResult("nu accumulation residue " + std::to_string(residue) +
                               " for f = " + p.f.str());
    if (rounded < 0)
        throw NonIntegerResult("nu rounded negative for f = " + p.f.str());
    return {rounded, residue};
}

long long nu(const Problem& p) { return nu_value(p).nu; }

long long nu_sum_weighted(const Partition& f, int n, TwiceSpin s) {
    if (!beta_of(f, n, s)) return 0;
    return a_identity(f, n, s);
}

long long zero_weight_lr_dim(const Partition& f, int n) {
    if (n < 1 || f.size() % n != 0) return 0;
    const int q = f.size() / n;
    std::vector<U2Tableau> pool;
    for (int j = 0; 2 * j <= q; ++j) pool.emplace_back(q - j, j);

    std::vector<Partition> shapes(n);
    long long total = 0;
    auto visit = [&](auto&& self, int p, long long dims) -> void {
        if (p == n) {
            total += lr_multi(f, shapes) * dims;
            return;
        }
        for (const U2Tableau& a : pool) {
            shapes[p] = a.shape();
            self(self, p + 1, dims * (spin_of_u2(a).twice + 1));
        }
    };
    visit(visit, 0, 1);
    return total;
}

std::vector<TwiceSpin> admissible_spins(const Partition& f, int n) {
    std::vector<TwiceSpin> spins;
    if (n < 1 || f.size() % n != 0) return spins;
    const int q = f.size() / n;
    for (int t = q % 2; t <= q; t += 2) spins.emplace_back(t);
    return spins;
}

MultiplicityReport classify(const Partition& f, int n) {
    if (n < 2) throw std::invalid_argument("classify needs n >= 2");
    if (f.rows() > 2 * n)
        throw std::invalid_argument("tableau f may have at most 2n rows");

    MultiplicityReport report;
    report.f = f;
    report.n = n;
    report.admissible_spins = admissible_spins(f, n);

    const std::vector<Partition> lambdas = partitions_of(n, n);
    for (TwiceSpin s : report.admissible_spins) {
        int support = 0;
        for (const Partition& lambda : lambdas) {
            const long long v = nu(Problem(f, n, s, lambda));
            report.entries.push_back({s, lambda, v});
            if (v > 0) ++support;
        }
        report.spin_status.push_back({s, support == 1});
    }
    return report;
}

} // namespace spinstat

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "spinstat/lr.hpp"
#include "spinstat/su2.hpp"
#include "spinstat/symgroup.hpp"

namespace spinstat {

/// Exact finite sum of integer multiples of m-th roots of unity
/// (an element of Z[zeta_m]).  Phase factors e^{2 pi i k/m} are combined
/// symbolically; conversion to complex floating point happens once per
/// fully assembled term, so rounding error stays independent of the number
/// of terms summed.
class CyclotomicSum {
public:
    explicit CyclotomicSum(int order);
    static CyclotomicSum one(int order);

    int order() const { return order_; }
    const std::vector<long long>& coefficients() const { return coef_; }

    /// += coeff * e^{2 pi i k / order}.
    void add(long long coeff, long long k);
    void scale(long long c);
    /// Re-express over a multiple of the current order.
    CyclotomicSum lifted(int new_order) const;
    CyclotomicSum& operator+=(const CyclotomicSum& other); // same order
    friend CyclotomicSum operator*(const CyclotomicSum&, const CyclotomicSum&);

    std::complex<double> value() const;

private:
    int order_;
    std::vector<long long> coef_;
};

/// One multiplicity query nu(f, s lambda) for n particles.
struct Problem {
    Partition f;
    int n = 2;
    TwiceSpin twice_s;
    Partition lambda;

    /// Validates: n >= 2, f has at most 2n rows, |lambda| = n, 2s >= 0.
    Problem(Partition f_, int n_, TwiceSpin twice_s_, Partition lambda_);
};

struct ReportEntry {
    TwiceSpin twice_s;
    Partition lambda;
    long long nu = 0;
};

struct SpinStatus {
    TwiceSpin twice_s;
    bool definite = false; // exactly one lambda with nu > 0
};

struct MultiplicityReport {
    Partition f;
    int n = 2;
    std::vector<TwiceSpin> admissible_spins;
    std::vector<ReportEntry> entries; // spin-major; lambda in partitions_of(n,n) order
    std::vector<SpinStatus> spin_status;
};

/// The two-row tableau (|f|/2n + s, |f|/2n - s); present iff |f|/n is an
/// integer and |f|/n - 2s is even and nonnegative.
std::optional<U2Tableau> beta_of(const Partition& f, int n, TwiceSpin s);

/// Identity-class value: the n-fold LR coefficient of f over beta(f,s)
/// repeated n times.  Throws BetaUndefined when beta_of is absent.
long long a_identity(const Partition& f, int n, TwiceSpin s);

/// Class term A_[sigma]: sum over tuples of U(2|cycle|)-tableaux beta_b
/// (|beta_b| = |cycle_b| * |f|/n, at most 2|cycle_b| rows, contained in f)
/// weighted by the multi-fold LR coefficient of f, times per-cycle sums over
/// U(2)-tableau tuples carrying an exact phase e^{2 pi i (sum_p p|alpha_p|)/m}
/// and the (m+2)-fold Clebsch-Gordan coefficient
/// C(m s + (m-1)/2, (m-1)/2, S(alpha_1), ..., S(alpha_m)).
/// Requires n | |f|.
CyclotomicSum a_class_exact(const Partition& f, int n, TwiceSpin s, const CycleType& cls);
std::complex<double> a_class(const Partition& f, int n, TwiceSpin s, const CycleType& cls);

struct EngineValue {
    long long nu = 0;
    double residue = 0; // distance of the complex accumulation from nu
};

/// nu(f, s lambda) by the class sum
/// (1/n!) sum_[sigma] Omega chi^lambda(sigma) sgn(sigma)^{|f|/n} A_[sigma];
/// 0 immediately when n does not divide |f| or beta(f,s) is undefined.
/// Throws NonIntegerResult if the accumulation fails to round cleanly
/// (residue >= 1e-6) or rounds negative.
EngineValue nu_value(const Problem& p);
long long nu(const Problem& p);

/// a_identity when beta is defined, else 0; equals sum_lambda d_lambda nu.
long long nu_sum_weighted(const Partition& f, int n, TwiceSpin s);

/// Dimension of the full zero-weight space computed from the LR side:
/// sum over n-tuples of U(2)-tableaux alpha_p, each of |f|/n boxes, of
/// Y^f_{alpha_1..alpha_n} * prod_p (2 S(alpha_p) + 1).  Counts every
/// constituent of the zero-weight representation, including the mixed-spin
/// irreps that no nu(f, s lambda) sees; the equal-spin part alone is
/// sum_s (2s+1)^n * nu_sum_weighted(f, n, s).  Cross-checks the independent
/// semistandard-tableau count in the oracle module.
long long zero_weight_lr_dim(const Partition& f, int n);

/// Spins with nonzero-able multiplicity: empty unless n | |f|, else
/// 2s = |f|/n mod 2, ..., |f|/n.
std::vector<TwiceSpin> admissible_spins(const Partition& f, int n);

/// nu for every admissible spin and every lambda of n boxes, with per-spin
/// definiteness flags.  Requires f to have at most 2n rows.
MultiplicityReport classify(const Partition& f, int n);

} // namespace spinstat

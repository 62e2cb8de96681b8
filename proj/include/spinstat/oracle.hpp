#pragma once

#include <complex>
#include <span>

#include "spinstat/engine.hpp"

namespace spinstat {

/// Eigenphases in radians.  The order is fixed for reproducibility:
/// cycle-major (in the class's descending cycle order), then p = 1..m within
/// a cycle, with the +xi phase before the -xi phase.  Every consumer is a
/// symmetric function of the phases, so only determinism is at stake.
using PhaseVector = std::vector<double>;

struct QuadratureSpec {
    int nodes_per_variable = 0; // 0 = automatic trig-exact default
    double tolerance = 1e-6;
};

/// Default grid size 2(|f| + n(2s+1)) + 5, comfortably above the integrand's
/// Fourier bandwidth so the rectangle rule is exact.
int default_nodes(const Partition& f, int n, TwiceSpin s);

/// The 2n eigenphases of x(U, sigma, Theta):
/// (+-xi_b + theta_b + 2 pi p)/m_b for p = 1..m_b, per cycle b.
/// Throws LengthMismatch unless both angle sequences have one entry per cycle.
PhaseVector eigenphases_x(const CycleType& cls, std::span<const double> xi_hats,
                          std::span<const double> theta_hats);

/// U(m)-character value of f at eigenvalues e^{i phi_j}: power sums, then
/// Newton's identities, then the Jacobi-Trudi determinant (over complete
/// homogeneous or elementary values, whichever determinant is smaller).
/// Avoids the 0/0 of the bialternant at coincident phases.  Returns 0 when
/// f has more rows than there are phases.
std::complex<double> schur_eval(const Partition& f, const PhaseVector& phases);

/// chi^lambda(sigma) * prod_b chi^s(xi_b): the character of Q^{s lambda}
/// as a function of per-cycle SU(2) eigenphases.
double x_slambda_char(const Partition& lambda, TwiceSpin s, const CycleType& cls,
                      std::span<const double> xi_hats);

/// The integrand of the Theta-integral: K^f_{2n} at the eigenphases of
/// x(U, sigma, Theta).  The constraint sum theta_b = arg(sgn sigma) mod 2 pi
/// is the caller's responsibility.  Requires n >= 2.
std::complex<double> x_f_char(const Partition& f, int n, const CycleType& cls,
                              std::span<const double> xi_hats,
                              std::span<const double> theta_hats);

/// Per-class values of the fully integrated character product (the xi
/// integrals in SU(2) class measure and the constrained Theta integral with
/// one theta eliminated), ordered like conjugacy_classes(n).  Evaluating
/// several spins at once shares the character-evaluation grid.
std::vector<std::vector<std::complex<double>>> class_integrals_multi(
    const Partition& f, int n, std::span<const TwiceSpin> spins,
    const QuadratureSpec& spec);
std::vector<std::complex<double>> class_integrals(const Partition& f, int n,
                                                  TwiceSpin s,
                                                  const QuadratureSpec& spec);

struct OracleValue {
    long long nu = 0;
    double residue = 0;
};

/// Class-weighted assembly (1/n!) sum Omega chi^lambda T_[sigma]; never
/// throws, reports the rounding residue for the caller to police.
OracleValue assemble_nu(const Partition& lambda, int n,
                        std::span<const std::complex<double>> per_class);

OracleValue nu_oracle_value(const Problem& p, const QuadratureSpec& spec = {});

/// The verification endpoint: the multiplicity from the character integral,
/// bypassing all LR and Clebsch-Gordan machinery.  Throws NonIntegerResult
/// if the value fails to round within spec.tolerance (insufficient nodes or
/// a bug).
long long nu_oracle(const Problem& p, const QuadratureSpec& spec = {});

/// Dimension of the zero-weight subspace: semistandard tableaux of shape f
/// over the alphabet 1..2n whose content pairs satisfy
/// count(2j-1) + count(2j) = |f|/n for every j.  0 when n does not divide |f|.
long long zero_weight_dim(const Partition& f, int n);

} // namespace spinstat

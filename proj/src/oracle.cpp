#include "spinstat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace spinstat {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

// Which Jacobi-Trudi determinant to use: rows of `shape` index the matrix,
// entries are sym[shape[i] - i + j] where sym is h (use_elementary = false)
// or e (use_elementary = true).
struct JtPlan {
    std::vector<int> shape;
    bool use_elementary = false;
    int det_size = 0;
    int max_index = 0; // largest symmetric-function subscript required
};

JtPlan jt_plan(const Partition& f) {
    JtPlan plan;
    if (f.empty()) return plan;
    const Partition conj = conjugate(f);
    if (conj.rows() < f.rows()) {
        plan.shape = conj.parts();
        plan.use_elementary = true;
    } else {
        plan.shape = f.parts();
        plan.use_elementary = false;
    }
    plan.det_size = static_cast<int>(plan.shape.size());
    plan.max_index = plan.shape[0] + plan.det_size - 1;
    return plan;
}

// Determinant by Gaussian elimination with partial pivoting; sizes here are
// tiny (min(rows, columns) of f).
Complex determinant(std::vector<Complex>& m, int n) {
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
        if (pivot != col) {
            for (int k = col; k < n; ++k)
                std::swap(m[col * n + k], m[pivot * n + k]);
            det = -det;
        }
        const Complex d = m[col * n + col];
        if (d == 0.0) return 0.0;
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            const Complex factor = m[r * n + col] / d;
            if (factor == 0.0) continue;
            for (int k = col; k < n; ++k) m[r * n + k] -= factor * m[col * n + k];
        }
    }
    return det;
}

// Newton's identities from power sums p_1..p_K, then the Jacobi-Trudi
// determinant of the plan.  nvars caps the elementary values (e_k = 0 for
// k > nvars).  Scratch buffers live in the evaluator so grid loops do not
// allocate per node.
class SchurEvaluator {
public:
    explicit SchurEvaluator(const Partition& f)
        : plan_(jt_plan(f)),
          sym_(plan_.max_index + 1, 0.0),
          mat_(static_cast<std::size_t>(plan_.det_size) * plan_.det_size) {
        sym_[0] = 1.0;
    }

    const JtPlan& plan() const { return plan_; }
    int max_index() const { return plan_.max_index; }

    Complex eval(std::span<const Complex> p, int nvars) {
        if (plan_.shape.empty()) return 1.0;
        const int K = plan_.max_index;
        for (int k = 1; k <= K; ++k) {
            if (plan_.use_elementary && k > nvars) {
                sym_[k] = 0.0;
                continue;
            }
            Complex acc = 0.0;
            for (int i = 1; i <= k; ++i) {
                const Complex term = p[i] * sym_[k - i];
                acc += (plan_.use_elementary && i % 2 == 0) ? -term : term;
            }
            sym_[k] = acc * (1.0 / k);
        }
        const int d = plan_.det_size;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const int idx = plan_.shape[i] - i + j;
                mat_[i * d + j] = (idx >= 0 && idx <= K) ? sym_[idx] : 0.0;
            }
        return determinant(mat_, d);
    }

private:
    JtPlan plan_;
    std::vector<Complex> sym_;
    std::vector<Complex> mat_;
};

} // namespace

int default_nodes(const Partition& f, int n, TwiceSpin s) {
    return 2 * (f.size() + n * (s.twice + 1)) + 5;
}

PhaseVector eigenphases_x(const CycleType& cls, std::span<const double> xi_hats,
                          std::span<const double> theta_hats) {
    const std::size_t c = static_cast<std::size_t>(cls.cycle_count());
    if (xi_hats.size() != c || theta_hats.size() != c)
        throw LengthMismatch("eigenphases_x needs one xi and one theta per cycle");
    PhaseVector phases;
    phases.reserve(2 * static_cast<std::size_t>(cls.n()));
    for (std::size_t b = 0; b < c; ++b) {
        const int m = cls.cycles.parts()[b];
        for (int p = 1; p <= m; ++p) {
            phases.push_back((+xi_hats[b] + theta_hats[b] + kTwoPi * p) / m);
            phases.push_back((-xi_hats[b] + theta_hats[b] + kTwoPi * p) / m);
        }
    }
    return phases;
}

std::complex<double> schur_eval(const Partition& f, const PhaseVector& phases) {
    const int nvars = static_cast<int>(phases.size());
    if (f.rows() > nvars) return 0.0;
    SchurEvaluator eval(f);
    std::vector<Complex> p(eval.max_index() + 1, 0.0);
    for (int k = 1; k <= eval.max_index(); ++k) {
        Complex acc = 0.0;
        for (double phi : phases)
            acc += Complex(std::cos(k * phi), std::sin(k * phi));
        p[k] = acc;
    }
    return eval.eval(p, nvars);
}

double x_slambda_char(const Partition& lambda, TwiceSpin s, const CycleType& cls,
                      std::span<const double> xi_hats) {
    if (xi_hats.size() != static_cast<std::size_t>(cls.cycle_count()))
        throw LengthMismatch("x_slambda_char needs one xi per cycle");
    double prod = static_cast<double>(sn_character(lambda, cls));
    for (double xi : xi_hats) prod *= su2_character(s, xi);
    return prod;
}

std::complex<double> x_f_char(const Partition& f, int n, const CycleType& cls,
                              std::span<const double> xi_hats,
                              std::span<const double> theta_hats) {
    if (n < 2) throw std::invalid_argument("x_f_char needs n >= 2");
    if (cls.n() != n) throw SizeMismatch("cycle type does not sum to n");
    if (f.rows() > 2 * n)
        throw std::invalid_argument("tableau f may have at most 2n rows");
    return schur_eval(f, eigenphases_x(cls, xi_hats, theta_hats));
}

namespace {

// Quadrature over one class for several spins at once, sharing the character
// evaluations.  Variables: one psi per cycle with the SU(2) class measure
// rewritten through the character identity
//   sin^2(m psi) chi^s(m psi) = sin^2(psi) chi^{ms+(m-1)/2}(psi) chi^{(m-1)/2}(psi),
// and one theta per cycle with the last theta eliminated by the constraint
// sum theta_b = arg(sgn sigma).  Under psi_b = xi_b/m_b the eigenphases are
// +-psi_b + (theta_b + 2 pi p)/m_b, so the power sums collapse per cycle:
//   p_k = sum_{b : m_b | k} m_b e^{i (k/m_b) theta_b} 2 cos(k psi_b).
std::vector<Complex> quadrature_class(const Partition& f, int n,
                                      std::span<const TwiceSpin> spins,
                                      const ClassData& cd, int N) {
    const std::vector<int>& ms = cd.cycle_type.cycles.parts();
    const int c = static_cast<int>(ms.size());
    const int nspins = static_cast<int>(spins.size());
    const double phi0 = cd.sign < 0 ? kPi : 0.0;

    SchurEvaluator schur(f);
    const int K = schur.max_index();

    // shared cosine table: cosT[j][k] = 2 cos(k psi_j)
    std::vector<double> cosT(static_cast<std::size_t>(N) * (K + 1));
    for (int j = 0; j < N; ++j) {
        const double psi = kTwoPi * j / N;
        for (int k = 0; k <= K; ++k) cosT[j * (K + 1) + k] = 2.0 * std::cos(k * psi);
    }

    // per-spin, per-cycle weights (2/N) sin^2 chi^{m s+(m-1)/2} chi^{(m-1)/2}
    std::vector<std::vector<double>> weight(nspins,
                                            std::vector<double>(c * N));
    for (int si = 0; si < nspins; ++si)
        for (int b = 0; b < c; ++b) {
            const int m = ms[b];
            const TwiceSpin hi(m * spins[si].twice + m - 1);
            const TwiceSpin lo(m - 1);
            for (int j = 0; j < N; ++j) {
                const double psi = kTwoPi * j / N;
                const double sn = std::sin(psi);
                weight[si][b * N + j] = (2.0 / N) * sn * sn *
                                        su2_character(hi, psi) *
                                        su2_character(lo, psi);
            }
        }

    // theta tables: e^{i kk theta} for theta on the grid and on the
    // eliminated-variable values phi0 - 2 pi J/N
    const int KK = K; // kk = k/m_b <= K
    std::vector<Complex> thetaFree(static_cast<std::size_t>(N) * (KK + 1));
    std::vector<Complex> thetaElim(static_cast<std::size_t>(N) * (KK + 1));
    for (int j = 0; j < N; ++j) {
        const double th = kTwoPi * j / N;
        const double te = phi0 - th;
        for (int kk = 0; kk <= KK; ++kk) {
            thetaFree[j * (KK + 1) + kk] = Complex(std::cos(kk * th), std::sin(kk * th));
            thetaElim[j * (KK + 1) + kk] = Complex(std::cos(kk * te), std::sin(kk * te));
        }
    }

    // cycles contributing to each power sum
    std::vector<std::vector<int>> contributors(K + 1);
    for (int k = 1; k <= K; ++k)
        for (int b = 0; b < c; ++b)
            if (k % ms[b] == 0) contributors[k].push_back(b);

    std::vector<Complex> acc(nspins, 0.0);
    std::vector<Complex> p(K + 1, 0.0);
    std::vector<Complex> tf(static_cast<std::size_t>(c) * (K + 1)); // m_b e^{i(k/m_b) theta_b}
    std::vector<int> tj(std::max(c - 1, 0), 0);
    std::vector<int> pj(c, 0);

    // outer odometer over the free thetas
    while (true) {
        const int J = c > 1
                          ? std::accumulate(tj.begin(), tj.end(), 0) % N
                          : 0;
        for (int b = 0; b < c; ++b) {
            const Complex* table = (b == c - 1)
                                       ? &thetaElim[(c > 1 ? J : 0) * (KK + 1)]
                                       : &thetaFree[tj[b] * (KK + 1)];
            const int m = ms[b];
            for (int k = m; k <= K; k += m)
                tf[b * (K + 1) + k] = static_cast<double>(m) * table[k / m];
        }

        // inner odometer over the psis
        std::fill(pj.begin(), pj.end(), 0);
        while (true) {
            for (int k = 1; k <= K; ++k) {
                Complex s = 0.0;
                for (int b : contributors[k])
                    s += tf[b * (K + 1) + k] * cosT[pj[b] * (K + 1) + k];
                p[k] = s;
            }
            const Complex char_value = schur.eval(p, 2 * n);
            for (int si = 0; si < nspins; ++si) {
                double w = 1.0;
                for (int b = 0; b < c; ++b) w *= weight[si][b * N + pj[b]];
                acc[si] += w * char_value;
            }
            int d = 0;
            while (d < c && ++pj[d] == N) pj[d++] = 0;
            if (d == c) break;
        }

        int d = 0;
        while (d < c - 1 && ++tj[d] == N) tj[d++] = 0;
        if (d >= c - 1) break;
    }

    const double theta_norm = std::pow(1.0 / N, c > 1 ? c - 1 : 0);
    for (Complex& v : acc) v *= theta_norm;
    return acc;
}

} // namespace

std::vector<std::vector<std::complex<double>>> class_integrals_multi(
    const Partition& f, int n, std::span<const TwiceSpin> spins,
    const QuadratureSpec& spec) {
    if (n < 2) throw std::invalid_argument("class_integrals_multi needs n >= 2");
    if (f.rows() > 2 * n)
        throw std::invalid_argument("tableau f may have at most 2n rows");

    int N = spec.nodes_per_variable;
    if (N <= 0)
        for (TwiceSpin s : spins) N = std::max(N, default_nodes(f, n, s));
    if (N < 2) N = 2;

    const std::vector<ClassData> classes = conjugacy_classes(n);
    std::vector<std::vector<Complex>> out(spins.size(),
                                          std::vector<Complex>(classes.size()));
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const std::vector<Complex> vals = quadrature_class(f, n, spins, classes[ci], N);
        for (std::size_t si = 0; si < spins.size(); ++si) out[si][ci] = vals[si];
    }
    return out;
}

std::vector<std::complex<double>> class_integrals(const Partition& f, int n,
                                                  TwiceSpin s,
                                                  const QuadratureSpec& spec) {
    const TwiceSpin one[1] = {s};
    return std::move(class_integrals_multi(f, n, one, spec)[0]);
}

OracleValue assemble_nu(const Partition& lambda, int n,
                        std::span<const std::complex<double>> per_class) {
    const std::vector<ClassData> classes = conjugacy_classes(n);
    if (per_class.size() != classes.size())
        throw LengthMismatch("assemble_nu needs one value per conjugacy class");
    Complex acc = 0.0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        acc += static_cast<double>(classes[ci].class_size *
                                   sn_character(lambda, classes[ci].cycle_type)) *
               per_class[ci];
    acc /= static_cast<double>(factorial(n));
    OracleValue v;
    v.nu = std::llround(acc.real());
    v.residue = std::abs(acc - static_cast<double>(v.nu));
    return v;
}

OracleValue nu_oracle_value(const Problem& p, const QuadratureSpec& spec) {
    const std::vector<Complex> per_class = class_integrals(p.f, p.n, p.twice_s, spec);
    return assemble_nu(p.lambda, p.n, per_class);
}

long long nu_oracle(const Problem& p, const QuadratureSpec& spec) {
    const OracleValue v = nu_oracle_value(p, spec);
    if (v.residue >= spec.tolerance)
        throw NonIntegerResult("nu_oracle residue " + std::to_string(v.residue) +
                               " for f = " + p.f.str() +
                               " (insufficient quadrature nodes or a bug)");
    if (v.nu < 0)
        throw NonIntegerResult("nu_oracle rounded negative for f = " + p.f.str());
    return v.nu;
}

namespace {

class ZeroWeightCounter {
public:
    ZeroWeightCounter(const Partition& f, int n, int q)
        : shape_(f.parts()), n_(n), budget_(n, q) {
        grid_.resize(shape_.size());
        for (std::size_t r = 0; r < shape_.size(); ++r) grid_[r].assign(shape_[r], 0);
    }

    long long count() {
        fill(0, 0);
        return count_;
    }

private:
    void fill(std::size_t r, int col) {
        if (r == shape_.size()) {
            ++count_; // budgets sum to the box count, so all are exactly spent
            return;
        }
        if (col == shape_[r]) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, grid_[r][col - 1]);
        if (r > 0 && col < shape_[r - 1]) lo = std::max(lo, grid_[r - 1][col] + 1);
        for (int v = lo; v <= 2 * n_; ++v) {
            int& b = budget_[(v - 1) / 2];
            if (b == 0) continue;
            --b;
            grid_[r][col] = v;
            fill(r, col + 1);
            ++b;
        }
    }

    std::vector<int> shape_;
    int n_;
    std::vector<int> budget_;
    std::vector<std::vector<int>> grid_;
    long long count_ = 0;
};

} // namespace

long long zero_weight_dim(const Partition& f, int n) {
    if (n < 1) throw std::invalid_argument("zero_weight_dim needs n >= 1");
    if (f.size() % n != 0) return 0;
    if (f.empty()) return 1;
    return ZeroWeightCounter(f, n, f.size() / n).count();
}

} // namespace spinstat

#pragma once

#include "spinstat/tableaux.hpp"

namespace spinstat {

/// Conjugacy class of S_n, labelled by its cycle-length partition.
struct CycleType {
    Partition cycles;

    int n() const { return cycles.size(); }
    int cycle_count() const { return cycles.rows(); }

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType& a, const CycleType& b) {
        return a.cycles <=> b.cycles;
    }
};

struct ClassData {
    CycleType cycle_type;
    long long class_size = 0; // number of permutations in the class
    int sign = 1;             // (-1)^(n - cycle_count)
};

/// All conjugacy classes of S_n (1 <= n <= 12), in ascending lexicographic
/// order on the cycle type, so the identity class comes first.  Class sizes
/// are n! / prod_k (k^{m_k} m_k!) with m_k the number of k-cycles.
std::vector<ClassData> conjugacy_classes(int n);

/// Irreducible character chi^lambda(sigma) for sigma of the given cycle type,
/// by the Murnaghan-Nakayama border-strip recursion.  Exact integers;
/// memoized per thread.  Throws SizeMismatch unless |lambda| = n.
long long sn_character(const Partition& lambda, const CycleType& cls);

/// Dimension d_lambda of the S_n irreducible, by the hook-length formula.
long long sn_dimension(const Partition& lambda);

long long factorial(int n);

} // namespace spinstat

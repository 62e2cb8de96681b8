#pragma once

#include <initializer_list>
#include <span>

#include "spinstat/tableaux.hpp"

namespace spinstat {

/// Two-row U(2) tableau (row1 >= row2 >= 0).  Carries spin (row1 - row2)/2.
struct U2Tableau {
    int row1 = 0;
    int row2 = 0;

    U2Tableau() = default;
    U2Tableau(int r1, int r2);

    int boxes() const { return row1 + row2; }
    Partition shape() const;

    friend bool operator==(const U2Tableau&, const U2Tableau&) = default;
    friend auto operator<=>(const U2Tableau&, const U2Tableau&) = default;
};

/// chi^s(psi) = sin((2s+1) psi)/sin(psi), evaluated as the finite cosine sum
/// sum_{m=-s..s} e^{2 i m psi}, which removes the sin(psi) = 0 singularity
/// exactly.
double su2_character(TwiceSpin s, double psi);

TwiceSpin spin_of_u2(const U2Tableau& alpha);

/// 1 iff |s1 - s2| <= s3 <= s1 + s2 and s1 + s2 + s3 is an integer, else 0.
int triangle_cg(TwiceSpin s1, TwiceSpin s2, TwiceSpin s3);

/// Multiplicity of the trivial representation in the tensor product of the
/// given spins.  Exact integers by the pairwise coupling recursion
/// C(s1,...,s_{r+1}) = sum_s C(s1,...,s_{r-1},s) C(s,s_r,s_{r+1}) with base
/// cases C(s) = delta_{s,0} and C(s1,s2) = delta_{s1,s2}; numerical
/// integration is only ever a test oracle.  Throws EmptyInput on no spins.
long long multi_cg(std::span<const TwiceSpin> spins);
long long multi_cg(std::initializer_list<TwiceSpin> spins);

} // namespace spinstat

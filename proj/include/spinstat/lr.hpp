#pragma once

#include <initializer_list>
#include <span>

#include "spinstat/tableaux.hpp"

namespace spinstat {

/// Littlewood-Richardson coefficient Y^gamma_{alpha,beta}: the number of
/// semistandard fillings of the skew shape gamma/alpha with content beta
/// whose reverse reading word is a lattice word.  Returns 0 on size mismatch
/// or non-containment; exact integers, memoized per thread.
long long lr_coefficient(const Partition& gamma, const Partition& alpha,
                         const Partition& beta);

/// c-fold coefficient Y^gamma_{factors...} by iterated two-fold expansion
/// over intermediate shapes (pruned by size and containment).  A single
/// factor gives delta_{gamma,factor}.  Empty partitions are legal factors.
/// Throws EmptyInput when no factor is given.
long long lr_multi(const Partition& gamma, std::span<const Partition> factors);
long long lr_multi(const Partition& gamma, std::initializer_list<Partition> factors);

} // namespace spinstat

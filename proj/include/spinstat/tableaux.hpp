#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "spinstat/errors.hpp"

namespace spinstat {

/// Integer partition: weakly decreasing row lengths, stored canonically
/// without trailing zeros.  One type serves every tableau label in the
/// project (the SU(2n) tableau f, the S_n label lambda, and the intermediate
/// U(k) tableaux); row-count limits are validated at API boundaries rather
/// than baked into the type.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes (strips trailing zeros); throws NotWeaklyDecreasing if
    /// any part exceeds its predecessor or a part is negative.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Total number of boxes.
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// Length of row i (0-based); 0 beyond the last row.
    int row(int i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    /// Text form used by the CLI and JSON: comma-separated row lengths,
    /// e.g. "3,2,1"; the empty partition is spelled "0".
    std::string str() const;
    static Partition parse(std::string_view text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition make_partition(std::vector<int> parts);

/// Transposed diagram; an involution.
Partition conjugate(const Partition& p);

/// All partitions of k with at most max_rows rows, each exactly once, in
/// descending lexicographic order ((k) first, the single column last).
std::vector<Partition> partitions_of(int k, int max_rows);

/// True iff inner's diagram fits inside outer's row by row.
bool contains(const Partition& outer, const Partition& inner);

/// Spin carried exactly as the integer 2s, so half-odd-integral spins never
/// touch floating point.
struct TwiceSpin {
    int twice = 0;

    constexpr TwiceSpin() = default;
    constexpr explicit TwiceSpin(int t) : twice(t) {}

    friend constexpr bool operator==(const TwiceSpin&, const TwiceSpin&) = default;
    friend constexpr auto operator<=>(const TwiceSpin&, const TwiceSpin&) = default;

    bool integral() const { return twice % 2 == 0; }
    /// "0", "1/2", "1", "3/2", ...
    std::string str() const;
};

} // namespace spinstat

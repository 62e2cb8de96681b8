#include "spinstat/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace spinstat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw NotWeaklyDecreasing("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotWeaklyDecreasing("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty partition text");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad partition text: \"" + std::string(text) + "\"");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition make_partition(std::vector<int> parts) {
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(p.parts()[0], 0);
    for (int r : p.parts())
        for (int j = 0; j < r; ++j) ++cols[j];
    return Partition(std::move(cols));
}

namespace {

void enumerate_partitions(int remaining, int max_part, int max_rows,
                          std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_rows == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // smaller rows cannot absorb what is left
        if (static_cast<long long>(part) * max_rows < remaining) break;
        stack.push_back(part);
        enumerate_partitions(remaining - part, part, max_rows - 1, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int k, int max_rows) {
    if (k < 0 || max_rows < 0)
        throw std::invalid_argument("partitions_of needs k >= 0 and max_rows >= 0");
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate_partitions(k, k, max_rows, stack, out);
    return out;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.rows() > outer.rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts()[i] > outer.parts()[i]) return false;
    return true;
}

std::string TwiceSpin::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

} // namespace spinstat

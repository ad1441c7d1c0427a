#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tensorann {

using Entry = std::int64_t;
using Sequence = std::vector<Entry>;

/// Weakly decreasing sequence of positive integers, stored without trailing zeros.
/// The empty partition is the default value.
class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; negative entries or increases throw std::invalid_argument.
    explicit Partition(Sequence parts);
    Partition(std::initializer_list<Entry> parts) : Partition(Sequence(parts)) {}

    const Sequence& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Entry size() const noexcept;

    /// 1-based part, 0 past the end.
    Entry part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    /// Zero-padded copy of length n (n >= length()).
    Sequence padded(std::size_t n) const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    Sequence parts_;
};

struct PartitionPair {
    Partition lambda;
    Partition mu;

    auto operator<=>(const PartitionPair&) const = default;
    bool operator==(const PartitionPair&) const = default;
};

using PairSet = std::set<PartitionPair>;

Partition dual(const Partition& lambda);

/// All length-(p-1) sequences interlacing a weakly decreasing length-p sequence.
std::set<Sequence> gt_single(std::span<const Entry> sequence);

/// One Gelfand-Tsetlin step on each side of the pair independently; outputs are canonical.
PairSet gt_pair(const PartitionPair& pair);

/// The i-fold image of {pair} under gt_pair.
PairSet gt_iterated(const PartitionPair& pair, std::size_t iterations);

/// a is reachable from b by repeated GT steps. Closed form: component lengths and entries
/// of a are bounded by those of b.
bool leq(const PartitionPair& a, const PartitionPair& b);

/// {a : a <= b}, computed as the closure of {b} under gt_pair.
PairSet downset(const PartitionPair& b);

/// Bound (lambda_1 + mu_1 + 1)^(p + q) on |downset(b)|.
std::uint64_t downset_bound(const PartitionPair& b);

/// Standard Young tableaux of shape lambda via the hook-length product.
std::uint64_t std_tableaux_count(const Partition& lambda);
/// Same count by exhaustive placement of 1..d; exponential, intended for small shapes.
std::uint64_t std_tableaux_count_enumerated(const Partition& lambda);

/// "3,1" and "" (empty partition).
Partition parse_partition(std::string_view text);
/// "3,1|2", "2,1|", "|".
PartitionPair parse_pair(std::string_view text);
std::string to_string(const Partition& lambda);
std::string to_string(const PartitionPair& pair);
std::string to_string(const Sequence& seq);

/// All partitions with at most max_length parts, each at most max_entry.
std::vector<Partition> partitions_in_box(std::size_t max_length, Entry max_entry);
/// All partitions of d.
std::vector<Partition> partitions_of(Entry d);

}  // namespace tensorann

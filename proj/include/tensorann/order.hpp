#pragma once

#include "tensorann/partitions.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tensorann {

/// All length-(n-1) sequences interlacing the weakly decreasing sequence w (negative entries
/// allowed), each once, in increasing lexicographic order.
std::vector<Sequence> branch(const Sequence& w);

/// (lambda_1, ..., lambda_p, 0^padding, -mu_q, ..., -mu_1).
struct PaddedWeight {
    PartitionPair pair;
    std::size_t padding = 0;

    Sequence sequence() const;
    std::size_t length() const noexcept;
};

/// The padded weight of pair at the given level; throws std::invalid_argument if the level is
/// below the total length p + q.
PaddedWeight padded_weight(const PartitionPair& pair, std::size_t level);

/// Simple constituents of a restriction to gl(level) or sl(level).
enum class Convention { gl, sl };

struct SCSet {
    std::size_t level = 0;
    std::set<Sequence> weights;  // gl highest weights
    std::size_t depth = 0;       // number of restriction steps used
    bool stabilized = false;     // two consecutive depths gave the same set

    /// sl classes: consecutive differences w_i - w_(i+1).
    std::set<Sequence> sl_classes() const;
    bool contains(const SCSet& other, Convention c = Convention::gl) const;
};

/// Constituents of V_{lambda mu} restricted to gl(n), obtained by branching the padded weight
/// down from level max(n, p+q) + depth.
SCSet sc_set_at_depth(const PartitionPair& pair, std::size_t n, std::size_t depth);

inline constexpr std::size_t kMaxScDepth = 64;
/// Increases the depth until two consecutive depths agree (heuristic stabilization). If that
/// does not happen by max_depth the result has stabilized = false.
SCSet sc_set(const PartitionPair& pair, std::size_t n, std::size_t max_depth = kMaxScDepth);

struct ContainmentReport {
    bool contained = false;       // SC sets of a inside those of b at every checked level
    bool order_decision = false;  // leq(a, b)
    std::vector<std::size_t> levels;
    std::vector<std::size_t> stabilization_depths;  // per level, the larger of the two depths
    bool all_stabilized = true;
    /// A level and a constituent of b missing from a, when one exists. Strictness of the
    /// annihilator inclusion is only claimed when such a witness was found.
    std::optional<std::pair<std::size_t, Sequence>> separating_witness;
};

/// SC(V_a, g_n) inside SC(V_b, g_n) for every 2 <= n <= n_max.
ContainmentReport sc_containment(const PartitionPair& a, const PartitionPair& b, std::size_t n_max,
                                 Convention c = Convention::gl);
bool sc_contained(const PartitionPair& a, const PartitionPair& b, std::size_t n_max, Convention c = Convention::gl);

/// Ann V_b inside Ann V_a, decided by the order: a <= b.
bool ann_contained(const PartitionPair& a, const PartitionPair& b);

/// The unique pair in downset(candidate) whose stabilized SC sets match every observation
/// (keyed by level). Throws std::logic_error if more than one pair matches.
std::optional<PartitionPair> identify_by_annihilator(const std::map<std::size_t, std::set<Sequence>>& observations,
                                                     const PartitionPair& candidate);

}  // namespace tensorann

#include "tensorann/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensorann {

std::vector<Sequence> branch(const Sequence& w) {
    auto s = gt_single(w);
    return {s.begin(), s.end()};
}

Sequence PaddedWeight::sequence() const {
    Sequence out(pair.lambda.parts().begin(), pair.lambda.parts().end());
    out.insert(out.end(), padding, 0);
    for (auto it = pair.mu.parts().rbegin(); it != pair.mu.parts().rend(); ++it) out.push_back(-*it);
    return out;
}

std::size_t PaddedWeight::length() const noexcept { return pair.lambda.length() + padding + pair.mu.length(); }

PaddedWeight padded_weight(const PartitionPair& pair, std::size_t level) {
    const std::size_t used = pair.lambda.length() + pair.mu.length();
    if (level < used)
        throw std::invalid_argument("level " + std::to_string(level) + " is below the length " + std::to_string(used) +
                                    " of " + to_string(pair));
    return {pair, level - used};
}

std::set<Sequence> SCSet::sl_classes() const {
    std::set<Sequence> out;
    for (auto& w : weights) {
        Sequence d;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) d.push_back(w[i] - w[i + 1]);
        out.insert(d);
    }
    return out;
}

bool SCSet::contains(const SCSet& other, Convention c) const {
    if (c == Convention::gl) return std::includes(weights.begin(), weights.end(), other.weights.begin(), other.weights.end());
    auto mine = sl_classes(), theirs = other.sl_classes();
    return std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
}

SCSet sc_set_at_depth(const PartitionPair& pair, std::size_t n, std::size_t depth) {
    const std::size_t used = pair.lambda.length() + pair.mu.length();
    const std::size_t top = std::max(n, used) + depth;
    std::set<Sequence> current{padded_weight(pair, top).sequence()};
    for (std::size_t level = top; level > n; --level) {
        std::set<Sequence> next;
        for (auto& w : current) next.merge(gt_single(w));
        current = std::move(next);
    }
    return {n, std::move(current), depth, false};
}

SCSet sc_set(const PartitionPair& pair, std::size_t n, std::size_t max_depth) {
    SCSet previous = sc_set_at_depth(pair, n, 0);
    for (std::size_t depth = 1; depth <= max_depth; ++depth) {
        SCSet current = sc_set_at_depth(pair, n, depth);
        if (current.weights == previous.weights) {
            previous.stabilized = true;
            return previous;
        }
        previous = std::move(current);
    }
    return previous;
}

ContainmentReport sc_containment(const PartitionPair& a, const PartitionPair& b, std::size_t n_max, Convention c) {
    ContainmentReport report;
    report.order_decision = leq(a, b);
    report.contained = true;
    for (std::size_t n = 2; n <= n_max; ++n) {
        SCSet sa = sc_set(a, n), sb = sc_set(b, n);
        report.levels.push_back(n);
        report.stabilization_depths.push_back(std::max(sa.depth, sb.depth));
        report.all_stabilized = report.all_stabilized && sa.stabilized && sb.stabilized;
        if (!sb.contains(sa, c)) report.contained = false;
        if (!report.separating_witness && !sa.contains(sb, c)) {
            for (auto& w : sb.weights)
                if (!sa.weights.contains(w)) {
                    report.separating_witness = {n, w};
                    break;
                }
        }
    }
    return report;
}

bool sc_contained(const PartitionPair& a, const PartitionPair& b, std::size_t n_max, Convention c) {
    return sc_containment(a, b, n_max, c).contained;
}

bool ann_contained(const PartitionPair& a, const PartitionPair& b) { return leq(a, b); }

std::optional<PartitionPair> identify_by_annihilator(const std::map<std::size_t, std::set<Sequence>>& observations,
                                                     const PartitionPair& candidate) {
    std::optional<PartitionPair> found;
    for (auto& pair : downset(candidate)) {
        bool match = true;
        for (auto& [level, weights] : observations)
            if (sc_set(pair, level).weights != weights) {
                match = false;
                break;
            }
        if (!match) continue;
        if (found)
            throw std::logic_error("identify_by_annihilator: both " + to_string(*found) + " and " + to_string(pair) +
                                   " match the observations");
        found = pair;
    }
    return found;
}

}  // namespace tensorann

#include "tensorann/partitions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tensorann {

Partition::Partition(Sequence parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition entries must be non-negative");
        if (parts_[i] == 0) throw std::invalid_argument("zero entry before a positive one");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition entries must weakly decrease");
    }
}

Entry Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Entry{0}); }

Sequence Partition::padded(std::size_t n) const {
    if (n < parts_.size()) throw std::invalid_argument("padding length shorter than partition");
    Sequence out(parts_);
    out.resize(n, 0);
    return out;
}

Partition dual(const Partition& lambda) {
    Sequence out;
    Entry first = lambda.part(1);
    for (Entry i = 1; i <= first; ++i) {
        Entry count = 0;
        for (Entry part : lambda.parts())
            if (part >= i) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::set<Sequence> gt_single(std::span<const Entry> seq) {
    std::set<Sequence> out;
    if (seq.empty()) return out;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] > seq[i - 1]) throw std::invalid_argument("gt_single: sequence is not weakly decreasing");
    const std::size_t len = seq.size() - 1;
    Sequence cur(len);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == len) {
            out.insert(cur);
            return;
        }
        for (Entry v = seq[i + 1]; v <= seq[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

std::vector<Partition> gt_side(const Partition& p) {
    std::vector<Partition> out;
    for (auto& s : gt_single(p.padded(p.length() + 1))) out.emplace_back(s);
    return out;
}

}  // namespace

PairSet gt_pair(const PartitionPair& pair) {
    PairSet out;
    auto lambdas = gt_side(pair.lambda);
    auto mus = gt_side(pair.mu);
    for (auto& l : lambdas)
        for (auto& m : mus) out.insert({l, m});
    return out;
}

PairSet gt_iterated(const PartitionPair& pair, std::size_t iterations) {
    PairSet current{pair};
    for (std::size_t step = 0; step < iterations; ++step) {
        PairSet next;
        for (auto& x : current) next.merge(gt_pair(x));
        current = std::move(next);
    }
    return current;
}

bool leq(const PartitionPair& a, const PartitionPair& b) {
    auto side = [](const Partition& x, const Partition& y) {
        if (x.length() > y.length()) return false;
        for (std::size_t i = 1; i <= x.length(); ++i)
            if (x.part(i) > y.part(i)) return false;
        return true;
    };
    return side(a.lambda, b.lambda) && side(a.mu, b.mu);
}

PairSet downset(const PartitionPair& b) {
    PairSet seen{b};
    std::deque<PartitionPair> queue{b};
    while (!queue.empty()) {
        PartitionPair x = std::move(queue.front());
        queue.pop_front();
        for (auto& y : gt_pair(x))
            if (seen.insert(y).second) queue.push_back(y);
    }
    return seen;
}

std::uint64_t downset_bound(const PartitionPair& b) {
    mpz_class base = b.lambda.part(1) + b.mu.part(1) + 1;
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), b.lambda.length() + b.mu.length());
    if (!bound.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
    return bound.get_ui();
}

std::uint64_t std_tableaux_count(const Partition& lambda) {
    Partition t = dual(lambda);
    mpz_class num = 1, den = 1;
    for (Entry i = 2; i <= lambda.size(); ++i) num *= static_cast<unsigned long>(i);
    for (std::size_t r = 1; r <= lambda.length(); ++r)
        for (Entry c = 1; c <= lambda.part(r); ++c) {
            Entry hook = (lambda.part(r) - c) + (t.part(static_cast<std::size_t>(c)) - static_cast<Entry>(r)) + 1;
            den *= static_cast<unsigned long>(hook);
        }
    mpz_class q = num / den;
    if (!q.fits_ulong_p()) throw std::overflow_error("std_tableaux_count: result exceeds 64 bits");
    return q.get_ui();
}

std::uint64_t std_tableaux_count_enumerated(const Partition& lambda) {
    const auto& shape = lambda.parts();
    std::vector<Entry> filled(shape.size(), 0);
    std::function<std::uint64_t(Entry)> rec = [&](Entry remaining) -> std::uint64_t {
        if (remaining == 0) return 1;
        std::uint64_t total = 0;
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] == shape[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            total += rec(remaining - 1);
            --filled[r];
        }
        return total;
    };
    return rec(lambda.size());
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

Entry parse_entry(std::string_view s) {
    s = trim(s);
    Entry v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    Sequence parts;
    if (text.empty()) return Partition{};
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(parse_entry(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

PartitionPair parse_pair(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("pair syntax is 'lambda|mu'");
    if (text.find('|', bar + 1) != std::string_view::npos) throw std::invalid_argument("pair has more than one '|'");
    return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

std::string to_string(const Sequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

std::string to_string(const Partition& lambda) { return to_string(lambda.parts()); }

std::string to_string(const PartitionPair& pair) { return to_string(pair.lambda) + "|" + to_string(pair.mu); }

std::vector<Partition> partitions_in_box(std::size_t max_length, Entry max_entry) {
    std::vector<Partition> out;
    Sequence cur;
    std::function<void(Entry)> rec = [&](Entry bound) {
        out.emplace_back(cur);
        if (cur.size() == max_length) return;
        for (Entry v = 1; v <= bound; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(max_entry);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(Entry d) {
    std::vector<Partition> out;
    Sequence cur;
    std::function<void(Entry, Entry)> rec = [&](Entry remaining, Entry bound) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (Entry v = std::min(remaining, bound); v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

}  // namespace tensorann

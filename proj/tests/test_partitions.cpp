#include "tensorann/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>

using namespace tensorann;

namespace {

// Plain breadth-first search for a in the GT closure of b.
bool reachable(const PartitionPair& a, const PartitionPair& b) {
    std::set<PartitionPair> seen{b};
    std::deque<PartitionPair> queue{b};
    while (!queue.empty()) {
        PartitionPair cur = queue.front();
        queue.pop_front();
        if (cur == a) return true;
        for (auto& next : gt_pair(cur))
            if (seen.insert(next).second) queue.push_back(next);
    }
    return false;
}

std::vector<PartitionPair> pairs_in_box(std::size_t len, Entry entry) {
    std::vector<PartitionPair> out;
    for (auto& l : partitions_in_box(len, entry))
        for (auto& m : partitions_in_box(len, entry)) out.push_back({l, m});
    return out;
}

}  // namespace

TEST_CASE("partition construction and text syntax") {
    Partition p = parse_partition("3,1");
    CHECK(p.parts() == Sequence{3, 1});
    CHECK(p.size() == 4);
    CHECK(p.part(3) == 0);
    CHECK(Partition{2, 1, 0, 0}.length() == 2);
    CHECK(parse_partition("").empty());
    CHECK(to_string(parse_partition("4,2,2")) == "4,2,2");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,a"), std::invalid_argument);

    PartitionPair pair = parse_pair("3,1|2");
    CHECK(pair.lambda == Partition{3, 1});
    CHECK(pair.mu == Partition{2});
    CHECK(parse_pair("2,1|").mu.empty());
    CHECK(parse_pair("|").lambda.empty());
    CHECK_THROWS_AS(parse_pair("3,1"), std::invalid_argument);
    for (auto& x : pairs_in_box(2, 2)) CHECK(parse_pair(to_string(x)) == x);
}

TEST_CASE("dual partition") {
    CHECK(dual(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(dual(Partition{}) == Partition{});
    for (Entry d = 0; d <= 7; ++d)
        for (auto& p : partitions_of(d)) {
            CHECK(dual(dual(p)) == p);
            CHECK(dual(p).size() == d);
        }
}

TEST_CASE("partition enumeration counts") {
    // p(d) for d = 0..10
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (Entry d = 0; d <= 10; ++d) CHECK(partitions_of(d).size() == counts[static_cast<std::size_t>(d)]);
    // Partitions in an a x b box: binomial(a+b, a).
    CHECK(partitions_in_box(3, 4).size() == 35);
    CHECK(partitions_in_box(2, 2).size() == 6);
}

TEST_CASE("single GT step is interlacing") {
    Sequence w{4, 2, 2, 0};
    auto out = gt_single(w);
    // product of (w_i - w_(i+1) + 1)
    CHECK(out.size() == 3 * 1 * 3);
    for (auto& s : out) {
        REQUIRE(s.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) CHECK((w[i + 1] <= s[i] && s[i] <= w[i]));
    }
    CHECK(gt_single(Sequence{2, -1}) == std::set<Sequence>{{-1}, {0}, {1}, {2}});
    CHECK_THROWS_AS(gt_single(Sequence{1, 2}), std::invalid_argument);
}

TEST_CASE("GT step on pairs") {
    auto step = gt_pair(parse_pair("2|1"));
    CHECK(step == PairSet{parse_pair("2|1"), parse_pair("1|1"), parse_pair("|1"), parse_pair("2|"), parse_pair("1|"),
                          parse_pair("|")});
    CHECK(gt_iterated(parse_pair("2,1|"), 0) == PairSet{parse_pair("2,1|")});
    CHECK(gt_iterated(parse_pair("2,1|"), 2) == gt_iterated(parse_pair("2,1|"), 3));
}

TEST_CASE("closed-form order agrees with breadth-first reachability") {
    auto pairs = pairs_in_box(2, 3);
    for (auto& a : pairs)
        for (auto& b : pairs) CHECK(leq(a, b) == reachable(a, b));
}

TEST_CASE("order is a partial order") {
    auto pairs = pairs_in_box(2, 2);
    for (auto& a : pairs) {
        CHECK(leq(a, a));
        for (auto& b : pairs) {
            if (leq(a, b) && leq(b, a)) CHECK(a == b);
            for (auto& c : pairs)
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
        }
    }
    CHECK(leq(parse_pair("1|"), parse_pair("2|")));
    CHECK_FALSE(leq(parse_pair("1,1|"), parse_pair("2|")));
    CHECK_FALSE(leq(parse_pair("|1"), parse_pair("2|")));
}

TEST_CASE("downset matches the closed form and respects its bound") {
    for (auto& b : pairs_in_box(2, 3)) {
        PairSet d = downset(b);
        CHECK(d.size() <= downset_bound(b));
        for (auto& a : pairs_in_box(2, 3)) CHECK(d.contains(a) == leq(a, b));
    }
    CHECK(downset(parse_pair("|")).size() == 1);
    CHECK(downset(parse_pair("1|")).size() == 2);
}

TEST_CASE("standard tableaux counts") {
    CHECK(std_tableaux_count(Partition{2, 1}) == 2);
    CHECK(std_tableaux_count(Partition{3, 2}) == 5);
    CHECK(std_tableaux_count(Partition{}) == 1);
    for (Entry d = 0; d <= 7; ++d) {
        std::uint64_t squares = 0;
        std::uint64_t factorial = 1;
        for (Entry i = 2; i <= d; ++i) factorial *= static_cast<std::uint64_t>(i);
        for (auto& p : partitions_of(d)) {
            auto f = std_tableaux_count(p);
            CHECK(f == std_tableaux_count_enumerated(p));
            squares += f * f;
        }
        // sum of f_lambda^2 over partitions of d is d!
        CHECK(squares == factorial);
    }
}

#include "tensorann/verify.hpp"

#include "tensorann/matrix.hpp"
#include "tensorann/order.hpp"
#include "tensorann/partitions.hpp"
#include "tensorann/sl2.hpp"
#include "tensorann/uea.hpp"
#include "tensorann/weights.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tensorann {

namespace {

// Collects failures; the detail string lists the first few of them.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 5) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { info_ += (info_.empty() ? "" : "; ") + s; }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        std::string out = std::to_string(checks_) + " checks";
        if (failures_) out += ", " + std::to_string(failures_) + " failed: " + notes_;
        if (!info_.empty()) out += " (" + info_ + ")";
        return out;
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::string notes_, info_;
};

Rational fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string seq_str(const Sequence& s) { return "(" + to_string(s) + ")"; }

Sequence with_zeros(Entry head, std::size_t n) {
    Sequence s(n, 0);
    if (n > 0) s[0] = head;
    return s;
}

// 1. Closed-form order against reachability under GT steps.
void order_oracle(Checker& c) {
    auto sides = partitions_in_box(3, 4);
    std::vector<PartitionPair> pairs;
    for (auto& l : sides)
        for (auto& m : sides) pairs.push_back({l, m});
    std::map<PartitionPair, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = i;
    // GT steps never increase sizes and fix a pair only when it is unchanged, so the
    // reachability closure can be filled in order of increasing size.
    std::vector<std::size_t> by_size(pairs.size());
    for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        return pairs[a].lambda.size() + pairs[a].mu.size() < pairs[b].lambda.size() + pairs[b].mu.size();
    });
    std::vector<std::vector<bool>> reach(pairs.size());
    for (std::size_t b : by_size) {
        std::vector<bool> r(pairs.size(), false);
        r[b] = true;
        for (auto& child : gt_pair(pairs[b])) {
            std::size_t ci = index.at(child);
            if (ci == b) continue;
            for (std::size_t k = 0; k < r.size(); ++k)
                if (reach[ci][k]) r[k] = true;
        }
        reach[b] = std::move(r);
    }
    std::size_t mismatches = 0, related = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            bool closed = leq(pairs[a], pairs[b]);
            related += closed;
            if (closed != reach[b][a]) {
                ++mismatches;
                c.expect(false, to_string(pairs[a]) + " vs " + to_string(pairs[b]));
            }
        }
    c.expect(mismatches == 0, "order mismatches");
    // The library's own BFS closure agrees on a few large pairs.
    for (auto text : {"4,4,4|4,4,4", "3,1|2,2", "4,2,1|"}) {
        PartitionPair b = parse_pair(text);
        PairSet d = downset(b);
        std::size_t expected = 0;
        for (std::size_t a = 0; a < pairs.size(); ++a) expected += reach[index.at(b)][a];
        c.expect(d.size() == expected, std::string("downset size of ") + text);
    }
    c.note(std::to_string(pairs.size()) + " pairs, " + std::to_string(pairs.size() * pairs.size()) + " ordered pairs, " +
           std::to_string(related) + " related");
}

// 2. Weyl dimensions add up along branching.
void branching_dimensions(Checker& c) {
    std::size_t weights = 0;
    for (std::size_t len = 2; len <= 6; ++len)
        for (auto& w : dominant_sequences(len, -3, 3)) {
            Integer total = 0;
            for (auto& u : branch(w)) total += weyl_dim(u);
            c.expect(total == weyl_dim(w), "dimension sum for " + seq_str(w));
            ++weights;
        }
    c.note(std::to_string(weights) + " weights");
}

WeightMultiset as_multiset(const std::vector<Sequence>& seqs) {
    WeightMultiset out;
    for (auto& s : seqs) ++out[FiniteWeight::from_integers(s)];
    return out;
}

// 3. Branching rule against the matrix decomposition of restricted modules.
void branching_oracle(Checker& c) {
    std::size_t modules = 0;
    for (std::size_t n : {3u, 4u}) {
        MatrixAlgebra gl = build_algebra(Family::gl, n);
        std::vector<std::pair<PartitionPair, Subspace>> cases;
        for (Entry p = 0; p <= 3; ++p)
            for (auto& lambda : partitions_of(p))
                if (lambda.length() <= n) cases.push_back({{lambda, {}}, module_V_lambda_mu(n, {lambda, {}})});
        cases.push_back({parse_pair("1|1"), kernel_space(1, 1, n)});
        for (auto& [pair, sub] : cases) {
            TensorRep rep(gl, pair.lambda.size(), pair.mu.size());
            const Sequence top = padded_weight(pair, n).sequence();
            WeightMultiset whole = decompose(sub, gl_frame(rep));
            c.expect(whole == WeightMultiset{{FiniteWeight::from_integers(top), 1}},
                     "gl(" + std::to_string(n) + ") module " + to_string(pair) + " is not simple");
            WeightMultiset restricted = decompose(sub, gl_frame(rep, n - 1));
            c.expect(restricted == as_multiset(branch(top)),
                     "restriction of " + seq_str(top) + " to gl(" + std::to_string(n - 1) + ")");
            c.expect(std::all_of(restricted.begin(), restricted.end(), [](auto& kv) { return kv.second == 1; }),
                     "restriction of " + seq_str(top) + " has multiplicities");
            ++modules;
        }
    }
    c.note(std::to_string(modules) + " modules");
}

std::vector<PartitionPair> small_pairs() {
    std::vector<PartitionPair> out;
    auto sides = partitions_in_box(4, 3);
    for (auto& l : sides)
        for (auto& m : sides)
            if (l.size() + m.size() <= 4) out.push_back({l, m});
    return out;
}

// 4. Order decision against SC containment up to gl(6).
void sc_equivalence(Checker& c) {
    auto pairs = small_pairs();
    std::size_t max_depth = 0;
    for (auto& a : pairs)
        for (auto& b : pairs) {
            ContainmentReport r = sc_containment(a, b, 6);
            c.expect(r.all_stabilized, "SC sets of " + to_string(a) + ", " + to_string(b) + " did not stabilize");
            c.expect(ann_contained(a, b) == r.contained, to_string(a) + " vs " + to_string(b));
            for (auto d : r.stabilization_depths) max_depth = std::max(max_depth, d);
        }
    c.note(std::to_string(pairs.size()) + " pairs, largest stabilization depth " + std::to_string(max_depth));
}

// 5. Constituents of V and S^2 V and the chain of symmetric powers.
void symmetric_power_chain(Checker& c) {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::set<Sequence> v{with_zeros(1, n), with_zeros(0, n)};
        std::set<Sequence> s2{with_zeros(2, n), with_zeros(1, n), with_zeros(0, n)};
        SCSet a = sc_set(parse_pair("1|"), n), b = sc_set(parse_pair("2|"), n);
        c.expect(a.stabilized && a.weights == v, "SC(V, gl(" + std::to_string(n) + "))");
        c.expect(b.stabilized && b.weights == s2, "SC(S^2 V, gl(" + std::to_string(n) + "))");
    }
    for (Entry k = 1; k <= 3; ++k) {
        PartitionPair a{Partition{k}, {}}, b{Partition{k + 1}, {}};
        ContainmentReport r = sc_containment(a, b, 6);
        c.expect(leq(a, b) && !leq(b, a), "order (" + std::to_string(k) + ") < (" + std::to_string(k + 1) + ")");
        c.expect(r.contained && r.separating_witness.has_value(),
                 "no separating constituent for (" + std::to_string(k) + ") < (" + std::to_string(k + 1) + ")");
    }
}

// 6. The sl(2) Casimir.
void sl2_casimir_check(Checker& c) {
    const LiePresentation& p = sl2_algebra();
    Matrix k = killing_form(p);
    const std::size_t h = *p.index_of("h"), e = *p.index_of("e"), f = *p.index_of("f");
    c.expect(k(h, h) == 8, "K(h,h) = " + to_string(k(h, h)));
    c.expect(k(e, f) == 4, "K(e,f) = " + to_string(k(e, f)));
    UEAElement symmetric = parse_element("4 * (1/32) * (h^2 + 2*(e*f + f*e))", p);
    UEAElement cas = casimir(p);
    c.expect(cas == symmetric, "casimir = " + to_string(cas, p));
    c.expect(is_central(cas, p), "casimir is not central");
    MatrixAlgebra nat = build_algebra(Family::sl, 2);
    c.expect(rep_uea(cas, nat.basis()) == Matrix::identity(2) * Rational(3, 8), "natural module scalar");
    c.note("C = " + to_string(cas, p));
}

// 7. Casimir centrality at higher rank.
void higher_rank_casimir(Checker& c) {
    c.expect(is_central(casimir(sl_presentation(3)), sl_presentation(3)), "sl(3)");
    for (Family f : {Family::o, Family::sp}) {
        MatrixAlgebra alg = build_algebra(f, 4);
        LiePresentation p = alg.presentation();
        c.expect(is_central(casimir(p), p), to_string(f) + "(4)");
        c.note(to_string(f) + "(4) dimension " + std::to_string(alg.dim()) + " from " + std::to_string(alg.spanning_size()) +
               " spanning matrices");
    }
}

// 8. Nilpotent elements give annihilators of mixed tensor powers.
void nilpotent_annihilators(Checker& c) {
    struct Case {
        std::string name;
        MatrixAlgebra alg;
        Matrix x;
    };
    MatrixAlgebra gl2 = build_algebra(Family::gl, 2), o4 = build_algebra(Family::o, 4), sp4 = build_algebra(Family::sp, 4);
    // gl(2): the matrix unit in row 1, column 2 of the realized basis (labels 1 and -1).
    std::vector<Case> cases{{"gl(2) E_12", gl2, Matrix::unit(2, 0, 1)},
                            {"o(4) E_{1,2}-E_{-1,-2}", o4, o4.unit(1, 2) - o4.unit(-1, -2)},
                            {"sp(4) E_{1,2}-E_{-2,-1}", sp4, sp4.unit(1, 2) - sp4.unit(-2, -1)}};
    for (auto& cs : cases) {
        for (std::size_t p = 0; p <= 3; ++p)
            for (std::size_t q = 0; p + q <= 3; ++q) {
                NilpotentReport r = verify_nilpotent_annihilator(cs.alg, p, q, cs.x, 2);
                std::string where = cs.name + " on (" + std::to_string(p) + "," + std::to_string(q) + ")";
                c.expect(r.bound == p + q + 1 && r.bound_annihilates, where + ": x^(p+q+1) != 0");
                if (cs.alg.n() >= std::max(p, q) + 1)
                    c.expect(r.minimal_exponent == p + q + 1, where + ": x^(p+q) = 0");
            }
        c.note(cs.name + (cs.alg.contains(cs.x) ? " lies in the algebra" : " lies outside the algebra"));
    }
}

// 9. Product of Casimir shifts annihilates the restriction of V (x) V.
void locally_central(Checker& c) {
    TensorRep rep(build_algebra(Family::sl, 3), 2, 0);
    LocallyCentralReport r = locally_central_annihilator(rep, 2, true);
    std::vector<Rational> expected{0, Rational(3, 8), 1};
    c.expect(r.scalars == expected, "Casimir scalars " + join_rationals(r.scalars));
    c.expect(r.module_dim == 9, "module dimension");
    c.expect(r.annihilates, "product does not annihilate");
    c.note("scalars " + join_rationals(r.scalars));
}

// 10. Kostant partition function of sl(3).
void kostant_counts(Checker& c) {
    RootSystemA rs(3);
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b) {
            FiniteWeight nu(std::vector<Rational>{a, b - a, -b});
            Integer count = kostant_partition(nu, rs);
            c.expect(count == std::min(a, b) + 1, "P(" + std::to_string(a) + "a1+" + std::to_string(b) + "a2)");
            HighestWeightContext ctx = type_a_context(3, true, {0, 0, 0});
            std::vector<Rational> target{2 * a - b, 2 * b - a};
            auto monomials = n_minus_monomials_of_weight(ctx, target, static_cast<unsigned>(a + b));
            c.expect(Integer(static_cast<unsigned long>(monomials.size())) == count,
                     "PBW count at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
}

// 11. C - (lambda^2 - 1)/8 kills every Verma module.
void verma_casimir(Checker& c) {
    Poly2 scalar = Poly2::nu() * Poly2::nu() * Poly2(Rational(1, 8)) - Poly2(Rational(1, 8));
    c.expect(member_verma_symbolic(sl2_casimir(), scalar), "symbolic identity");
    c.expect(!member_verma_symbolic(sl2_casimir(), scalar + Poly2(Rational(1, 8))), "shifted scalar also annihilates");
    for (long num = -6; num <= 6; ++num) {
        Rational lambda = fraction(num, 2);
        c.expect(member(witnesses(verma_ideal(lambda))[0], verma_ideal(lambda)), "lambda = " + to_string(lambda));
    }
}

// 12. The primitive ideals of sl(2) are separated.
void sl2_separations(Checker& c) {
    const LiePresentation& p = sl2_algebra();
    const UEAElement e = UEAElement::generator(*p.index_of("e")), f = UEAElement::generator(*p.index_of("f"));
    for (unsigned i = 0; i <= 4; ++i) {
        UEAElement ei = power(e, i + 1, p), fi = power(f, i + 1, p);
        c.expect(member_finite(ei, i) && member_finite(fi, i), "e, f powers in I_" + std::to_string(i));
        for (unsigned j = i + 1; j <= 5; ++j)
            c.expect(!member_finite(ei, j) && !member_finite(fi, j),
                     "power " + std::to_string(i + 1) + " in I_" + std::to_string(j));
    }
    std::vector<Rational> grid;
    for (long num = -12; num <= 12; ++num) grid.push_back(fraction(num, 4));
    grid.emplace_back(1, 3);
    grid.emplace_back(-5, 3);
    for (unsigned k = 0; k <= 4; ++k) {
        UEAElement fk = power(f, k + 1, p);
        for (auto& lambda : grid) c.expect(!member_verma(fk, lambda), "f power in J at " + to_string(lambda));
        // Symbolically f^(k+1) shifts the Verma basis by k+1 with coefficient 1, for every weight.
        HighestWeightContext ctx(p, {*p.index_of("e")}, {*p.index_of("h")}, {*p.index_of("f")}, {0});
        VermaAction action = verma_action_sl2_symbolic(fk, ctx, std::nullopt);
        c.expect(action.shifts.size() == 1 && action.shifts.begin()->first == static_cast<int>(k + 1) &&
                     action.shifts.begin()->second == Poly2(1),
                 "symbolic f power");
    }
    // J_[lambda] = J_[-lambda] for every lambda. The annihilator of the simple module is
    // symmetric away from the nonzero integers, where L(lambda) is finite dimensional for
    // lambda > 0 and a simple Verma module for -lambda.
    std::size_t skipped = 0;
    for (auto& lambda : grid) {
        c.expect(equal(verma_ideal(lambda), verma_ideal(-lambda)), "J symmetry at " + to_string(lambda));
        if (is_integer(lambda) && sgn(lambda) != 0) {
            ++skipped;
            continue;
        }
        c.expect(equal(classify_annihilator(lambda - 1), classify_annihilator(-lambda - 1)),
                 "classification symmetry at " + to_string(lambda));
    }
    c.note(std::to_string(skipped) + " nonzero integer parameters compared through J only");
}

// 13. Decomposition of small mixed tensor powers of gl(3).
void tensor_decomposition(Checker& c) {
    MatrixAlgebra gl3 = build_algebra(Family::gl, 3);
    TensorRep r11(gl3, 1, 1);
    Subspace k11 = kernel_space(1, 1, 3);
    c.expect(k11.dimension() == 8, "dim V^{1,1} = " + std::to_string(k11.dimension()));
    auto hws = highest_weight_vectors(k11, gl_frame(r11));
    c.expect(hws.size() == 1 && hws[0].weight == FiniteWeight::from_integers({1, 0, -1}), "single highest weight");
    WeightMultiset d11 = decompose(k11, gl_frame(r11));
    const auto f1 = std_tableaux_count(Partition{1});
    c.expect(d11 == WeightMultiset{{FiniteWeight::from_integers({1, 0, -1}), f1 * f1}}, "V^{1,1} multiplicity");
    TensorRep r20(gl3, 2, 0);
    WeightMultiset d20 = decompose(kernel_space(2, 0, 3), gl_frame(r20));
    WeightMultiset expected{{FiniteWeight::from_integers({2, 0, 0}), std_tableaux_count(Partition{2})},
                            {FiniteWeight::from_integers({1, 1, 0}), std_tableaux_count(Partition{1, 1})}};
    c.expect(d20 == expected, "V^{2,0} decomposition");
}

// 14. Trace forms are invariant.
void trace_invariants(Checker& c) {
    for (std::size_t n : {2u, 3u}) {
        MatrixAlgebra alg = build_algebra(Family::sl, n);
        LiePresentation p = alg.presentation();
        for (unsigned m = 1; m <= 3; ++m)
            c.expect(trace_invariant_check(p, alg.basis(), m), "sl(" + std::to_string(n) + "), m = " + std::to_string(m));
    }
    MatrixAlgebra sl2 = build_algebra(Family::sl, 2);
    for (std::size_t a = 0; a < sl2.dim(); ++a)
        for (std::size_t b = 0; b < sl2.dim(); ++b)
            c.expect(polarized_trace(sl2.basis(), {a, b}) == (sl2.basis()[a] * sl2.basis()[b]).trace(),
                     "tr(xy) at " + sl2.names()[a] + "," + sl2.names()[b]);
}

struct CriterionEntry {
    int id;
    const char* group;
    const char* title;
    double time_limit;
    void (*run)(Checker&);
};

// Time limits in seconds; criteria without a stated bound share the overall five minutes.
const std::vector<CriterionEntry>& criteria_table() {
    static const std::vector<CriterionEntry> s{
        {1, "order", "closed-form order matches GT reachability", 10, order_oracle},
        {2, "branching", "branching preserves Weyl dimensions", 10, branching_dimensions},
        {3, "branching", "branching matches matrix decomposition", 60, branching_oracle},
        {4, "order", "order decision matches SC containment", 60, sc_equivalence},
        {5, "order", "SC sets of V and S^2 V, strict symmetric power chain", 300, symmetric_power_chain},
        {6, "casimir", "sl(2) Killing form and Casimir", 300, sl2_casimir_check},
        {7, "casimir", "Casimir central for sl(3), o(4), sp(4)", 10, higher_rank_casimir},
        {8, "annihilators", "nilpotent powers annihilate mixed tensors", 300, nilpotent_annihilators},
        {9, "annihilators", "Casimir shift product annihilates V3 (x) V3", 300, locally_central},
        {10, "casimir", "Kostant partition counts for sl(3)", 300, kostant_counts},
        {11, "sl2", "Verma modules killed by C - (lambda^2-1)/8", 300, verma_casimir},
        {12, "sl2", "sl(2) primitive ideals are separated", 300, sl2_separations},
        {13, "branching", "gl(3) mixed tensor decompositions", 30, tensor_decomposition},
        {14, "casimir", "trace forms are invariant", 300, trace_invariants},
    };
    return s;
}

CriterionResult run_entry(const CriterionEntry& s) {
    CriterionResult r{s.id, s.group, s.title, false, 0, s.time_limit, ""};
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        s.run(c);
        r.correct = c.ok();
        r.detail = c.detail();
    } catch (const std::exception& e) {
        r.correct = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

const std::vector<std::string>& verification_groups() {
    static const std::vector<std::string> g{"order", "branching", "casimir", "annihilators", "sl2"};
    return g;
}

std::vector<CriterionResult> run_criteria(std::string_view group) {
    if (group != "all" && std::find(verification_groups().begin(), verification_groups().end(), group) ==
                              verification_groups().end())
        throw std::invalid_argument("unknown verification group '" + std::string(group) + "'");
    std::vector<CriterionResult> out;
    for (auto& s : criteria_table())
        if (group == "all" || group == s.group) out.push_back(run_entry(s));
    return out;
}

CriterionResult run_criterion(int id) {
    for (auto& s : criteria_table())
        if (s.id == id) return run_entry(s);
    throw std::invalid_argument("no criterion " + std::to_string(id));
}

}  // namespace tensorann

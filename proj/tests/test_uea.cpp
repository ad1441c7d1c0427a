#include "tensorann/matrix.hpp"
#include "tensorann/uea.hpp"
#include "tensorann/weights.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <thread>

using namespace tensorann;

namespace {

using Word = std::vector<std::size_t>;
using WordSum = std::map<Word, Rational>;

// Rewrites words by swapping a randomly chosen adjacent out-of-order pair,
// x_j x_i -> x_i x_j + [x_j, x_i], until every word is sorted. Independent of the
// library's memoized product and of the rewrite order it uses.
UEAElement random_rewrite(const Word& word, const LiePresentation& p, std::mt19937& rng) {
    WordSum pending{{word, 1}};
    UEAElement done;
    while (!pending.empty()) {
        auto it = pending.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng));
        Word w = it->first;
        Rational c = it->second;
        pending.erase(it);
        std::vector<std::size_t> inversions;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) inversions.push_back(k);
        if (inversions.empty()) {
            done.add_term(Monomial::from_sorted_word(w), c);
            continue;
        }
        std::size_t k = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        auto add = [&](const Word& x, const Rational& v) {
            auto& slot = pending[x];
            slot += v;
            if (sgn(slot) == 0) pending.erase(x);
        };
        add(swapped, c);
        for (auto& [idx, coef] : p.bracket(w[k], w[k + 1])) {
            Word shorter;
            for (std::size_t m = 0; m < w.size(); ++m) {
                if (m == k) shorter.push_back(idx);
                else if (m != k + 1) shorter.push_back(w[m]);
            }
            add(shorter, c * coef);
        }
    }
    return done;
}

UEAElement random_element(std::mt19937& rng, const LiePresentation& p, int max_degree) {
    UEAElement u;
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> letter(0, p.dim() - 1);
    for (int t = 0; t < 3; ++t) {
        Word w;
        int d = deg(rng);
        for (int k = 0; k < d; ++k) w.push_back(letter(rng));
        u.add_scaled(from_word(w, p), coef(rng));
    }
    return u;
}

}  // namespace

TEST_CASE("monomials") {
    Monomial m = Monomial::from_sorted_word({0, 0, 2});
    CHECK(m.degree() == 3);
    CHECK(m.word() == Word{0, 0, 2});
    CHECK(m.last_index() == 2);
    CHECK(m.without_last().word() == Word{0, 0});
    CHECK(m.appended(2).runs().back().second == 2);
    CHECK_THROWS(Monomial::from_sorted_word({2, 1}));
    CHECK(Monomial::from_sorted_word({5}) < m);  // lower degree first
}

TEST_CASE("presentations are validated") {
    // [x, y] = x, [y, x] = x breaks antisymmetry
    std::vector<std::vector<SparseVector>> bad{{{}, {{0, 1}}}, {{{0, 1}}, {}}};
    CHECK_THROWS_AS(LiePresentation({"x", "y"}, bad), std::invalid_argument);
    // Heisenberg-like table with a Jacobi failure: [a,b]=c, [b,c]=a, [c,a]=a
    std::vector<std::vector<SparseVector>> jac(3, std::vector<SparseVector>(3));
    jac[0][1] = {{2, 1}};
    jac[1][0] = {{2, -1}};
    jac[1][2] = {{0, 1}};
    jac[2][1] = {{0, -1}};
    jac[2][0] = {{0, 1}};
    jac[0][2] = {{0, -1}};
    CHECK_THROWS_AS(LiePresentation({"a", "b", "c"}, jac), std::invalid_argument);
    // Upper triangular unipotent span is closed, a single off-diagonal pair is not.
    CHECK_NOTHROW(LiePresentation::from_matrices({"x"}, {Matrix::unit(2, 0, 1)}));
    CHECK_THROWS(LiePresentation::from_matrices({"x", "y"}, {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)}));
    CHECK_THROWS(LiePresentation::from_matrices({"x", "y"}, {Matrix::unit(2, 0, 1), Matrix::unit(2, 0, 1)}));
}

TEST_CASE("sl(2) structure constants") {
    LiePresentation p = sl_presentation(2);
    REQUIRE(p.names() == std::vector<std::string>{"h", "e", "f"});
    CHECK(p.structure_constant(0, 1, 1) == 2);
    CHECK(p.structure_constant(0, 2, 2) == -2);
    CHECK(p.structure_constant(1, 2, 0) == 1);
    Matrix k = killing_form(p);
    CHECK(k(0, 0) == 8);
    CHECK(k(1, 2) == 4);
    CHECK(k(1, 1) == 0);
}

TEST_CASE("normal form agrees with random rewriting") {
    std::mt19937 rng(2024);
    for (auto p : {sl_presentation(2), sl_presentation(3), gl_presentation(2), build_algebra(Family::sp, 4).presentation()}) {
        std::uniform_int_distribution<std::size_t> letter(0, p.dim() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            Word w;
            int len = 1 + trial % 5;
            for (int k = 0; k < len; ++k) w.push_back(letter(rng));
            UEAElement expected = from_word(w, p);
            CHECK(random_rewrite(w, p, rng) == expected);
            CHECK(random_rewrite(w, p, rng) == expected);
        }
    }
}

TEST_CASE("multiplication is associative and bilinear") {
    std::mt19937 rng(5);
    LiePresentation p = sl_presentation(3);
    for (int trial = 0; trial < 10; ++trial) {
        UEAElement a = random_element(rng, p, 2), b = random_element(rng, p, 2), c = random_element(rng, p, 2);
        CHECK(multiply(multiply(a, b, p), c, p) == multiply(a, multiply(b, c, p), p));
        CHECK(multiply(a + b, c, p) == multiply(a, c, p) + multiply(b, c, p));
    }
    UEAElement e = UEAElement::generator(*p.index_of("e12")), f = UEAElement::generator(*p.index_of("f21"));
    CHECK(bracket_u(e, f, p) == parse_element("h1", p));
}

TEST_CASE("element syntax") {
    LiePresentation p = sl_presentation(2);
    CHECK(parse_element("e*f - f*e", p) == UEAElement::generator(0));
    CHECK(parse_element("[e, f]", p) == parse_element("h", p));
    CHECK(parse_element("-2/3*h^2 + 1", p) == from_word({0, 0}, p) * Rational(-2, 3) + UEAElement::scalar(1));
    CHECK(parse_element("(h+1)^2", p) == parse_element("h^2 + 2*h + 1", p));
    CHECK(parse_element("0", p).is_zero());
    CHECK_THROWS_AS(parse_element("x + h", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("h +", p), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("(h", p), std::invalid_argument);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        UEAElement u = random_element(rng, p, 3);
        CHECK(parse_element(to_string(u, p), p) == u);
    }
}

TEST_CASE("symmetrization") {
    LiePresentation p = sl_presentation(2);
    CHECK(symmetrize({1, 2}, p) == (from_word({1, 2}, p) + from_word({2, 1}, p)) * Rational(1, 2));
    CHECK(symmetrize({0, 0}, p) == from_word({0, 0}, p));
    UEAElement s = symmetrize({0, 1, 2}, p);
    UEAElement manual;
    for (auto w : std::vector<Word>{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
        manual += from_word(w, p);
    CHECK(s == manual * Rational(1, 6));
    CHECK_THROWS_AS(symmetrize(Word(9, 0), p), std::length_error);
}

TEST_CASE("Casimir elements") {
    LiePresentation sl2 = sl_presentation(2);
    UEAElement c = casimir(sl2);
    CHECK(c == parse_element("1/8*(h^2 + 2*(e*f + f*e))", sl2));
    CHECK(is_central(c, sl2));
    CHECK_FALSE(is_central(parse_element("e*f", sl2), sl2));
    LiePresentation sl3 = sl_presentation(3);
    CHECK(is_central(casimir(sl3), sl3));
    for (Family f : {Family::o, Family::sp}) {
        LiePresentation p = build_algebra(f, 4).presentation();
        CHECK(is_central(casimir(p), p));
    }
    // gl has a center, so its Killing form is degenerate.
    CHECK_THROWS_AS(casimir(gl_presentation(2)), std::domain_error);
}

TEST_CASE("highest weight reduction") {
    HighestWeightContext ctx = sl2_context(3);
    const LiePresentation& p = ctx.presentation();
    CHECK(hw_action(parse_element("e", p), ctx).is_zero());
    CHECK(hw_action(parse_element("h", p), ctx) == UEAElement::scalar(3));
    CHECK(hw_action(parse_element("f", p), ctx) == parse_element("f", p));
    // e f v = h v
    CHECK(hw_action(parse_element("e*f", p), ctx) == UEAElement::scalar(3));
    CHECK(hw_action(parse_element("e*f^2", p), ctx) == parse_element("4*f", p));
    std::mt19937 rng(13);
    for (auto context : {sl2_context(Rational(-5, 2)), type_a_context(3, true, {2, 1, 0}), type_a_context(2, false, {1, -3})}) {
        const LiePresentation& q = context.presentation();
        for (int trial = 0; trial < 8; ++trial) {
            UEAElement a = random_element(rng, q, 2), b = random_element(rng, q, 2);
            CHECK(hw_action(multiply(a, b, q), context) == hw_action(multiply(a, hw_action(b, context), q), context));
        }
    }
    CHECK_THROWS_AS(chi_value(parse_element("f", p), ctx), std::domain_error);
}

TEST_CASE("central character of the Casimir") {
    LiePresentation p = sl_presentation(2);
    UEAElement c = casimir(p);
    for (long k = 0; k <= 5; ++k) {
        Rational expected(k * k + 2 * k, 8);
        expected.canonicalize();
        CHECK(chi_value(c, sl2_context(k)) == expected);
        // The same scalar on the symmetric power of the natural module.
        Matrix on_sk = rep_uea(c, symmetric_power_ops(type_a_basis(2, true).matrices, static_cast<unsigned>(k)));
        CHECK(on_sk == Matrix::identity(static_cast<std::size_t>(k + 1)) * expected);
    }
    // sl(3) on S^2 V: (lambda, lambda + 2 rho) / 6 with the Killing normalization.
    CHECK(chi_value(casimir(sl_presentation(3)), type_a_context(3, true, {2, 0, 0})) == Rational(10, 9));
}

TEST_CASE("PBW monomials of a weight match the Kostant partition function") {
    for (std::size_t n : {3u, 4u}) {
        RootSystemA rs(n);
        HighestWeightContext ctx = type_a_context(n, true, std::vector<Rational>(n));
        for (auto& seq : dominant_sequences(n, -2, 2)) {
            FiniteWeight nu = FiniteWeight::from_integers(seq);
            Rational total = 0;
            for (auto& x : nu.coords()) total += x;
            if (total != 0) continue;
            // h-coordinates of nu: nu_i - nu_(i+1)
            std::vector<Rational> target;
            Rational height = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                target.push_back(nu[i] - nu[i + 1]);
                Rational partial = 0;
                for (std::size_t j = 0; j <= i; ++j) partial += nu[j];
                height += partial;
            }
            if (sgn(height) < 0) continue;
            auto count = n_minus_monomials_of_weight(ctx, target, static_cast<unsigned>(height.get_num().get_ui()));
            CHECK(Integer(static_cast<unsigned long>(count.size())) == kostant_partition(nu, rs));
        }
    }
}

TEST_CASE("symbolic Verma action") {
    HighestWeightContext ctx = sl2_context(0);
    const LiePresentation& p = ctx.presentation();
    VermaAction ef = verma_action_sl2_symbolic(parse_element("e*f", p), ctx, std::nullopt);
    // e f f^k v = (k+1)(nu - k) f^k v
    REQUIRE(ef.shifts.size() == 1);
    for (long k = 0; k < 5; ++k)
        for (long nu = -3; nu < 4; ++nu) CHECK(ef.shifts.at(0).evaluate(k, nu) == (k + 1) * (nu - k));
    VermaAction cas = verma_action_sl2_symbolic(casimir(p), ctx, std::nullopt);
    Poly2 nu = Poly2::nu();
    CHECK(cas.minus_scalar(nu * nu * Poly2(Rational(1, 8)) + nu * Poly2(Rational(1, 4))).annihilates());
    // with a numeric weight the shift polynomials only depend on k
    VermaAction fixed = verma_action_sl2_symbolic(parse_element("e", p), ctx, Rational(2));
    CHECK(fixed.shifts.at(-1) == Poly2::k() * (Poly2(3) - Poly2::k()));
    CHECK_THROWS(verma_action_sl2_symbolic(UEAElement(), type_a_context(3, true, {0, 0, 0}), std::nullopt));
}

TEST_CASE("concurrent products share the cache safely") {
    LiePresentation p = sl_presentation(3);
    std::mt19937 rng(1);
    std::vector<UEAElement> as, bs;
    for (int i = 0; i < 8; ++i) {
        as.push_back(random_element(rng, p, 3));
        bs.push_back(random_element(rng, p, 3));
    }
    LiePresentation fresh = sl_presentation(3);
    std::vector<UEAElement> serial;
    for (int i = 0; i < 8; ++i) serial.push_back(multiply(as[i], bs[i], fresh));
    std::vector<UEAElement> parallel(8);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) threads.emplace_back([&, i] { parallel[i] = multiply(as[i], bs[i], p); });
    for (auto& t : threads) t.join();
    CHECK(parallel == serial);
}

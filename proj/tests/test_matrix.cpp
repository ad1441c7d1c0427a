#include "tensorann/matrix.hpp"
#include "tensorann/order.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tensorann;

namespace {

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

FiniteWeight w(Sequence s) { return FiniteWeight::from_integers(s); }

// Bilinear form preserved by the algebra in the row order: pairs label i with -i.
Matrix pairing_form(const MatrixAlgebra& alg, bool signed_form) {
    Matrix s(alg.n(), alg.n());
    for (int label : alg.labels()) s(alg.position(label), alg.position(-label)) = signed_form && label < 0 ? -1 : 1;
    return s;
}

}  // namespace

TEST_CASE("index order") {
    CHECK(ordered_labels(2) == std::vector<int>{1, -1});
    CHECK(ordered_labels(3) == std::vector<int>{1, 2, -1});
    CHECK(ordered_labels(4) == std::vector<int>{1, 2, -2, -1});
    CHECK(parse_family("so") == Family::o);
    CHECK_FALSE(parse_family("e8").has_value());
}

TEST_CASE("classical algebras") {
    MatrixAlgebra gl2 = build_algebra(Family::gl, 2);
    CHECK(gl2.dim() == 4);
    for (int i : {1, -1})
        for (int j : {1, -1}) CHECK(gl2.contains(gl2.unit(i, j)));
    CHECK_THROWS_AS(gl2.unit(2, 1), std::invalid_argument);

    MatrixAlgebra sl2 = build_algebra(Family::sl, 2);
    REQUIRE(sl2.names() == std::vector<std::string>{"h", "e", "f"});
    LiePresentation p = sl2.presentation();
    CHECK(p.structure_constant(1, 2, 0) == 1);
    CHECK(p.structure_constant(0, 1, 1) == 2);
    for (auto& b : sl2.basis()) CHECK(b.trace() == 0);

    for (std::size_t n : {2u, 3u, 4u}) {
        CHECK(build_algebra(Family::gl, n).dim() == n * n);
        CHECK(build_algebra(Family::sl, n).dim() == n * n - 1);
    }
    for (std::size_t n : {2u, 4u, 6u}) {
        MatrixAlgebra o = build_algebra(Family::o, n), sp = build_algebra(Family::sp, n);
        CHECK(o.dim() == n * (n - 1) / 2);
        CHECK(sp.dim() == n * (n + 1) / 2);
        CHECK(o.spanning_size() == n * n);
        Matrix so = pairing_form(o, false), ssp = pairing_form(sp, true);
        for (auto& x : o.basis()) CHECK((x.transpose() * so + so * x).is_zero());
        for (auto& x : sp.basis()) CHECK((x.transpose() * ssp + ssp * x).is_zero());
    }
    CHECK_THROWS_AS(build_algebra(Family::o, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_algebra(Family::sl, 1), std::invalid_argument);

    MatrixAlgebra o4 = build_algebra(Family::o, 4), sp4 = build_algebra(Family::sp, 4);
    CHECK(o4.contains(o4.unit(1, 2) - o4.unit(-2, -1)));
    CHECK(sp4.contains(sp4.unit(1, 2) - sp4.unit(-2, -1)));
    CHECK(sp4.contains(sp4.unit(1, -1)));
    CHECK_FALSE(o4.contains(o4.unit(1, -1)));
}

TEST_CASE("the family E(i,j) - E(-i,-j) is not a Lie algebra") {
    MatrixAlgebra gl4 = build_algebra(Family::gl, 4);
    std::vector<Vector> flat;
    for (int i : gl4.labels())
        for (int j : gl4.labels()) flat.push_back((gl4.unit(i, j) - gl4.unit(-i, -j)).flatten());
    Subspace span = Subspace::span(flat, 16);
    CHECK(span.dimension() == 8);
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (auto& v : span.basis()) {
        Matrix m(4, 4);
        for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = v[k];
        basis.push_back(m);
        names.push_back("b" + std::to_string(names.size()));
    }
    CHECK_THROWS_AS(LiePresentation::from_matrices(names, basis), std::invalid_argument);
}

TEST_CASE("mixed tensor action") {
    MatrixAlgebra gl2 = build_algebra(Family::gl, 2);
    Matrix x = gl2.unit(1, -1);
    CHECK(tensor_operator(x, 1, 0) == x);
    CHECK(tensor_operator(x, 0, 1) == x.transpose() * Rational(-1));
    CHECK(tensor_operator(x, 0, 0) == Matrix(1, 1));
    // x acts on the first factor of V (x) V as x (x) 1.
    CHECK(tensor_operator(x, 2, 0) == kronecker(x, Matrix::identity(2)) + kronecker(Matrix::identity(2), x));

    for (Family f : {Family::gl, Family::sl, Family::o, Family::sp}) {
        std::size_t n = f == Family::gl || f == Family::sl ? 3 : 4;
        for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
            TensorRep rep(build_algebra(f, n), p, q);
            CHECK(rep.dim() == static_cast<std::size_t>(std::pow(n, p + q)));
            CHECK(is_homomorphism(rep.algebra().presentation(), rep.action()));
        }
    }
    CHECK(is_homomorphism(gl2.presentation(), TensorRep(gl2, 2, 1).action()));
    // Transposes are not a representation.
    std::vector<Matrix> wrong;
    for (auto& b : gl2.basis()) wrong.push_back(b.transpose());
    CHECK_FALSE(is_homomorphism(gl2.presentation(), wrong));
}

TEST_CASE("size cap") {
    MatrixAlgebra gl4 = build_algebra(Family::gl, 4);
    CHECK_THROWS_AS(TensorRep(gl4, 2, 2, 100), std::length_error);
    CHECK_NOTHROW(TensorRep(gl4, 1, 2, 64));
    CHECK_THROWS_AS(module_V_lambda_mu(4, {{2, 1}, {1, 1}}, 200), std::length_error);
    CHECK_THROWS_AS(young_projector({3, 2, 1}, 2), std::length_error);
}

TEST_CASE("contractions") {
    Matrix phi = contraction(1, 1, 1, 1, 3);
    REQUIRE(phi.rows() == 1);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(phi(0, a * 3 + b) == (a == b ? 1 : 0));
    CHECK_THROWS_AS(contraction(1, 1, 2, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(contraction(2, 0, 1, 1, 3), std::out_of_range);

    MatrixAlgebra gl3 = build_algebra(Family::gl, 3);
    for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}})
        for (std::size_t i = 1; i <= p; ++i)
            for (std::size_t j = 1; j <= q; ++j) {
                Matrix c = contraction(p, q, i, j, 3);
                for (auto& x : gl3.basis())
                    CHECK(c * tensor_operator(x, p, q) == tensor_operator(x, p - 1, q - 1) * c);
            }

    CHECK(kernel_space(1, 0, 3) == Subspace::full(3));
    CHECK(kernel_space(0, 2, 3) == Subspace::full(9));
    for (std::size_t n = 2; n <= 5; ++n) CHECK(kernel_space(1, 1, n).dimension() == n * n - 1);
    for (auto& x : gl3.basis()) CHECK(kernel_space(2, 1, 3).is_invariant(tensor_operator(x, 2, 1)));
}

TEST_CASE("Young projectors") {
    for (std::size_t n : {2u, 3u, 4u}) {
        for (unsigned d = 1; d <= 3; ++d)
            CHECK(Integer(static_cast<unsigned long>(Subspace::image(young_projector(Partition{Entry(d)}, n)).dimension())) ==
                  binomial(static_cast<unsigned>(n) + d - 1, d));
        CHECK(Integer(static_cast<unsigned long>(Subspace::image(young_projector({1, 1}, n)).dimension())) ==
              binomial(static_cast<unsigned>(n), 2));
        // Image dimension of c_lambda is the Weyl dimension of lambda.
        for (Partition lambda : {Partition{2, 1}, Partition{1, 1, 1}, Partition{2, 2}, Partition{3, 1}}) {
            if (lambda.length() > n) {
                CHECK(young_projector(lambda, n).is_zero());
                continue;
            }
            CHECK(Integer(static_cast<unsigned long>(Subspace::image(young_projector(lambda, n)).dimension())) ==
                  weyl_dim(lambda.padded(n)));
        }
    }
    for (Partition lambda : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{3, 1}, Partition{2, 2}}) {
        Matrix c = young_projector(lambda, 3);
        Rational m = Rational(factorial(static_cast<unsigned>(lambda.size()))) / Rational(Integer(static_cast<unsigned long>(std_tableaux_count(lambda))));
        CHECK(c * c == c * m);
    }
    // The projector commutes with the diagonal action.
    MatrixAlgebra gl3 = build_algebra(Family::gl, 3);
    Matrix c = young_projector({2, 1}, 3);
    for (auto& x : gl3.basis()) CHECK(c * tensor_operator(x, 3, 0) == tensor_operator(x, 3, 0) * c);
}

TEST_CASE("tensor modules") {
    for (std::size_t n : {2u, 3u, 4u}) CHECK(module_V_lambda_mu(n, {{1}, {}}).dimension() == n);
    Subspace adj = module_V_lambda_mu(3, {{1}, {1}});
    CHECK(adj.dimension() == 8);
    CHECK(adj == kernel_space(1, 1, 3));
    CHECK(module_V_lambda_mu(3, {{2}, {}}).dimension() == 6);
    CHECK(module_V_lambda_mu(3, {{1, 1}, {}}).dimension() == 3);
    CHECK(module_V_lambda_mu(3, {{}, {}}).dimension() == 1);

    TensorRep rep(build_algebra(Family::gl, 3), 1, 1);
    auto hw = highest_weight_vectors(adj, gl_frame(rep));
    REQUIRE(hw.size() == 1);
    CHECK(hw[0].weight == w({1, 0, -1}));
    CHECK(decompose(adj, gl_frame(rep)) == WeightMultiset{{w({1, 0, -1}), 1}});
}

TEST_CASE("highest weight vectors") {
    TensorRep nat(build_algebra(Family::gl, 3), 1, 0);
    auto hw = highest_weight_vectors(Subspace::full(3), gl_frame(nat));
    REQUIRE(hw.size() == 1);
    CHECK(hw[0].weight == w({1, 0, 0}));
    CHECK(hw[0].vector == Vector{1, 0, 0});
    CHECK_THROWS_AS(highest_weight_vectors(Subspace::span({{0, 1, 0}}, 3), gl_frame(nat)), std::invalid_argument);

    TensorRep vv(build_algebra(Family::gl, 2), 2, 0);
    CHECK(decompose(Subspace::full(4), gl_frame(vv)) == WeightMultiset{{w({2, 0}), 1}, {w({1, 1}), 1}});

    // Restriction of the gl(3) module (2,1,0) to gl(2).
    TensorRep v3(build_algebra(Family::gl, 3), 3, 0);
    Subspace mod = module_V_lambda_mu(3, {{2, 1}, {}});
    CHECK(decompose(mod, gl_frame(v3)) == WeightMultiset{{w({2, 1, 0}), 1}});
    WeightMultiset restricted = decompose(mod, gl_frame(v3, 2));
    WeightMultiset expected;
    for (auto& s : branch({2, 1, 0})) expected[w(s)] = 1;
    CHECK(restricted == expected);
    CHECK(restricted.size() == 4);
}

TEST_CASE("multiplicity law for the traceless tensors") {
    for (std::size_t n : {3u, 4u}) {
        for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {1, 1}, {2, 1}}) {
            TensorRep rep(build_algebra(Family::gl, n), p, q);
            Subspace ker = kernel_space(p, q, n);
            WeightMultiset got = decompose(ker, gl_frame(rep));
            WeightMultiset expected;
            Integer dim = 0;
            for (auto& lambda : partitions_of(static_cast<Entry>(p)))
                for (auto& mu : partitions_of(static_cast<Entry>(q))) {
                    if (lambda.length() + mu.length() > n) continue;
                    auto mult = std_tableaux_count(lambda) * std_tableaux_count(mu);
                    Sequence seq = padded_weight({lambda, mu}, n).sequence();
                    expected[w(seq)] = mult;
                    dim += weyl_dim(seq) * Integer(static_cast<unsigned long>(mult));
                }
            CHECK(got == expected);
            CHECK(dim == Integer(static_cast<unsigned long>(ker.dimension())));
        }
    }
}

TEST_CASE("evaluation of UEA elements") {
    MatrixAlgebra sl2 = build_algebra(Family::sl, 2);
    LiePresentation p = sl2.presentation();
    TensorRep nat(sl2, 1, 0);
    CHECK(rep_uea(UEAElement::scalar(1), nat.action()) == Matrix::identity(2));
    CHECK(rep_uea(casimir(p), nat.action()) == Matrix::identity(2) * Rational(3, 8));
    CHECK_THROWS_AS(rep_uea(UEAElement::generator(5), nat.action()), std::invalid_argument);

    MatrixAlgebra sl3 = build_algebra(Family::sl, 3);
    LiePresentation p3 = sl3.presentation();
    TensorRep rep(sl3, 1, 1);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> letter(0, p3.dim() - 1);
    std::uniform_int_distribution<int> len(0, 3), coef(-2, 2);
    auto random = [&] {
        UEAElement u;
        for (int t = 0; t < 2; ++t) {
            std::vector<std::size_t> word(static_cast<std::size_t>(len(rng)));
            for (auto& x : word) x = letter(rng);
            u.add_scaled(from_word(word, p3), coef(rng));
        }
        return u;
    };
    for (int trial = 0; trial < 6; ++trial) {
        UEAElement a = random(), b = random();
        CHECK(rep_uea(multiply(a, b, p3), rep.action()) == rep_uea(a, rep.action()) * rep_uea(b, rep.action()));
    }
}

TEST_CASE("symmetric powers") {
    Matrix e = Matrix::unit(2, 0, 1);
    CHECK(symmetric_power_operator(e, 1) == e);
    CHECK(symmetric_power_operator(e, 0) == Matrix(1, 1));
    // On S^2 C^2 with basis x^2, xy, y^2: e y^2 = 2 xy, e xy = x^2.
    Matrix s2 = symmetric_power_operator(e, 2);
    CHECK(s2(0, 1) == 1);
    CHECK(s2(1, 2) == 2);
    auto basis = type_a_basis(2, true).matrices;
    for (unsigned k = 0; k <= 4; ++k) CHECK(is_homomorphism(sl_presentation(2), symmetric_power_ops(basis, k)));
}

TEST_CASE("nilpotent annihilators") {
    MatrixAlgebra gl2 = build_algebra(Family::gl, 2);
    NilpotentReport r = verify_nilpotent_annihilator(gl2, 1, 1, gl2.unit(1, -1), 2);
    CHECK(r.tensor_dim == 4);
    CHECK(r.bound == 3);
    CHECK(r.bound_annihilates);
    CHECK(r.minimal_exponent == 3u);
    CHECK(r.in_algebra);
    CHECK_FALSE(tensor_operator(gl2.unit(1, -1), 1, 1).power(2).is_zero());
    CHECK_THROWS_AS(verify_nilpotent_annihilator(gl2, 1, 1, gl2.unit(1, 1), 2), std::invalid_argument);

    MatrixAlgebra o4 = build_algebra(Family::o, 4);
    NilpotentReport ro = verify_nilpotent_annihilator(o4, 2, 0, o4.unit(1, 2) - o4.unit(-1, -2), 2);
    CHECK(ro.bound == 3);
    CHECK(ro.bound_annihilates);
    CHECK_FALSE(ro.in_algebra);

    MatrixAlgebra sp4 = build_algebra(Family::sp, 4);
    Matrix y = sp4.unit(1, 2) - sp4.unit(-2, -1);
    CHECK(y.power(2).is_zero());
    NilpotentReport rs = verify_nilpotent_annihilator(sp4, 1, 0, y, 2);
    CHECK(rs.in_algebra);
    CHECK(rs.minimal_exponent == 2u);

    // With x^2 = 0 the minimal exponent is exactly p + q + 1.
    for (std::size_t n : {2u, 3u})
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t q = 0; q <= 2; ++q) {
                if (p + q == 0 || p + q > 3) continue;
                MatrixAlgebra gl = build_algebra(Family::gl, n);
                NilpotentReport rep = verify_nilpotent_annihilator(gl, p, q, Matrix::unit(n, 0, n - 1), 2);
                CHECK(rep.minimal_exponent == static_cast<unsigned>(p + q + 1));
            }
    // x^3 = 0 on gl(3): bound (k-1)(p+q)+1.
    MatrixAlgebra gl3 = build_algebra(Family::gl, 3);
    Matrix z = Matrix::unit(3, 0, 1) + Matrix::unit(3, 1, 2);
    NilpotentReport r3 = verify_nilpotent_annihilator(gl3, 1, 1, z, 3);
    CHECK(r3.bound == 5);
    CHECK(r3.bound_annihilates);
    CHECK(r3.minimal_exponent == 5u);
}

TEST_CASE("locally central annihilators") {
    MatrixAlgebra sl3 = build_algebra(Family::sl, 3);
    LocallyCentralReport vv = locally_central_annihilator(TensorRep(sl3, 2, 0), 2, true);
    CHECK(vv.module_dim == 9);
    CHECK(vv.scalars == std::vector<Rational>{0, Rational(3, 8), 1});
    CHECK(vv.annihilates);
    CHECK(vv.element.degree() == 6);

    LocallyCentralReport v = locally_central_annihilator(TensorRep(sl3, 1, 0), 2, true);
    CHECK(v.scalars == std::vector<Rational>{0, Rational(3, 8)});
    CHECK(v.annihilates);

    LocallyCentralReport trivial = locally_central_annihilator(TensorRep(sl3, 0, 0), 2, true);
    CHECK(trivial.scalars == std::vector<Rational>{0});
    CHECK(trivial.annihilates);

    LocallyCentralReport glr = locally_central_annihilator(TensorRep(build_algebra(Family::gl, 3), 1, 1), 2, false);
    CHECK(glr.annihilates);
    CHECK(glr.constituents.size() == 4);
}

TEST_CASE("trace invariants") {
    LiePresentation sl2 = sl_presentation(2);
    auto nat = type_a_basis(2, true).matrices;
    CHECK(trace_invariant_check(sl2, nat, 1));
    CHECK(trace_invariant_check(sl2, nat, 2));
    CHECK(polarized_trace(nat, {1, 2}) == 1);  // tr(ef)
    CHECK(polarized_trace(nat, {0, 0}) == 2);  // tr(h^2)
    CHECK(trace_invariant_check(sl_presentation(3), type_a_basis(3, true).matrices, 3));
    CHECK(trace_invariant_check(gl_presentation(2), type_a_basis(2, false).matrices, 4));
    std::vector<Matrix> wrong{Matrix::unit(2, 0, 0), Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)};
    CHECK_FALSE(trace_invariant_check(sl2, wrong, 2));
    CHECK_THROWS_AS(trace_invariant_check(sl2, nat, 5), std::invalid_argument);
}

TEST_CASE("subspace dumps are exact") {
    CHECK(dump_basis(kernel_space(1, 1, 2)).find('.') == std::string::npos);
}

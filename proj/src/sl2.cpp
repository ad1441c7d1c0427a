#include "tensorann/sl2.hpp"

#include "tensorann/matrix.hpp"

#include <stdexcept>

namespace tensorann {

Sl2PrimitiveIdeal finite_ideal(std::uint64_t k) { return FiniteType{k}; }

Sl2PrimitiveIdeal verma_ideal(const Rational& lambda) { return VermaType{abs(lambda)}; }

bool equal(const Sl2PrimitiveIdeal& a, const Sl2PrimitiveIdeal& b) {
    if (a.index() != b.index()) return false;
    if (auto* fa = std::get_if<FiniteType>(&a)) return fa->k == std::get<FiniteType>(b).k;
    return abs(std::get<VermaType>(a).lambda) == abs(std::get<VermaType>(b).lambda);
}

std::string to_string(const Sl2PrimitiveIdeal& ideal) {
    if (auto* f = std::get_if<FiniteType>(&ideal)) return "I_" + std::to_string(f->k);
    return "J_[" + to_string(std::get<VermaType>(ideal).lambda) + "]";
}

Sl2PrimitiveIdeal parse_ideal(std::string_view text) {
    if (text.size() < 3 || text[1] != ':') throw std::invalid_argument("ideal must look like I:k or J:lambda");
    std::string_view value = text.substr(2);
    if (text[0] == 'I') {
        Rational k = parse_rational(value);
        if (!is_integer(k) || sgn(k) < 0) throw std::invalid_argument("I:k needs a non-negative integer k");
        return finite_ideal(k.get_num().get_ui());
    }
    if (text[0] == 'J') return verma_ideal(parse_rational(value));
    throw std::invalid_argument("ideal must look like I:k or J:lambda");
}

const LiePresentation& sl2_algebra() {
    static const LiePresentation p = sl_presentation(2);
    return p;
}

const UEAElement& sl2_casimir() {
    static const UEAElement c = casimir(sl2_algebra());
    return c;
}

namespace {

const HighestWeightContext& symbolic_context() {
    static const HighestWeightContext ctx(sl2_algebra(), {1}, {0}, {2}, {0});
    return ctx;
}

Matrix symmetric_power_of(std::uint64_t k, const UEAElement& u) {
    return rep_uea(u, symmetric_power_ops(type_a_basis(2, true).matrices, static_cast<unsigned>(k)));
}

// p(k, lambda) rewritten as a polynomial in (k, nu) with lambda = nu + 1.
Poly2 lambda_to_nu(const Poly2& p) {
    Poly2 out;
    const Poly2 lambda = Poly2::nu() + Poly2(1);
    for (auto& [e, c] : p.terms()) {
        Poly2 term(c);
        for (unsigned i = 0; i < e.first; ++i) term = term * Poly2::k();
        for (unsigned i = 0; i < e.second; ++i) term = term * lambda;
        out += term;
    }
    return out;
}

}  // namespace

Rational finite_casimir_scalar(std::uint64_t k) { return chi_value(sl2_casimir(), sl2_context(Rational(k))); }

Rational verma_casimir_scalar(const Rational& lambda) { return chi_value(sl2_casimir(), sl2_context(lambda - 1)); }

std::vector<UEAElement> witnesses(const Sl2PrimitiveIdeal& ideal) {
    const LiePresentation& p = sl2_algebra();
    const UEAElement& c = sl2_casimir();
    if (auto* f = std::get_if<FiniteType>(&ideal)) {
        const auto k = static_cast<unsigned>(f->k + 1);
        return {power(UEAElement::generator(1), k, p), power(UEAElement::generator(2), k, p),
                c - UEAElement::scalar(finite_casimir_scalar(f->k))};
    }
    return {c - UEAElement::scalar(verma_casimir_scalar(std::get<VermaType>(ideal).lambda))};
}

bool member_finite(const UEAElement& u, std::uint64_t k) { return symmetric_power_of(k, u).is_zero(); }

bool member_verma(const UEAElement& u, const Rational& lambda) {
    return verma_action_sl2_symbolic(u, symbolic_context(), lambda - 1).annihilates();
}

bool member_verma_symbolic(const UEAElement& u, const Poly2& scalar) {
    return verma_action_sl2_symbolic(u, symbolic_context(), std::nullopt).minus_scalar(lambda_to_nu(scalar)).annihilates();
}

bool member(const UEAElement& u, const Sl2PrimitiveIdeal& ideal) {
    if (auto* f = std::get_if<FiniteType>(&ideal)) return member_finite(u, f->k);
    return member_verma(u, std::get<VermaType>(ideal).lambda);
}

Sl2PrimitiveIdeal classify_annihilator(const Rational& nu) {
    const Rational lambda = nu + 1;
    if (is_integer(lambda) && sgn(lambda) > 0) return finite_ideal(Rational(lambda - 1).get_num().get_ui());
    return verma_ideal(lambda);
}

}  // namespace tensorann

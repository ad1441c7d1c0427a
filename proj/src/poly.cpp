#include "tensorann/poly.hpp"

namespace tensorann {

Poly2::Poly2(const Rational& c) { add_term({0, 0}, c); }

Poly2 Poly2::k() {
    Poly2 p;
    p.add_term({1, 0}, 1);
    return p;
}

Poly2 Poly2::nu() {
    Poly2 p;
    p.add_term({0, 1}, 1);
    return p;
}

void Poly2::add_term(Exponents e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r(*this);
    r += o;
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    return r;
}

Poly2 Poly2::substitute_nu(const Rational& value) const {
    Poly2 r;
    for (auto& [e, c] : terms_) {
        Rational v = c;
        for (unsigned i = 0; i < e.second; ++i) v *= value;
        r.add_term({e.first, 0}, v);
    }
    return r;
}

Rational Poly2::evaluate(const Rational& k_value, const Rational& nu_value) const {
    Rational total = 0;
    for (auto& [e, c] : terms_) {
        Rational v = c;
        for (unsigned i = 0; i < e.first; ++i) v *= k_value;
        for (unsigned i = 0; i < e.second; ++i) v *= nu_value;
        total += v;
    }
    return total;
}

std::string to_string(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [e, c] = *it;
        Rational a = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        std::string vars;
        auto var = [&](const char* name, unsigned d) {
            if (d == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (d > 1) vars += "^" + std::to_string(d);
        };
        var("k", e.first);
        var("nu", e.second);
        if (vars.empty())
            out += to_string(a);
        else if (a == 1)
            out += vars;
        else
            out += to_string(a) + "*" + vars;
    }
    return out;
}

}  // namespace tensorann

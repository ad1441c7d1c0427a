#pragma once

#include "tensorann/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace tensorann {

/// Polynomial in two commuting variables k and nu with rational coefficients.
/// Used for the action of sl(2) on a Verma basis f^k v with symbolic k and weight nu.
class Poly2 {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (deg k, deg nu)

    Poly2() = default;
    Poly2(const Rational& c);  // NOLINT(google-explicit-constructor)
    static Poly2 k();
    static Poly2 nu();

    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    bool operator==(const Poly2& o) const = default;

    Poly2 substitute_nu(const Rational& value) const;
    Rational evaluate(const Rational& k_value, const Rational& nu_value) const;

private:
    void add_term(Exponents e, const Rational& c);
    std::map<Exponents, Rational> terms_;
};

std::string to_string(const Poly2& p);

}  // namespace tensorann

#pragma once

#include "tensorann/poly.hpp"
#include "tensorann/uea.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tensorann {

/// I_k: annihilator of the (k+1)-dimensional module S^k V.
struct FiniteType {
    std::uint64_t k = 0;
    bool operator==(const FiniteType&) const = default;
};

/// J_[lambda]: annihilator of the Verma module with highest weight lambda - 1, lambda ~ -lambda.
/// lambda holds the non-negative representative.
struct VermaType {
    Rational lambda;
    bool operator==(const VermaType& o) const { return lambda == o.lambda; }
};

using Sl2PrimitiveIdeal = std::variant<FiniteType, VermaType>;

Sl2PrimitiveIdeal finite_ideal(std::uint64_t k);
Sl2PrimitiveIdeal verma_ideal(const Rational& lambda);

bool equal(const Sl2PrimitiveIdeal& a, const Sl2PrimitiveIdeal& b);
std::string to_string(const Sl2PrimitiveIdeal& ideal);
/// "I:k" or "J:lambda".
Sl2PrimitiveIdeal parse_ideal(std::string_view text);

/// sl(2) with basis h, e, f; shared so that products are cached across calls.
const LiePresentation& sl2_algebra();
/// Killing-form Casimir, h^2/8 + ef/2 - h/4 in normal form.
const UEAElement& sl2_casimir();

/// Casimir scalar on S^k V, (k^2 + 2k)/8.
Rational finite_casimir_scalar(std::uint64_t k);
/// Casimir scalar on the Verma module with parameter lambda, (lambda^2 - 1)/8.
Rational verma_casimir_scalar(const Rational& lambda);

/// I_k: e^(k+1), f^(k+1), C - c_k. J_[lambda]: C - (lambda^2 - 1)/8.
std::vector<UEAElement> witnesses(const Sl2PrimitiveIdeal& ideal);

/// u acts as zero on S^k V.
bool member_finite(const UEAElement& u, std::uint64_t k);
/// u acts as zero on the Verma module with parameter lambda.
bool member_verma(const UEAElement& u, const Rational& lambda);
/// u - scalar(lambda) acts as zero on every Verma module, as an identity of polynomials in lambda.
/// The second variable of scalar stands for lambda.
bool member_verma_symbolic(const UEAElement& u, const Poly2& scalar = Poly2());
bool member(const UEAElement& u, const Sl2PrimitiveIdeal& ideal);

/// Annihilator of the simple highest weight module with highest weight nu.
Sl2PrimitiveIdeal classify_annihilator(const Rational& nu);

}  // namespace tensorann

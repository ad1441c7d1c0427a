#pragma once

#include "tensorann/linalg.hpp"
#include "tensorann/poly.hpp"
#include "tensorann/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tensorann {

/// Sparse vector over the basis of a Lie algebra: (index, coefficient) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// PBW monomial x_{i1}^{a1} ... x_{ir}^{ar} with i1 < ... < ir, stored as (index, exponent) runs.
class Monomial {
public:
    using Run = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    /// Builds from a non-decreasing word; throws if the word is out of order.
    static Monomial from_sorted_word(const std::vector<std::size_t>& word);

    const std::vector<Run>& runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }
    unsigned degree() const noexcept;
    std::vector<std::size_t> word() const;
    std::size_t last_index() const { return runs_.back().first; }

    Monomial without_last() const;
    /// Appends x_i; requires i >= last_index().
    Monomial appended(std::size_t i) const;

    /// Degree first, then lexicographic on runs.
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

private:
    std::vector<Run> runs_;
};

/// Element of U(g) in PBW normal form with exact coefficients; no zero coefficients stored.
class UEAElement {
public:
    UEAElement() = default;
    static UEAElement scalar(const Rational& c);
    static UEAElement generator(std::size_t i, const Rational& c = 1);
    static UEAElement monomial(const Monomial& m, const Rational& c = 1);

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Filtration degree; -1 for the zero element.
    int degree() const noexcept;
    Rational constant_term() const;
    bool is_scalar() const;

    void add_term(const Monomial& m, const Rational& c);
    void add_scaled(const UEAElement& other, const Rational& c);

    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator-() const;
    UEAElement operator*(const Rational& c) const;
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    bool operator==(const UEAElement& o) const = default;

private:
    std::map<Monomial, Rational> terms_;
};

namespace detail {
struct ProductCache;
}

/// A finite-dimensional Lie algebra given by a basis and exact structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k. Immutable; copies share a thread-safe product cache.
class LiePresentation {
public:
    /// brackets[i][j] is [x_i, x_j]. Throws std::invalid_argument unless the constants are
    /// antisymmetric and satisfy the Jacobi identity.
    LiePresentation(std::vector<std::string> names, std::vector<std::vector<SparseVector>> brackets);

    /// Structure constants of a matrix Lie algebra. Throws if the matrices are dependent or
    /// their span is not closed under the commutator.
    static LiePresentation from_matrices(std::vector<std::string> names, const std::vector<Matrix>& basis);

    std::size_t dim() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    const SparseVector& bracket(std::size_t i, std::size_t j) const { return brackets_[i][j]; }
    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    /// Same algebra with basis order[0], order[1], ...
    LiePresentation permuted(const std::vector<std::size_t>& order) const;

    /// Adjoint matrix of x_i: column j holds [x_i, x_j].
    Matrix ad(std::size_t i) const;

    detail::ProductCache& cache() const { return *cache_; }

private:
    void validate() const;

    std::vector<std::string> names_;
    std::vector<std::vector<SparseVector>> brackets_;
    std::shared_ptr<detail::ProductCache> cache_;
};

UEAElement multiply(const UEAElement& a, const UEAElement& b, const LiePresentation& p);
UEAElement power(const UEAElement& a, unsigned k, const LiePresentation& p);
/// Normal form of the product of the letters in `word` (any order).
UEAElement from_word(const std::vector<std::size_t>& word, const LiePresentation& p);
UEAElement bracket_u(const UEAElement& a, const UEAElement& b, const LiePresentation& p);

/// Symmetrization (1/n!) sum over all orderings of the word; word length at most 8.
UEAElement symmetrize(const std::vector<std::size_t>& word, const LiePresentation& p);
inline constexpr std::size_t kSymmetrizeCap = 8;

/// K(x, y) = tr(ad_x ad_y) on the basis.
Matrix killing_form(const LiePresentation& p);
/// sum_ij (B^-1)_ji x_i x_j for a nondegenerate invariant form B. Throws std::domain_error
/// if B is degenerate.
UEAElement casimir_for_form(const LiePresentation& p, const Matrix& form);
/// Casimir element of the Killing form.
UEAElement casimir(const LiePresentation& p);
bool is_central(const UEAElement& u, const LiePresentation& p);

/// Parses sums of terms `coef * name^exp * ...`; parentheses and [a, b] brackets allowed.
UEAElement parse_element(std::string_view text, const LiePresentation& p);
std::string to_string(const UEAElement& u, const LiePresentation& p);

/// Basis split n_+ + h + n_- together with a highest weight: hw[c] is the value on cartan[c].
class HighestWeightContext {
public:
    HighestWeightContext(LiePresentation p, std::vector<std::size_t> n_plus, std::vector<std::size_t> cartan,
                         std::vector<std::size_t> n_minus, std::vector<Rational> hw);

    const LiePresentation& presentation() const noexcept { return p_; }
    const std::vector<std::size_t>& n_plus() const noexcept { return n_plus_; }
    const std::vector<std::size_t>& cartan() const noexcept { return cartan_; }
    const std::vector<std::size_t>& n_minus() const noexcept { return n_minus_; }
    const std::vector<Rational>& highest_weight() const noexcept { return hw_; }

    HighestWeightContext with_weight(std::vector<Rational> hw) const;

    /// The presentation reordered as n_-, h, n_+ (PBW basis U(n_-) U(h) U(n_+)).
    const LiePresentation& triangular() const noexcept { return *triangular_; }
    const std::vector<std::size_t>& to_triangular() const noexcept { return to_tri_; }

    /// Values alpha(h_c) of the root of basis element x (throws if x is not a weight vector).
    std::vector<Rational> root_of(std::size_t x) const;

private:
    LiePresentation p_;
    std::vector<std::size_t> n_plus_, cartan_, n_minus_;
    std::vector<Rational> hw_;
    std::shared_ptr<const LiePresentation> triangular_;
    std::vector<std::size_t> to_tri_;
};

/// The U(n_-) representative of u modulo the left ideal generated by n_+ and h - hw(h):
/// u v = hw_action(u) v for a highest weight vector v.
UEAElement hw_action(const UEAElement& u, const HighestWeightContext& ctx);
/// Scalar by which central z acts on a highest weight module. Throws std::domain_error if
/// hw_action(z) is not a scalar.
Rational chi_value(const UEAElement& z, const HighestWeightContext& ctx);

/// PBW monomials in the n_- letters of total root -target (h-coordinates).
std::vector<Monomial> n_minus_monomials_of_weight(const HighestWeightContext& ctx,
                                                  const std::vector<Rational>& target, unsigned max_degree);

/// Standard type-A presentations in reordered-position coordinates: gl(n) basis E_ij, sl(n)
/// basis h_i = E_ii - E_(i+1)(i+1), e_ij (i < j), f_ji. sl(2) uses the names h, e, f.
struct TypeABasis {
    std::vector<std::string> names;
    std::vector<Matrix> matrices;
    std::vector<std::size_t> n_plus, cartan, n_minus;
};
TypeABasis type_a_basis(std::size_t n, bool traceless);

LiePresentation sl_presentation(std::size_t n);
LiePresentation gl_presentation(std::size_t n);
/// Highest weight context for sl(n) / gl(n) from gl-coordinates of the highest weight.
HighestWeightContext type_a_context(std::size_t n, bool traceless, const std::vector<Rational>& gl_weight);
/// sl(2) with h acting by nu on the highest weight vector.
HighestWeightContext sl2_context(const Rational& nu);

/// Action of u on the Verma basis f^k v of sl(2): u f^k v = sum_s shifts[s](k, nu) f^(k+s) v.
struct VermaAction {
    std::map<int, Poly2> shifts;
    bool annihilates() const;
    /// Action of u - scalar.
    VermaAction minus_scalar(const Poly2& scalar) const;
};

/// Throws std::invalid_argument unless ctx is an sl(2) triple with [h,e]=2e, [h,f]=-2f, [e,f]=h.
/// nu = nullopt keeps the weight symbolic.
VermaAction verma_action_sl2_symbolic(const UEAElement& u, const HighestWeightContext& ctx,
                                      const std::optional<Rational>& nu);

}  // namespace tensorann

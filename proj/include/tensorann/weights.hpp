#pragma once

#include "tensorann/partitions.hpp"
#include "tensorann/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tensorann {

/// A weight of the Cartan subalgebra of gl(n) in epsilon coordinates.
class FiniteWeight {
public:
    FiniteWeight() = default;
    explicit FiniteWeight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static FiniteWeight from_integers(const Sequence& seq);

    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    FiniteWeight operator+(const FiniteWeight& other) const;
    FiniteWeight operator-(const FiniteWeight& other) const;
    bool operator==(const FiniteWeight&) const = default;
    auto operator<=>(const FiniteWeight& other) const { return coords_ <=> other.coords_; }

    /// Integer coordinates, throws if any coordinate is fractional.
    Sequence integers() const;

private:
    std::vector<Rational> coords_;
};

std::string to_string(const FiniteWeight& w);
FiniteWeight parse_weight(std::string_view text);

/// One-line notation: sigma[i] is the image of i. Acting on coordinates moves
/// entry i to slot sigma[i].
using Permutation = std::vector<std::size_t>;

Permutation compose(const Permutation& outer, const Permutation& inner);
std::vector<Permutation> all_permutations(std::size_t n);

/// Type A_{n-1} root data in gl(n) coordinates. Positive roots are e_i - e_j, i < j.
class RootSystemA {
public:
    explicit RootSystemA(std::size_t n);

    std::size_t rank() const noexcept { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& positive_roots() const noexcept { return positive_; }
    std::vector<FiniteWeight> simple_roots() const;
    FiniteWeight root(std::size_t i, std::size_t j) const;

    /// Half-sum of positive roots: ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
    const FiniteWeight& rho() const noexcept { return rho_; }
    /// The integer shift (n-1, ..., 1, 0); differs from rho by a central weight.
    FiniteWeight rho_integer() const;

    /// lambda(H_alpha) for alpha = e_i - e_j.
    Rational coroot_pairing(const FiniteWeight& w, std::size_t i, std::size_t j) const;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> positive_;
    FiniteWeight rho_;
};

bool is_integral(const FiniteWeight& w, const RootSystemA& rs);
bool is_dominant(const FiniteWeight& w, const RootSystemA& rs);

FiniteWeight permute(const Permutation& sigma, const FiniteWeight& w);
/// sigma . w = sigma(w + rho) - rho.
FiniteWeight dot_action(const Permutation& sigma, const FiniteWeight& w, const RootSystemA& rs);

/// The Weyl group element taking w to a dominant weight under the dot action, when one
/// exists (exactly when w + rho has distinct coordinates). Throws on non-integral w.
std::optional<std::pair<Permutation, FiniteWeight>> dominant_dot_representative(const FiniteWeight& w,
                                                                                 const RootSystemA& rs);

/// Same W-orbit (equal central characters).
bool linked(const FiniteWeight& a, const FiniteWeight& b);
/// Canonical orbit representative: coordinates sorted decreasingly.
FiniteWeight q_point(const FiniteWeight& w);

/// Number of ways to write nu as a non-negative integer combination of positive roots.
Integer kostant_partition(const FiniteWeight& nu, const RootSystemA& rs);
/// dim M(lambda)_mu = P(lambda - rho - mu), with M(lambda) of highest weight lambda - rho.
Integer verma_weight_mult(const FiniteWeight& lambda, const FiniteWeight& mu, const RootSystemA& rs);

/// Dimension of the simple gl(n)-module of dominant integral highest weight w.
Integer weyl_dim(const Sequence& w);
Integer weyl_dim(const FiniteWeight& w);

/// Weakly decreasing sequences of the given length with entries in [lo, hi].
std::vector<Sequence> dominant_sequences(std::size_t length, Entry lo, Entry hi);

}  // namespace tensorann

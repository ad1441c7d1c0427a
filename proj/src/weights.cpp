#include "tensorann/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tensorann {

namespace {

void require_rank(const FiniteWeight& w, std::size_t n, const char* what) {
    if (w.rank() != n) throw std::invalid_argument(std::string(what) + ": weight length does not match rank");
}

}  // namespace

FiniteWeight FiniteWeight::from_integers(const Sequence& seq) {
    std::vector<Rational> c;
    c.reserve(seq.size());
    for (Entry v : seq) c.emplace_back(static_cast<long>(v));
    return FiniteWeight(std::move(c));
}

FiniteWeight FiniteWeight::operator+(const FiniteWeight& other) const {
    if (rank() != other.rank()) throw std::invalid_argument("weight length mismatch");
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return FiniteWeight(std::move(c));
}

FiniteWeight FiniteWeight::operator-(const FiniteWeight& other) const {
    if (rank() != other.rank()) throw std::invalid_argument("weight length mismatch");
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return FiniteWeight(std::move(c));
}

Sequence FiniteWeight::integers() const {
    Sequence out;
    for (auto& c : coords_) {
        if (!is_integer(c) || !c.get_num().fits_slong_p()) throw std::invalid_argument("weight has non-integer coordinate");
        out.push_back(c.get_num().get_si());
    }
    return out;
}

std::string to_string(const FiniteWeight& w) { return join_rationals(w.coords()); }

FiniteWeight parse_weight(std::string_view text) { return FiniteWeight(parse_rational_list(text)); }

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RootSystemA::RootSystemA(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("rank must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) positive_.emplace_back(i, j);
    std::vector<Rational> r;
    for (std::size_t i = 0; i < n; ++i) r.emplace_back(static_cast<long>(n) - 1 - 2 * static_cast<long>(i), 2);
    for (auto& x : r) x.canonicalize();
    rho_ = FiniteWeight(std::move(r));
}

std::vector<FiniteWeight> RootSystemA::simple_roots() const {
    std::vector<FiniteWeight> out;
    for (std::size_t i = 0; i + 1 < n_; ++i) out.push_back(root(i, i + 1));
    return out;
}

FiniteWeight RootSystemA::root(std::size_t i, std::size_t j) const {
    std::vector<Rational> c(n_);
    c.at(i) += 1;
    c.at(j) -= 1;
    return FiniteWeight(std::move(c));
}

FiniteWeight RootSystemA::rho_integer() const {
    Sequence s(n_);
    for (std::size_t i = 0; i < n_; ++i) s[i] = static_cast<Entry>(n_ - 1 - i);
    return FiniteWeight::from_integers(s);
}

Rational RootSystemA::coroot_pairing(const FiniteWeight& w, std::size_t i, std::size_t j) const {
    require_rank(w, n_, "coroot_pairing");
    return w[i] - w[j];
}

bool is_integral(const FiniteWeight& w, const RootSystemA& rs) {
    require_rank(w, rs.rank(), "is_integral");
    for (auto [i, j] : rs.positive_roots())
        if (!is_integer(rs.coroot_pairing(w, i, j))) return false;
    return true;
}

bool is_dominant(const FiniteWeight& w, const RootSystemA& rs) {
    require_rank(w, rs.rank(), "is_dominant");
    for (auto [i, j] : rs.positive_roots())
        if (rs.coroot_pairing(w, i, j) < 0) return false;
    return true;
}

FiniteWeight permute(const Permutation& sigma, const FiniteWeight& w) {
    if (sigma.size() != w.rank()) throw std::invalid_argument("permutation size does not match rank");
    std::vector<Rational> c(w.rank());
    for (std::size_t i = 0; i < sigma.size(); ++i) c.at(sigma[i]) = w[i];
    return FiniteWeight(std::move(c));
}

FiniteWeight dot_action(const Permutation& sigma, const FiniteWeight& w, const RootSystemA& rs) {
    require_rank(w, rs.rank(), "dot_action");
    return permute(sigma, w + rs.rho()) - rs.rho();
}

std::optional<std::pair<Permutation, FiniteWeight>> dominant_dot_representative(const FiniteWeight& w,
                                                                                 const RootSystemA& rs) {
    if (!is_integral(w, rs)) throw std::invalid_argument("dominant_dot_representative: weight is not integral");
    FiniteWeight shifted = w + rs.rho();
    std::vector<std::size_t> order(w.rank());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shifted[a] > shifted[b]; });
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
        if (shifted[order[k]] == shifted[order[k + 1]]) return std::nullopt;
    // order[k] is the source of slot k, so sigma sends order[k] to k.
    Permutation sigma(w.rank());
    for (std::size_t k = 0; k < order.size(); ++k) sigma[order[k]] = k;
    return std::make_pair(sigma, dot_action(sigma, w, rs));
}

bool linked(const FiniteWeight& a, const FiniteWeight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("linked: weight length mismatch");
    return q_point(a) == q_point(b);
}

FiniteWeight q_point(const FiniteWeight& w) {
    std::vector<Rational> c = w.coords();
    std::sort(c.begin(), c.end(), std::greater<>());
    return FiniteWeight(std::move(c));
}

namespace {

// Distribute nu[0] over the roots e_0 - e_j, then recurse on the remaining coordinates.
Integer kostant_rec(std::vector<Entry>& nu, std::size_t first) {
    const std::size_t n = nu.size();
    if (first + 1 >= n) return (first >= n || nu[first] == 0) ? Integer(1) : Integer(0);
    const Entry total = nu[first];
    if (total < 0) return 0;
    Integer count = 0;
    std::function<void(std::size_t, Entry)> spread = [&](std::size_t j, Entry left) {
        if (j == n - 1) {
            nu[j] += left;
            count += kostant_rec(nu, first + 1);
            nu[j] -= left;
            return;
        }
        for (Entry m = 0; m <= left; ++m) {
            nu[j] += m;
            spread(j + 1, left - m);
            nu[j] -= m;
        }
    };
    spread(first + 1, total);
    return count;
}

}  // namespace

Integer kostant_partition(const FiniteWeight& nu, const RootSystemA& rs) {
    require_rank(nu, rs.rank(), "kostant_partition");
    Rational sum = 0;
    for (auto& c : nu.coords()) {
        if (!is_integer(c)) return 0;
        sum += c;
    }
    if (sum != 0) return 0;
    std::vector<Entry> v = nu.integers();
    return kostant_rec(v, 0);
}

Integer verma_weight_mult(const FiniteWeight& lambda, const FiniteWeight& mu, const RootSystemA& rs) {
    return kostant_partition(lambda - rs.rho() - mu, rs);
}

Integer weyl_dim(const Sequence& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) throw std::invalid_argument("weyl_dim: weight is not dominant");
    Rational dim = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            dim *= Rational(static_cast<long>(w[i] - w[j]) + static_cast<long>(j - i), static_cast<long>(j - i));
    dim.canonicalize();
    if (!is_integer(dim)) throw std::logic_error("weyl_dim: non-integral dimension");
    return dim.get_num();
}

Integer weyl_dim(const FiniteWeight& w) { return weyl_dim(w.integers()); }

std::vector<Sequence> dominant_sequences(std::size_t length, Entry lo, Entry hi) {
    std::vector<Sequence> out;
    Sequence cur;
    std::function<void(Entry)> rec = [&](Entry bound) {
        if (cur.size() == length) {
            out.push_back(cur);
            return;
        }
        for (Entry v = bound; v >= lo; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(hi);
    return out;
}

}  // namespace tensorann

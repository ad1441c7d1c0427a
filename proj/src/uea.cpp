#include "tensorann/uea.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace tensorann {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_sorted_word(const std::vector<std::size_t>& word) {
    Monomial m;
    for (std::size_t i : word) {
        if (!m.runs_.empty() && i < m.runs_.back().first) throw std::invalid_argument("word is not in PBW order");
        m = m.appended(i);
    }
    return m;
}

unsigned Monomial::degree() const noexcept {
    unsigned d = 0;
    for (auto& r : runs_) d += r.second;
    return d;
}

std::vector<std::size_t> Monomial::word() const {
    std::vector<std::size_t> w;
    for (auto& [i, e] : runs_) w.insert(w.end(), e, i);
    return w;
}

Monomial Monomial::without_last() const {
    Monomial m(*this);
    if (--m.runs_.back().second == 0) m.runs_.pop_back();
    return m;
}

Monomial Monomial::appended(std::size_t i) const {
    Monomial m(*this);
    if (!m.runs_.empty() && m.runs_.back().first == i)
        ++m.runs_.back().second;
    else
        m.runs_.emplace_back(static_cast<std::uint32_t>(i), 1);
    return m;
}

bool Monomial::operator<(const Monomial& o) const {
    unsigned d1 = degree(), d2 = o.degree();
    if (d1 != d2) return d1 < d2;
    return runs_ < o.runs_;
}

// ---------------------------------------------------------------------------
// UEAElement

UEAElement UEAElement::scalar(const Rational& c) {
    UEAElement u;
    u.add_term(Monomial{}, c);
    return u;
}

UEAElement UEAElement::generator(std::size_t i, const Rational& c) {
    UEAElement u;
    u.add_term(Monomial{}.appended(i), c);
    return u;
}

UEAElement UEAElement::monomial(const Monomial& m, const Rational& c) {
    UEAElement u;
    u.add_term(m, c);
    return u;
}

int UEAElement::degree() const noexcept {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

Rational UEAElement::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool UEAElement::is_scalar() const { return degree() <= 0; }

void UEAElement::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void UEAElement::add_scaled(const UEAElement& other, const Rational& c) {
    if (sgn(c) == 0) return;
    for (auto& [m, v] : other.terms_) add_term(m, v * c);
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    add_scaled(o, 1);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    add_scaled(o, -1);
    return *this;
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    UEAElement r(*this);
    r += o;
    return r;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
    UEAElement r(*this);
    r -= o;
    return r;
}

UEAElement UEAElement::operator-() const { return *this * Rational(-1); }

UEAElement UEAElement::operator*(const Rational& c) const {
    UEAElement r;
    r.add_scaled(*this, c);
    return r;
}

// ---------------------------------------------------------------------------
// LiePresentation

namespace detail {

// Memoized normal forms of (normal monomial) * (letter). Entries are never erased, so
// concurrent writers inserting the same key store identical values.
struct ProductCache {
    std::shared_mutex mutex;
    std::map<std::pair<Monomial, std::size_t>, UEAElement> table;
};

}  // namespace detail

namespace {

SparseVector normalized(SparseVector v) {
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    std::erase_if(out, [](auto& t) { return sgn(t.second) == 0; });
    return out;
}

void accumulate(std::vector<Rational>& dense, const SparseVector& v, const Rational& scale) {
    for (auto& [i, c] : v) dense[i] += scale * c;
}

}  // namespace

LiePresentation::LiePresentation(std::vector<std::string> names, std::vector<std::vector<SparseVector>> brackets)
    : names_(std::move(names)), brackets_(std::move(brackets)), cache_(std::make_shared<detail::ProductCache>()) {
    const std::size_t d = names_.size();
    if (brackets_.size() != d) throw std::invalid_argument("bracket table has wrong size");
    for (auto& row : brackets_) {
        if (row.size() != d) throw std::invalid_argument("bracket table has wrong size");
        for (auto& v : row) {
            for (auto& [k, c] : v)
                if (k >= d) throw std::invalid_argument("structure constant index out of range");
            v = normalized(std::move(v));
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::find(names_.begin() + static_cast<long>(j), names_.end(), names_[i]) != names_.end())
                throw std::invalid_argument("duplicate basis name '" + names_[i] + "'");
    validate();
}

void LiePresentation::validate() const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<Rational> s(d);
            accumulate(s, brackets_[i][j], 1);
            accumulate(s, brackets_[j][i], 1);
            for (auto& x : s)
                if (sgn(x) != 0) throw std::invalid_argument("structure constants are not antisymmetric");
        }
    // [x_i,[x_j,x_l]] + [x_j,[x_l,x_i]] + [x_l,[x_i,x_j]] = 0
    auto outer = [&](std::vector<Rational>& acc, std::size_t a, const SparseVector& inner) {
        for (auto& [k, c] : inner) accumulate(acc, brackets_[a][k], c);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t l = j + 1; l < d; ++l) {
                std::vector<Rational> acc(d);
                outer(acc, i, brackets_[j][l]);
                outer(acc, j, brackets_[l][i]);
                outer(acc, l, brackets_[i][j]);
                for (auto& x : acc)
                    if (sgn(x) != 0)
                        throw std::invalid_argument("structure constants violate the Jacobi identity at (" + names_[i] +
                                                    ", " + names_[j] + ", " + names_[l] + ")");
            }
}

LiePresentation LiePresentation::from_matrices(std::vector<std::string> names, const std::vector<Matrix>& basis) {
    const std::size_t d = basis.size();
    if (names.size() != d) throw std::invalid_argument("from_matrices: name count mismatch");
    if (d == 0) return LiePresentation(std::move(names), {});
    const std::size_t cells = basis[0].rows() * basis[0].cols();
    std::vector<Vector> cols;
    for (auto& m : basis) cols.push_back(m.flatten());
    Matrix a = Matrix::from_columns(cols, cells);
    if (rank(a) != d) throw std::invalid_argument("from_matrices: basis matrices are linearly dependent");
    std::vector<Vector> rhs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rhs.push_back(commutator(basis[i], basis[j]).flatten());
    auto x = solve(a, Matrix::from_columns(rhs, cells));
    if (!x) throw std::invalid_argument("from_matrices: span is not closed under the commutator");
    std::vector<std::vector<SparseVector>> brackets(d, std::vector<SparseVector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = (*x)(k, i * d + j);
                if (sgn(c) != 0) brackets[i][j].emplace_back(k, c);
            }
    return LiePresentation(std::move(names), std::move(brackets));
}

std::optional<std::size_t> LiePresentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Rational LiePresentation::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (auto& [idx, c] : brackets_.at(i).at(j))
        if (idx == k) return c;
    return 0;
}

LiePresentation LiePresentation::permuted(const std::vector<std::size_t>& order) const {
    const std::size_t d = dim();
    if (order.size() != d) throw std::invalid_argument("permuted: order has wrong size");
    std::vector<std::size_t> inv(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (order[k] >= d || inv[order[k]] != d) throw std::invalid_argument("permuted: not a permutation");
        inv[order[k]] = k;
    }
    std::vector<std::string> names;
    std::vector<std::vector<SparseVector>> brackets(d, std::vector<SparseVector>(d));
    for (std::size_t a = 0; a < d; ++a) {
        names.push_back(names_[order[a]]);
        for (std::size_t b = 0; b < d; ++b)
            for (auto& [k, c] : brackets_[order[a]][order[b]]) brackets[a][b].emplace_back(inv[k], c);
    }
    return LiePresentation(std::move(names), std::move(brackets));
}

Matrix LiePresentation::ad(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (auto& [k, c] : brackets_[i][j]) m(k, j) = c;
    return m;
}

// ---------------------------------------------------------------------------
// PBW products

namespace {

UEAElement times_letter(const UEAElement& a, std::size_t i, const LiePresentation& p);

// m x_i with m in normal form. If i precedes the last letter x_j of m = m' x_j, rewrite
// m' x_j x_i = m' x_i x_j + m' [x_j, x_i]; both pieces have a smaller disorder or degree.
UEAElement monomial_times_letter(const Monomial& m, std::size_t i, const LiePresentation& p) {
    if (m.empty() || m.last_index() <= i) return UEAElement::monomial(m.appended(i));
    auto& cache = p.cache();
    const auto key = std::make_pair(m, i);
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    const std::size_t j = m.last_index();
    const Monomial rest = m.without_last();
    UEAElement result = times_letter(monomial_times_letter(rest, i, p), j, p);
    for (auto& [k, c] : p.bracket(j, i)) result.add_scaled(monomial_times_letter(rest, k, p), c);
    {
        std::unique_lock lock(cache.mutex);
        cache.table.try_emplace(key, result);
    }
    return result;
}

UEAElement times_letter(const UEAElement& a, std::size_t i, const LiePresentation& p) {
    UEAElement out;
    for (auto& [m, c] : a.terms()) out.add_scaled(monomial_times_letter(m, i, p), c);
    return out;
}

}  // namespace

UEAElement multiply(const UEAElement& a, const UEAElement& b, const LiePresentation& p) {
    UEAElement out;
    for (auto& [m, c] : b.terms()) {
        UEAElement partial = a;
        for (std::size_t letter : m.word()) partial = times_letter(partial, letter, p);
        out.add_scaled(partial, c);
    }
    return out;
}

UEAElement power(const UEAElement& a, unsigned k, const LiePresentation& p) {
    UEAElement out = UEAElement::scalar(1);
    for (unsigned i = 0; i < k; ++i) out = multiply(out, a, p);
    return out;
}

UEAElement from_word(const std::vector<std::size_t>& word, const LiePresentation& p) {
    UEAElement out = UEAElement::scalar(1);
    for (std::size_t letter : word) {
        if (letter >= p.dim()) throw std::invalid_argument("from_word: letter out of range");
        out = times_letter(out, letter, p);
    }
    return out;
}

UEAElement bracket_u(const UEAElement& a, const UEAElement& b, const LiePresentation& p) {
    return multiply(a, b, p) - multiply(b, a, p);
}

UEAElement symmetrize(const std::vector<std::size_t>& word, const LiePresentation& p) {
    if (word.size() > kSymmetrizeCap) throw std::length_error("symmetrize: word longer than the cap of 8 letters");
    for (std::size_t letter : word)
        if (letter >= p.dim()) throw std::invalid_argument("symmetrize: letter out of range");
    // Distinct arrangements of the multiset of letters, built prefix by prefix.
    std::map<std::size_t, unsigned> counts;
    for (std::size_t letter : word) ++counts[letter];
    UEAElement total;
    Integer arrangements = 0;
    std::function<void(const UEAElement&, std::size_t)> rec = [&](const UEAElement& prefix, std::size_t left) {
        if (left == 0) {
            total += prefix;
            ++arrangements;
            return;
        }
        for (auto& [letter, n] : counts) {
            if (n == 0) continue;
            --n;
            rec(times_letter(prefix, letter, p), left - 1);
            ++n;
        }
    };
    rec(UEAElement::scalar(1), word.size());
    return total * Rational(Integer(1), arrangements);
}

Matrix killing_form(const LiePresentation& p) {
    const std::size_t d = p.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < d; ++i) ads.push_back(p.ad(i));
    Matrix k(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            k(a, b) = (ads[a] * ads[b]).trace();
            k(b, a) = k(a, b);
        }
    return k;
}

UEAElement casimir_for_form(const LiePresentation& p, const Matrix& form) {
    auto inv = inverse(form);
    if (!inv) throw std::domain_error("casimir: invariant form is degenerate");
    UEAElement c;
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) {
            const Rational& coef = (*inv)(j, i);
            if (sgn(coef) != 0) c.add_scaled(from_word({i, j}, p), coef);
        }
    return c;
}

UEAElement casimir(const LiePresentation& p) { return casimir_for_form(p, killing_form(p)); }

bool is_central(const UEAElement& u, const LiePresentation& p) {
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (!bracket_u(u, UEAElement::generator(i), p).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, const LiePresentation& p) : s_(text), p_(p) {}

    UEAElement parse() {
        UEAElement u = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return u;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("element syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    UEAElement expr() {
        UEAElement acc;
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        acc += negate ? -term() : term();
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    UEAElement term() {
        UEAElement acc = factor();
        while (eat('*')) acc = multiply(acc, factor(), p_);
        return acc;
    }

    UEAElement factor() {
        UEAElement base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = power(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))), p_);
        }
        return base;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    UEAElement atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            UEAElement u = expr();
            if (!eat(')')) fail("expected ')'");
            return u;
        }
        if (c == '[') {
            ++pos_;
            UEAElement a = expr();
            if (!eat(',')) fail("expected ','");
            UEAElement b = expr();
            if (!eat(']')) fail("expected ']'");
            return bracket_u(a, b, p_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (eat('/')) {
                skip();
                std::string den = digits();
                if (den.empty()) fail("expected denominator");
                return UEAElement::scalar(parse_rational(num + "/" + den));
            }
            return UEAElement::scalar(parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = p_.index_of(name);
            if (!idx) fail("unknown basis element '" + name + "'");
            return UEAElement::generator(*idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const LiePresentation& p_;
    std::size_t pos_ = 0;
};

}  // namespace

UEAElement parse_element(std::string_view text, const LiePresentation& p) { return ElementParser(text, p).parse(); }

std::string to_string(const UEAElement& u, const LiePresentation& p) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (auto& [i, e] : m.runs()) {
            if (!mono.empty()) mono += "*";
            mono += p.names().at(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Highest weight reduction

HighestWeightContext::HighestWeightContext(LiePresentation p, std::vector<std::size_t> n_plus,
                                           std::vector<std::size_t> cartan, std::vector<std::size_t> n_minus,
                                           std::vector<Rational> hw)
    : p_(std::move(p)), n_plus_(std::move(n_plus)), cartan_(std::move(cartan)), n_minus_(std::move(n_minus)),
      hw_(std::move(hw)) {
    std::sort(n_plus_.begin(), n_plus_.end());
    std::sort(n_minus_.begin(), n_minus_.end());
    if (hw_.size() != cartan_.size()) throw std::invalid_argument("highest weight needs one value per Cartan element");
    std::vector<std::size_t> order(n_minus_);
    order.insert(order.end(), cartan_.begin(), cartan_.end());
    order.insert(order.end(), n_plus_.begin(), n_plus_.end());
    std::vector<std::size_t> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i || sorted.size() != p_.dim())
            throw std::invalid_argument("n_+, h and n_- must partition the basis");
    for (std::size_t a : cartan_)
        for (std::size_t b : cartan_)
            if (!p_.bracket(a, b).empty()) throw std::invalid_argument("Cartan elements must commute");
    triangular_ = std::make_shared<const LiePresentation>(p_.permuted(order));
    to_tri_.assign(p_.dim(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) to_tri_[order[k]] = k;
}

HighestWeightContext HighestWeightContext::with_weight(std::vector<Rational> hw) const {
    if (hw.size() != cartan_.size()) throw std::invalid_argument("highest weight needs one value per Cartan element");
    HighestWeightContext ctx(*this);
    ctx.hw_ = std::move(hw);
    return ctx;
}

std::vector<Rational> HighestWeightContext::root_of(std::size_t x) const {
    std::vector<Rational> root;
    for (std::size_t h : cartan_) {
        const SparseVector& v = p_.bracket(h, x);
        if (v.empty())
            root.emplace_back(0);
        else if (v.size() == 1 && v[0].first == x)
            root.push_back(v[0].second);
        else
            throw std::invalid_argument("root_of: basis element is not a root vector");
    }
    return root;
}

UEAElement hw_action(const UEAElement& u, const HighestWeightContext& ctx) {
    const LiePresentation& tri = ctx.triangular();
    UEAElement reordered;
    for (auto& [m, c] : u.terms()) {
        std::vector<std::size_t> word = m.word();
        for (auto& letter : word) letter = ctx.to_triangular().at(letter);
        reordered.add_scaled(from_word(word, tri), c);
    }
    const std::size_t nm = ctx.n_minus().size(), nc = ctx.cartan().size();
    UEAElement out;
    for (auto& [m, c] : reordered.terms()) {
        Rational coef = c;
        std::vector<std::size_t> word;
        bool killed = false;
        for (auto& [idx, e] : m.runs()) {
            if (idx < nm) {
                word.insert(word.end(), e, ctx.n_minus()[idx]);
            } else if (idx < nm + nc) {
                for (unsigned k = 0; k < e; ++k) coef *= ctx.highest_weight()[idx - nm];
            } else {
                killed = true;
                break;
            }
        }
        if (!killed) out.add_term(Monomial::from_sorted_word(word), coef);
    }
    return out;
}

Rational chi_value(const UEAElement& z, const HighestWeightContext& ctx) {
    UEAElement r = hw_action(z, ctx);
    if (!r.is_scalar()) throw std::domain_error("chi_value: element does not act by a scalar on the highest weight vector");
    return r.constant_term();
}

std::vector<Monomial> n_minus_monomials_of_weight(const HighestWeightContext& ctx, const std::vector<Rational>& target,
                                                  unsigned max_degree) {
    const auto& letters = ctx.n_minus();
    std::vector<std::vector<Rational>> roots;
    for (std::size_t x : letters) roots.push_back(ctx.root_of(x));
    std::vector<Monomial> out;
    std::vector<Rational> acc(target.size());
    std::vector<std::size_t> word;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos == letters.size()) {
            for (std::size_t c = 0; c < target.size(); ++c)
                if (acc[c] != -target[c]) return;
            out.push_back(Monomial::from_sorted_word(word));
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            rec(pos + 1, left - e);
            word.push_back(letters[pos]);
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += roots[pos][c];
        }
        for (unsigned e = 0; e <= left; ++e) {
            word.pop_back();
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] -= roots[pos][c];
        }
    };
    rec(0, max_degree);
    return out;
}

// ---------------------------------------------------------------------------
// Standard presentations

namespace {

std::string index_pair(std::size_t i, std::size_t j, std::size_t n) {
    if (n <= 9) return std::to_string(i + 1) + std::to_string(j + 1);
    return std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

TypeABasis type_a_basis(std::size_t n, bool traceless) {
    if (n < 1 || (traceless && n < 2)) throw std::invalid_argument("type_a_basis: rank too small");
    TypeABasis b;
    auto add = [&](std::string name, Matrix m, std::vector<std::size_t>& role) {
        role.push_back(b.names.size());
        b.names.push_back(std::move(name));
        b.matrices.push_back(std::move(m));
    };
    const bool sl2 = traceless && n == 2;
    if (traceless) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            add(sl2 ? "h" : "h" + std::to_string(i + 1), Matrix::unit(n, i, i) - Matrix::unit(n, i + 1, i + 1), b.cartan);
    } else {
        for (std::size_t i = 0; i < n; ++i) add("E" + index_pair(i, i, n), Matrix::unit(n, i, i), b.cartan);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            add(sl2 ? "e" : (traceless ? "e" : "E") + index_pair(i, j, n), Matrix::unit(n, i, j), b.n_plus);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            add(sl2 ? "f" : (traceless ? "f" : "E") + index_pair(j, i, n), Matrix::unit(n, j, i), b.n_minus);
    return b;
}

LiePresentation sl_presentation(std::size_t n) {
    TypeABasis b = type_a_basis(n, true);
    return LiePresentation::from_matrices(b.names, b.matrices);
}

LiePresentation gl_presentation(std::size_t n) {
    TypeABasis b = type_a_basis(n, false);
    return LiePresentation::from_matrices(b.names, b.matrices);
}

HighestWeightContext type_a_context(std::size_t n, bool traceless, const std::vector<Rational>& gl_weight) {
    if (gl_weight.size() != n) throw std::invalid_argument("type_a_context: weight length must equal n");
    TypeABasis b = type_a_basis(n, traceless);
    std::vector<Rational> hw;
    for (std::size_t i = 0; i < b.cartan.size(); ++i)
        hw.push_back(traceless ? gl_weight[i] - gl_weight[i + 1] : gl_weight[i]);
    return HighestWeightContext(LiePresentation::from_matrices(b.names, b.matrices), b.n_plus, b.cartan, b.n_minus,
                                std::move(hw));
}

HighestWeightContext sl2_context(const Rational& nu) {
    TypeABasis b = type_a_basis(2, true);
    return HighestWeightContext(LiePresentation::from_matrices(b.names, b.matrices), b.n_plus, b.cartan, b.n_minus,
                                {nu});
}

// ---------------------------------------------------------------------------
// Symbolic sl(2) Verma action

bool VermaAction::annihilates() const {
    return std::all_of(shifts.begin(), shifts.end(), [](auto& kv) { return kv.second.is_zero(); });
}

VermaAction VermaAction::minus_scalar(const Poly2& scalar) const {
    VermaAction out(*this);
    out.shifts[0] = out.shifts[0] - scalar;
    if (out.shifts[0].is_zero()) out.shifts.erase(0);
    return out;
}

VermaAction verma_action_sl2_symbolic(const UEAElement& u, const HighestWeightContext& ctx,
                                      const std::optional<Rational>& nu) {
    if (ctx.n_plus().size() != 1 || ctx.cartan().size() != 1 || ctx.n_minus().size() != 1)
        throw std::invalid_argument("verma_action_sl2_symbolic: not an sl(2) triple");
    const std::size_t e = ctx.n_plus()[0], h = ctx.cartan()[0], f = ctx.n_minus()[0];
    const LiePresentation& p = ctx.presentation();
    auto is = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        const SparseVector& v = p.bracket(i, j);
        return v.size() == 1 && v[0].first == k && v[0].second == c;
    };
    if (!is(h, e, e, 2) || !is(h, f, f, -2) || !is(e, f, h, 1))
        throw std::invalid_argument("verma_action_sl2_symbolic: presentation is not sl(2) in h, e, f form");

    const Poly2 weight = nu ? Poly2(*nu) : Poly2::nu();
    VermaAction out;
    for (auto& [m, c] : u.terms()) {
        std::map<int, Poly2> state{{0, Poly2(c)}};
        std::vector<std::size_t> word = m.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            std::map<int, Poly2> next;
            for (auto& [s, poly] : state) {
                const Poly2 index = Poly2::k() + Poly2(Rational(s));
                if (*it == f)
                    next[s + 1] += poly;
                else if (*it == h)
                    next[s] += poly * (weight - index * Poly2(2));
                else
                    next[s - 1] += poly * index * (weight - index + Poly2(1));
            }
            state = std::move(next);
        }
        for (auto& [s, poly] : state) out.shifts[s] += poly;
    }
    std::erase_if(out.shifts, [](auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace tensorann

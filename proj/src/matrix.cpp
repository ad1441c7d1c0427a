#include "tensorann/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tensorann {

std::string to_string(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::o: return "o";
        case Family::sp: return "sp";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) {
    if (text == "gl") return Family::gl;
    if (text == "sl") return Family::sl;
    if (text == "o" || text == "so") return Family::o;
    if (text == "sp") return Family::sp;
    return std::nullopt;
}

std::vector<int> ordered_labels(std::size_t n) {
    std::vector<int> out;
    const int positives = static_cast<int>((n + 1) / 2), negatives = static_cast<int>(n / 2);
    for (int i = 1; i <= positives; ++i) out.push_back(i);
    for (int i = negatives; i >= 1; --i) out.push_back(-i);
    return out;
}

// ---------------------------------------------------------------------------
// Algebras

std::size_t MatrixAlgebra::position(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("label " + std::to_string(label) + " is not in J_" + std::to_string(n()));
    return static_cast<std::size_t>(it - labels_.begin());
}

Matrix MatrixAlgebra::unit(int i, int j) const { return Matrix::unit(n(), position(i), position(j)); }

namespace {

Subspace span_of(const std::vector<Matrix>& ms, std::size_t cells) {
    std::vector<Vector> flat;
    for (auto& m : ms) flat.push_back(m.flatten());
    return Subspace::span(flat, cells);
}

std::string label_name(int label) { return label < 0 ? "m" + std::to_string(-label) : std::to_string(label); }

int sign(int label) { return label < 0 ? -1 : 1; }

}  // namespace

bool MatrixAlgebra::contains(const Matrix& x) const {
    if (x.rows() != n() || x.cols() != n()) return false;
    return span_of(basis_, n() * n()).contains(x.flatten());
}

Vector MatrixAlgebra::coordinates(const Matrix& x) const {
    std::vector<Vector> cols;
    for (auto& b : basis_) cols.push_back(b.flatten());
    auto sol = solve(Matrix::from_columns(cols, n() * n()), Matrix::from_columns({x.flatten()}, n() * n()));
    if (!sol) throw std::invalid_argument("matrix is not in the algebra");
    return sol->column(0);
}

LiePresentation MatrixAlgebra::presentation() const { return LiePresentation::from_matrices(names_, basis_); }

MatrixAlgebra build_algebra(Family family, std::size_t n) {
    MatrixAlgebra alg;
    alg.family_ = family;
    alg.labels_ = ordered_labels(n);
    if (family == Family::gl || family == Family::sl) {
        if (n < 1 || (family == Family::sl && n < 2))
            throw std::invalid_argument(to_string(family) + "(" + std::to_string(n) + ") is not supported");
        TypeABasis b = type_a_basis(n, family == Family::sl);
        alg.names_ = std::move(b.names);
        alg.basis_ = std::move(b.matrices);
        alg.spanning_size_ = alg.basis_.size();
    } else {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument(to_string(family) + "(" + std::to_string(n) +
                                        ") needs an even number of paired indices");
        // Spanning family over all label pairs; keep the elements that enlarge the span.
        Subspace seen(n * n);
        for (int i : alg.labels_)
            for (int j : alg.labels_) {
                Matrix x = family == Family::o ? alg.unit(i, j) - alg.unit(-j, -i)
                                               : alg.unit(i, j) * Rational(sign(j)) - alg.unit(-j, -i) * Rational(sign(i));
                ++alg.spanning_size_;
                if (x.is_zero() || seen.contains(x.flatten())) continue;
                seen = sum(seen, Subspace::span({x.flatten()}, n * n));
                alg.names_.push_back("X" + label_name(i) + "_" + label_name(j));
                alg.basis_.push_back(std::move(x));
            }
    }
    // Closure is checked by extracting structure constants.
    (void)alg.presentation();
    return alg;
}

// ---------------------------------------------------------------------------
// Tensor modules

namespace {

std::size_t checked_power(std::size_t n, std::size_t e, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (n != 0 && r > cap / n) throw std::length_error("tensor space dimension exceeds the size cap " + std::to_string(cap));
        r *= n;
    }
    if (r > cap) throw std::length_error("tensor space dimension exceeds the size cap " + std::to_string(cap));
    return r;
}

std::size_t ipow(std::size_t n, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= n;
    return r;
}

std::vector<std::size_t> digits_of(std::size_t t, std::size_t n, std::size_t len) {
    std::vector<std::size_t> d(len);
    for (std::size_t f = len; f-- > 0;) {
        d[f] = t % n;
        t /= n;
    }
    return d;
}

std::size_t index_of_digits(const std::vector<std::size_t>& d, std::size_t n) {
    std::size_t t = 0;
    for (std::size_t x : d) t = t * n + x;
    return t;
}

}  // namespace

Matrix tensor_operator(const Matrix& x, std::size_t p, std::size_t q) {
    const std::size_t n = x.rows();
    if (x.cols() != n) throw std::invalid_argument("tensor_operator: matrix must be square");
    const std::size_t len = p + q, dim = ipow(n, len);
    Matrix out(dim, dim);
    for (std::size_t t = 0; t < dim; ++t) {
        auto d = digits_of(t, n, len);
        for (std::size_t f = 0; f < len; ++f) {
            const std::size_t old = d[f];
            for (std::size_t r = 0; r < n; ++r) {
                // natural: x e_old = sum_r x(r, old) e_r; dual: -x^T w_old = -sum_r x(old, r) w_r
                const Rational& c = f < p ? x(r, old) : x(old, r);
                if (sgn(c) == 0) continue;
                d[f] = r;
                if (f < p)
                    out(index_of_digits(d, n), t) += c;
                else
                    out(index_of_digits(d, n), t) -= c;
            }
            d[f] = old;
        }
    }
    return out;
}

TensorRep::TensorRep(MatrixAlgebra algebra, std::size_t p, std::size_t q, std::size_t cap)
    : algebra_(std::move(algebra)), p_(p), q_(q), dim_(checked_power(algebra_.n(), p + q, cap)) {
    for (auto& b : algebra_.basis()) action_.push_back(op(b));
}

bool is_homomorphism(const LiePresentation& p, const std::vector<Matrix>& ops) {
    if (ops.size() != p.dim()) throw std::invalid_argument("is_homomorphism: operator count differs from dimension");
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = i + 1; j < p.dim(); ++j) {
            Matrix expected(ops[i].rows(), ops[i].cols());
            for (auto& [k, c] : p.bracket(i, j)) expected += ops[k] * c;
            if (commutator(ops[i], ops[j]) != expected) return false;
        }
    return true;
}

Matrix contraction(std::size_t p, std::size_t q, std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || i > p || j < 1 || j > q) throw std::out_of_range("contraction: index out of range");
    const std::size_t len = p + q, dim = ipow(n, len);
    Matrix out(ipow(n, len - 2), dim);
    const std::size_t a = i - 1, b = p + j - 1;
    for (std::size_t t = 0; t < dim; ++t) {
        auto d = digits_of(t, n, len);
        if (d[a] != d[b]) continue;
        std::vector<std::size_t> rest;
        for (std::size_t f = 0; f < len; ++f)
            if (f != a && f != b) rest.push_back(d[f]);
        out(index_of_digits(rest, n), t) += 1;
    }
    return out;
}

Subspace kernel_space(std::size_t p, std::size_t q, std::size_t n) {
    const std::size_t dim = ipow(n, p + q);
    if (p == 0 || q == 0) return Subspace::full(dim);
    std::vector<Vector> rows;
    for (std::size_t i = 1; i <= p; ++i)
        for (std::size_t j = 1; j <= q; ++j) {
            Matrix c = contraction(p, q, i, j, n);
            for (std::size_t r = 0; r < c.rows(); ++r) rows.push_back(c.row(r));
        }
    return Subspace::kernel(Matrix::from_rows(rows, dim));
}

namespace {

int permutation_sign(const std::vector<std::size_t>& s) {
    int sgn_ = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) sgn_ = -sgn_;
    return sgn_;
}

}  // namespace

Matrix young_projector(const Partition& lambda, std::size_t n) {
    const std::size_t d = static_cast<std::size_t>(lambda.size());
    if (d > kYoungDegreeCap) throw std::length_error("young_projector: degree exceeds the cap of 5");
    // Row-filled tableau: cell k sits in row_of[k], column col_of[k].
    std::vector<std::size_t> row_of, col_of;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (Entry c = 0; c < lambda.parts()[r]; ++c) {
            row_of.push_back(r);
            col_of.push_back(static_cast<std::size_t>(c));
        }
    std::vector<std::vector<std::size_t>> rows_group, cols_group;
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool keeps_rows = true, keeps_cols = true;
        for (std::size_t k = 0; k < d; ++k) {
            keeps_rows = keeps_rows && row_of[perm[k]] == row_of[k];
            keeps_cols = keeps_cols && col_of[perm[k]] == col_of[k];
        }
        if (keeps_rows) rows_group.push_back(perm);
        if (keeps_cols) cols_group.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Group algebra element sum_{r, c} sgn(c) (r o c).
    std::map<std::vector<std::size_t>, long> element;
    for (auto& r : rows_group)
        for (auto& c : cols_group) {
            std::vector<std::size_t> rc(d);
            for (std::size_t k = 0; k < d; ++k) rc[k] = r[c[k]];
            element[rc] += permutation_sign(c);
        }
    const std::size_t dim = ipow(n, d);
    Matrix out(dim, dim);
    for (std::size_t t = 0; t < dim; ++t) {
        auto a = digits_of(t, n, d);
        std::vector<std::size_t> b(d);
        for (auto& [s, coef] : element) {
            if (coef == 0) continue;
            // The factor in slot k moves to slot s[k].
            for (std::size_t k = 0; k < d; ++k) b[s[k]] = a[k];
            out(index_of_digits(b, n), t) += coef;
        }
    }
    return out;
}

Subspace module_V_lambda_mu(std::size_t n, const PartitionPair& pair, std::size_t cap) {
    const auto p = static_cast<std::size_t>(pair.lambda.size()), q = static_cast<std::size_t>(pair.mu.size());
    checked_power(n, p + q, cap);
    Matrix projector = kronecker(young_projector(pair.lambda, n), young_projector(pair.mu, n));
    return intersect(kernel_space(p, q, n), Subspace::image(projector));
}

// ---------------------------------------------------------------------------
// Weights and decomposition

WeightFrame gl_frame(const TensorRep& rep, std::size_t m) {
    const auto& alg = rep.algebra();
    if (alg.family() != Family::gl && alg.family() != Family::sl)
        throw std::invalid_argument("weight frames are only available for gl and sl");
    if (m < 1 || m > alg.n()) throw std::invalid_argument("gl_frame: subalgebra rank out of range");
    std::vector<std::size_t> pos;
    for (int label : ordered_labels(m)) pos.push_back(alg.position(label));
    WeightFrame frame;
    for (std::size_t a = 0; a < m; ++a) frame.cartan.push_back(rep.op(Matrix::unit(alg.n(), pos[a], pos[a])));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            frame.raising.push_back(rep.op(Matrix::unit(alg.n(), pos[a], pos[b])));
            frame.lowering.push_back(rep.op(Matrix::unit(alg.n(), pos[b], pos[a])));
        }
    return frame;
}

std::vector<WeightedVector> highest_weight_vectors(const Subspace& sub, const WeightFrame& frame) {
    for (const auto* ops : {&frame.cartan, &frame.raising, &frame.lowering})
        for (auto& op : *ops)
            if (!sub.is_invariant(op)) throw std::invalid_argument("highest_weight_vectors: subspace is not invariant");
    const std::size_t dim = sub.ambient(), d = sub.dimension();
    std::vector<std::vector<Rational>> diag(dim);
    for (auto& h : frame.cartan)
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                if (r == c)
                    diag[r].push_back(h(r, c));
                else if (sgn(h(r, c)) != 0)
                    throw std::invalid_argument("highest_weight_vectors: Cartan operators must be diagonal");
            }
    if (d == 0) return {};

    // Joint kernel of the raising operators inside sub, in coordinates of sub's basis.
    std::vector<Vector> rows;
    for (auto& e : frame.raising) {
        std::vector<Vector> images;
        for (auto& b : sub.basis()) images.push_back(e * b);
        for (std::size_t r = 0; r < dim; ++r) {
            Vector row(d);
            bool nonzero = false;
            for (std::size_t c = 0; c < d; ++c) {
                row[c] = images[c][r];
                nonzero = nonzero || sgn(row[c]) != 0;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    std::vector<Vector> coeffs = rows.empty() ? Subspace::full(d).basis() : nullspace(Matrix::from_rows(rows, d));

    // The kernel is stable under the diagonal Cartan operators, so its projection onto each
    // coordinate weight space stays inside it.
    std::map<std::vector<Rational>, std::vector<Vector>> by_weight;
    for (auto& c : coeffs) {
        Vector v(dim);
        for (std::size_t i = 0; i < d; ++i)
            if (sgn(c[i]) != 0)
                for (std::size_t r = 0; r < dim; ++r) v[r] += c[i] * sub.basis()[i][r];
        std::map<std::vector<Rational>, Vector> parts;
        for (std::size_t r = 0; r < dim; ++r)
            if (sgn(v[r]) != 0) {
                auto [it, fresh] = parts.try_emplace(diag[r], Vector(dim));
                it->second[r] = v[r];
            }
        for (auto& [w, part] : parts) by_weight[w].push_back(std::move(part));
    }
    std::vector<WeightedVector> out;
    for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
        Subspace space = Subspace::span(it->second, dim);
        for (auto& v : space.basis()) out.push_back({FiniteWeight(it->first), v});
    }
    return out;
}

WeightMultiset decompose(const Subspace& sub, const WeightFrame& frame) {
    WeightMultiset out;
    for (auto& hv : highest_weight_vectors(sub, frame)) ++out[hv.weight];
    Integer total = 0;
    for (auto& [w, mult] : out) {
        try {
            total += weyl_dim(w) * static_cast<unsigned long>(mult);
        } catch (const std::exception&) {
            throw std::logic_error("decompose: highest weight " + to_string(w) + " is not dominant integral");
        }
    }
    if (total != static_cast<unsigned long>(sub.dimension()))
        throw std::logic_error("decompose: constituent dimensions sum to " + to_string(total) + " but the module has dimension " +
                               std::to_string(sub.dimension()));
    return out;
}

Matrix rep_uea(const UEAElement& u, const std::vector<Matrix>& ops) {
    if (ops.empty()) throw std::invalid_argument("rep_uea: no operators given");
    const std::size_t dim = ops[0].rows();
    Matrix out(dim, dim);
    std::map<std::pair<std::size_t, unsigned>, Matrix> powers;
    for (auto& [m, c] : u.terms()) {
        Matrix prod = Matrix::identity(dim);
        for (auto& [i, e] : m.runs()) {
            if (i >= ops.size()) throw std::invalid_argument("rep_uea: element uses a basis index with no operator");
            auto [it, fresh] = powers.try_emplace({i, e});
            if (fresh) it->second = ops[i].power(e);
            prod = prod * it->second;
        }
        out += prod * c;
    }
    return out;
}

Matrix symmetric_power_operator(const Matrix& x, unsigned k) {
    const std::size_t n = x.rows();
    std::vector<std::vector<unsigned>> basis;
    std::vector<unsigned> e(n);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            e[i] = left;
            basis.push_back(e);
            return;
        }
        for (unsigned a = left + 1; a-- > 0;) {
            e[i] = a;
            rec(i + 1, left - a);
        }
    };
    if (n == 0) throw std::invalid_argument("symmetric_power_operator: empty matrix");
    rec(0, k);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    Matrix out(basis.size(), basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
        for (std::size_t j = 0; j < n; ++j) {
            if (basis[t][j] == 0) continue;
            // x acts as the derivation x_j -> sum_i x(i, j) x_i.
            for (std::size_t i = 0; i < n; ++i) {
                if (sgn(x(i, j)) == 0) continue;
                auto target = basis[t];
                --target[j];
                ++target[i];
                out(index.at(target), t) += x(i, j) * basis[t][j];
            }
        }
    return out;
}

std::vector<Matrix> symmetric_power_ops(const std::vector<Matrix>& basis, unsigned k) {
    std::vector<Matrix> out;
    for (auto& b : basis) out.push_back(symmetric_power_operator(b, k));
    return out;
}

// ---------------------------------------------------------------------------
// Annihilator elements

NilpotentReport verify_nilpotent_annihilator(const MatrixAlgebra& alg, std::size_t p, std::size_t q, const Matrix& x,
                                             unsigned k, std::size_t cap) {
    if (x.rows() != alg.n() || x.cols() != alg.n()) throw std::invalid_argument("matrix size differs from the algebra");
    if (k == 0 || !x.power(k).is_zero()) throw std::invalid_argument("precondition x^k = 0 fails");
    NilpotentReport report;
    report.tensor_dim = checked_power(alg.n(), p + q, cap);
    report.nilpotency_order = k;
    report.bound = (k - 1) * static_cast<unsigned>(p + q) + 1;
    report.in_algebra = alg.contains(x);
    const Matrix op = tensor_operator(x, p, q);
    Matrix power = Matrix::identity(report.tensor_dim);
    for (unsigned e = 1; e <= report.bound; ++e) {
        power = power * op;
        if (!report.minimal_exponent && power.is_zero()) report.minimal_exponent = e;
    }
    report.bound_annihilates = power.is_zero();
    return report;
}

LocallyCentralReport locally_central_annihilator(const TensorRep& rep, std::size_t m, bool traceless) {
    const auto& alg = rep.algebra();
    TypeABasis small = type_a_basis(m, traceless);
    if (m > alg.n()) throw std::invalid_argument("locally_central_annihilator: subalgebra larger than the algebra");
    std::vector<std::size_t> pos;
    for (int label : ordered_labels(m)) pos.push_back(alg.position(label));
    std::vector<Matrix> ops;
    for (auto& b : small.matrices) {
        Matrix big(alg.n(), alg.n());
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) big(pos[r], pos[c]) = b(r, c);
        ops.push_back(rep.op(big));
    }
    LocallyCentralReport report{{}, {}, {}, LiePresentation::from_matrices(small.names, small.matrices), false, rep.dim()};
    const LiePresentation& p = report.presentation;

    UEAElement z;
    if (traceless) {
        z = casimir(p);
    } else {
        Matrix form(p.dim(), p.dim());
        for (std::size_t a = 0; a < p.dim(); ++a)
            for (std::size_t b = 0; b < p.dim(); ++b) form(a, b) = (small.matrices[a] * small.matrices[b]).trace();
        z = casimir_for_form(p, form);
    }

    report.constituents = decompose(Subspace::full(rep.dim()), gl_frame(rep, m));
    for (auto& [w, mult] : report.constituents) {
        Rational c;
        try {
            c = chi_value(z, type_a_context(m, traceless, w.coords()));
        } catch (const std::domain_error& e) {
            throw std::logic_error(std::string("Casimir is not scalar on a constituent: ") + e.what());
        }
        if (std::find(report.scalars.begin(), report.scalars.end(), c) == report.scalars.end()) report.scalars.push_back(c);
    }
    std::sort(report.scalars.begin(), report.scalars.end());
    report.element = UEAElement::scalar(1);
    for (auto& c : report.scalars) report.element = multiply(report.element, z - UEAElement::scalar(c), p);
    report.annihilates = rep_uea(report.element, ops).is_zero();
    return report;
}

// ---------------------------------------------------------------------------
// Trace invariants

Rational polarized_trace(const std::vector<Matrix>& ops, const std::vector<std::size_t>& args) {
    const std::size_t m = args.size();
    if (ops.empty()) throw std::invalid_argument("polarized_trace: no operators given");
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    Rational total = 0;
    Integer count = 0;
    do {
        Matrix prod = Matrix::identity(ops[0].rows());
        for (std::size_t k : order) prod = prod * ops.at(args[k]);
        total += prod.trace();
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return total / Rational(count);
}

bool trace_invariant_check(const LiePresentation& p, const std::vector<Matrix>& ops, unsigned m) {
    if (m < 1 || m > 4) throw std::invalid_argument("trace_invariant_check: degree must be between 1 and 4");
    if (ops.size() != p.dim()) throw std::invalid_argument("trace_invariant_check: operator count differs from dimension");
    const std::size_t d = p.dim();
    std::map<std::vector<std::size_t>, Rational> memo;
    auto form = [&](std::vector<std::size_t> args) {
        std::sort(args.begin(), args.end());
        auto it = memo.find(args);
        if (it != memo.end()) return it->second;
        Rational v = polarized_trace(ops, args);
        memo.emplace(args, v);
        return v;
    };
    std::vector<std::size_t> args(m);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t from) {
        if (slot == m) {
            for (std::size_t y = 0; y < d; ++y) {
                Rational total = 0;
                for (std::size_t k = 0; k < m; ++k)
                    for (auto& [idx, c] : p.bracket(y, args[k])) {
                        auto moved = args;
                        moved[k] = idx;
                        total += c * form(moved);
                    }
                if (sgn(total) != 0) return false;
            }
            return true;
        }
        for (std::size_t i = from; i < d; ++i) {
            args[slot] = i;
            if (!rec(slot + 1, i)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace tensorann

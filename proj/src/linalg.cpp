#include "tensorann/linalg.hpp"

#include <stdexcept>

namespace tensorann {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
    Matrix m(n, n);
    m(r, c) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m(*this);
    m += o;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (sgn(b) != 0) m(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix m(*this);
    for (auto& x : m.data_) x *= s;
    return m;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) != 0 && sgn(v[k]) != 0) out[i] += a * v[k];
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::power(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    Matrix out = identity(rows_);
    for (unsigned i = 0; i < k; ++i) out = out * (*this);
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

std::string to_string(const Matrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = col; c < m.cols(); ++c) swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix reduced(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs) {
    if (a.rows() != rhs.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + rhs.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, a.cols() + c) = rhs(r, c);
    }
    Echelon e = rref(std::move(aug));
    Matrix x(a.cols(), rhs.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < rhs.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, a.cols() + c);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

bool is_zero(const Vector& v) {
    for (auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Echelon e = rref(Matrix::from_rows(vectors, ambient));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(rows, ambient);
}

Subspace Subspace::kernel(const Matrix& m) { return span(nullspace(m), m.cols()); }

Subspace Subspace::image(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Vector v = m.column(c);
        if (!tensorann::is_zero(v)) cols.push_back(std::move(v));
    }
    return span(cols, m.rows());
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
    Vector rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Rational f = rest[pivots_[r]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (sgn(basis_[r][c]) != 0) rest[c] -= f * basis_[r][c];
    }
    return tensorann::is_zero(rest);
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector out(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) out[r] = v[pivots_[r]];
    return out;
}

bool Subspace::is_invariant(const Matrix& op) const {
    for (auto& b : basis_)
        if (!contains(op * b)) return false;
    return true;
}

Matrix Subspace::restrict(const Matrix& op) const {
    Matrix m(basis_.size(), basis_.size());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        Vector image = op * basis_[c];
        if (!contains(image)) throw std::invalid_argument("restrict: subspace is not invariant under the operator");
        Vector coords = coordinates(image);
        for (std::size_t r = 0; r < basis_.size(); ++r) m(r, c) = coords[r];
    }
    return m;
}

Subspace Subspace::annihilator() const {
    if (basis_.empty()) return full(ambient_);
    return kernel(Matrix::from_rows(basis_, ambient_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
    return sum(a.annihilator(), b.annihilator()).annihilator();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: dimension mismatch");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(all, a.ambient());
}

Subspace generated_submodule(const Subspace& seed, const std::vector<Matrix>& ops) {
    Subspace current = seed;
    std::vector<Vector> frontier = seed.basis();
    while (!frontier.empty()) {
        std::vector<Vector> fresh;
        std::vector<Vector> all = current.basis();
        for (auto& v : frontier)
            for (auto& op : ops) {
                Vector w = op * v;
                if (tensorann::is_zero(w) || current.contains(w)) continue;
                all.push_back(w);
                Subspace grown = Subspace::span(all, current.ambient());
                if (grown.dimension() > current.dimension()) {
                    current = std::move(grown);
                    fresh.push_back(std::move(w));
                } else {
                    all.pop_back();
                }
            }
        frontier = std::move(fresh);
    }
    return current;
}

std::string dump_basis(const Subspace& s) {
    std::string out;
    for (auto& v : s.basis()) out += join_rationals(v, " ") + "\n";
    return out;
}

}  // namespace tensorann

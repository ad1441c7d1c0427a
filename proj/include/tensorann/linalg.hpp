#pragma once

#include "tensorann/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tensorann {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix unit(std::size_t n, std::size_t r, std::size_t c);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Vector flatten() const { return data_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;
    Matrix& operator+=(const Matrix& o);
    Vector operator*(const Vector& v) const;
    bool operator==(const Matrix& o) const = default;

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    Matrix power(unsigned k) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::string to_string(const Matrix& m);

struct Echelon {
    Matrix reduced;                    // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// x with a x = b for each column b of rhs, or nullopt if some column is not in the column span.
std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs);
std::optional<Matrix> inverse(const Matrix& m);

bool is_zero(const Vector& v);

/// A linear subspace of Q^ambient, stored as a canonical reduced echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace kernel(const Matrix& m);
    static Subspace image(const Matrix& m);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const;
    /// Coordinates of v (assumed to lie in the subspace) with respect to basis().
    Vector coordinates(const Vector& v) const;
    bool is_invariant(const Matrix& op) const;
    /// The matrix of op restricted to this invariant subspace, in basis() coordinates.
    Matrix restrict(const Matrix& op) const;
    /// Orthogonal complement for the standard bilinear form.
    Subspace annihilator() const;

    bool operator==(const Subspace& o) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Smallest subspace containing `seed` and stable under every operator in `ops`.
Subspace generated_submodule(const Subspace& seed, const std::vector<Matrix>& ops);

/// One vector per line, space-separated p/q entries.
std::string dump_basis(const Subspace& s);

}  // namespace tensorann

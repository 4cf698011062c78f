#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrep/scalar.hpp"

namespace qrep {

// Dense matrix over a cyclotomic field. Basis tags name rows and columns.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix identity(FieldPtr field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    Scalar& operator()(int i, int j) { return at(i, j); }
    const Scalar& operator()(int i, int j) const { return at(i, j); }

    std::vector<std::string> row_basis;
    std::vector<std::string> col_basis;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix conj_transpose() const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_idempotent() const { return *this * *this == *this; }
    // Nonnegative rational integer entries.
    bool is_nonnegative_integer() const;

    int rank() const;
    std::optional<Matrix> inverse() const;
    // Columns form a basis of the null space.
    Matrix kernel() const;
    // Columns form a basis of the column space (a subset of this matrix's columns).
    Matrix column_basis() const;

    std::vector<std::vector<std::complex<double>>> to_complex() const;

private:
    FieldPtr field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// Returns c with a = c * b, if it exists. Zero b is proportional only to zero a (ratio 1).
std::optional<Scalar> is_proportional(const Matrix& a, const Matrix& b);

// Reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<Scalar>>& rows, int cols);

// Monic minimal polynomial, coefficients from the constant term up.
std::vector<Scalar> minimal_polynomial(const Matrix& m);

// Rank factorization M = E R of an idempotent, so that R E = 1.
std::pair<Matrix, Matrix> rank_factorization(const Matrix& m);

}  // namespace qrep

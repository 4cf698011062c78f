#include "qrep/matrix.hpp"

#include <stdexcept>

namespace qrep {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_)) {}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

static void require_shape(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("matrix shape mismatch in ") + what);
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "+");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_shape(rows_ == o.rows_ && cols_ == o.cols_, "-");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_shape(cols_ == o.rows_, "*");
    Matrix r(field_, rows_, o.cols_);
    r.row_basis = row_basis;
    r.col_basis = o.col_basis;
    std::vector<std::vector<int>> nz(o.rows_);
    for (int l = 0; l < o.rows_; ++l)
        for (int j = 0; j < o.cols_; ++j)
            if (!o.at(l, j).is_zero()) nz[l].push_back(j);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Scalar& a = at(i, l);
            if (a.is_zero()) continue;
            for (int j : nz[l]) r.at(i, j) += a * o.at(l, j);
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_)
        if (!x.is_zero()) x *= s;
    return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    require_shape(static_cast<int>(v.size()) == cols_, "apply");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    r.row_basis = col_basis;
    r.col_basis = row_basis;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::conj_transpose() const {
    Matrix r = transpose();
    for (auto& x : r.data_) x = x.conj();
    return r;
}

Scalar Matrix::trace() const {
    require_shape(rows_ == cols_, "trace");
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

bool Matrix::is_nonnegative_integer() const {
    for (const auto& x : data_) {
        if (!x.is_rational()) return false;
        mpq_class q = x.rational();
        if (q.get_den() != 1 || q < 0) return false;
    }
    return true;
}

std::vector<int> row_reduce(std::vector<std::vector<Scalar>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    const int n = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < n; ++c) {
        int p = -1;
        std::size_t best = 0;
        for (int i = r; i < n; ++i) {
            if (rows[i][c].is_zero()) continue;
            // Prefer the pivot with the fewest nonzero coefficients.
            std::size_t w = 0;
            w = static_cast<std::size_t>(rows[i][c].support());
            if (p < 0 || w < best) {
                p = i;
                best = w;
            }
        }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        Scalar inv = rows[r][c].inverse();
        for (int j = c; j < cols; ++j)
            if (!rows[r][j].is_zero()) rows[r][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (int j = c; j < cols; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

static std::vector<std::vector<Scalar>> to_rows(const Matrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

int Matrix::rank() const {
    auto rows = to_rows(*this);
    return static_cast<int>(row_reduce(rows, cols_).size());
}

std::optional<Matrix> Matrix::inverse() const {
    require_shape(rows_ == cols_, "inverse");
    const int n = rows_;
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n, Scalar::zero(field_)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = at(i, j);
        rows[i][n + i] = Scalar::one(field_);
    }
    auto piv = row_reduce(rows, 2 * n);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) return std::nullopt;
    Matrix r(field_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = rows[i][n + j];
    return r;
}

Matrix Matrix::kernel() const {
    auto rows = to_rows(*this);
    auto piv = row_reduce(rows, cols_);
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < cols_; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix k(field_, cols_, static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
        k.at(free[f], static_cast<int>(f)) = Scalar::one(field_);
        for (std::size_t r = 0; r < piv.size(); ++r) k.at(piv[r], static_cast<int>(f)) = -rows[r][free[f]];
    }
    return k;
}

Matrix Matrix::column_basis() const {
    auto rows = to_rows(*this);
    auto piv = row_reduce(rows, cols_);
    Matrix b(field_, rows_, static_cast<int>(piv.size()));
    for (std::size_t c = 0; c < piv.size(); ++c)
        for (int i = 0; i < rows_; ++i) b.at(i, static_cast<int>(c)) = at(i, piv[c]);
    return b;
}

std::vector<std::vector<std::complex<double>>> Matrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_complex();
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::optional<Scalar> is_proportional(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
    std::optional<Scalar> ratio;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            const Scalar& y = b.at(i, j);
            if (y.is_zero()) {
                if (!x.is_zero()) return std::nullopt;
                continue;
            }
            if (!ratio) ratio = x / y;
            else if (x != *ratio * y) return std::nullopt;
        }
    if (!ratio) return Scalar::one(a.field());
    return ratio;
}

// Rank factorization M = E R of an idempotent with R E = 1.
std::pair<Matrix, Matrix> rank_factorization(const Matrix& m) {
    const int n = m.rows();
    std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(m.cols()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    auto piv = row_reduce(rows, m.cols());
    const int r = static_cast<int>(piv.size());
    Matrix e(m.field(), n, r), rr(m.field(), r, m.cols());
    for (int c = 0; c < r; ++c) {
        for (int i = 0; i < n; ++i) e(i, c) = m(i, piv[c]);
        for (int j = 0; j < m.cols(); ++j) rr(c, j) = rows[c][j];
    }
    return {e, rr};
}


std::vector<Scalar> minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial needs a square matrix");
    const int n = m.rows();
    if (n == 0) return {Scalar::one(m.field())};
    std::vector<Matrix> powers{Matrix::identity(m.field(), n)};
    for (int d = 1; d <= n; ++d) {
        powers.push_back(powers.back() * m);
        Matrix v(m.field(), n * n, d + 1);
        for (int j = 0; j <= d; ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) v(r * n + c, j) = powers[j](r, c);
        Matrix ker = v.kernel();
        if (ker.cols() == 0) continue;
        std::vector<Scalar> poly(d + 1);
        const Scalar lead = ker(d, 0).inverse();
        for (int j = 0; j <= d; ++j) poly[j] = ker(j, 0) * lead;
        return poly;
    }
    throw std::logic_error("no polynomial relation found");
}

}  // namespace qrep

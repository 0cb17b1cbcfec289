#include "extclosure/linalg.hpp"

#include <algorithm>
#include <string>

#include "extclosure/errors.hpp"

namespace extclosure {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime_modulus(std::uint32_t p) {
    if (p >= kMaxModulus || !is_prime(p))
        throw InvalidArgument("modulus must be a prime below 65536, got " + std::to_string(p));
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { require_prime_modulus(p); }

Scalar PrimeField::inv(Scalar a) const {
    if (a == 0) throw InvalidArgument("division by zero in F_" + std::to_string(p_));
    long long t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
    Matrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t ncols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(p, rows.size(), ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw DimensionMismatch("ragged rows in Matrix::from_rows");
        std::size_t c = 0;
        for (long long v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_columns(std::uint32_t p, std::size_t rows, std::span<const Vector> columns) {
    Matrix m(p, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Matrix Matrix::column_vector(std::uint32_t p, const Vector& v) {
    Matrix m(p, v.size(), 1);
    m.set_column(0, v);
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r] % modulus();
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(modulus(), cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("block out of range");
    Matrix b(modulus(), nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("set_block out of range");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::columns(std::span<const std::size_t> indices) const {
    Matrix m(modulus(), rows_, indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, indices[k]);
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const Scalar* row = data_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(row[c]) * v[c];
        out[r] = static_cast<Scalar>(acc % modulus());
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
    Matrix m(a.modulus(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    Matrix m(a.modulus(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
    return *this;
}

Matrix Matrix::scaled(Scalar c) const {
    Matrix m = *this;
    for (auto& v : m.data_) v = field_.mul(v, c);
    return m;
}

void Matrix::add_scaled(const Matrix& o, Scalar c) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add_scaled shape mismatch");
    if (c == 0) return;
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], field_.mul(o.data_[i], c));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    const std::uint32_t p = a.modulus();
    Matrix out(p, a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t s = a(r, k);
            if (s == 0) continue;
            const Scalar* brow = b.data_.data() + k * b.cols();
            for (std::size_t c = 0; c < b.cols(); ++c) acc[c] += s * brow[c];
        }
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) = static_cast<Scalar>(acc[c] % p);
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.modulus() == b.modulus() && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Elimination

RowEchelon rref(const Matrix& m) {
    RowEchelon out{m, 0, {}};
    Matrix& a = out.reduced;
    const PrimeField& f = a.field();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && a(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t k = c; k < cols; ++k) std::swap(a(sel, k), a(pivot_row, k));
        const Scalar inv = f.inv(a(pivot_row, c));
        for (std::size_t k = c; k < cols; ++k) a(pivot_row, k) = f.mul(a(pivot_row, k), inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const Scalar factor = a(r, c);
            if (factor == 0) continue;
            const Scalar negf = f.neg(factor);
            for (std::size_t k = c; k < cols; ++k)
                if (a(pivot_row, k) != 0) a(r, k) = f.add(a(r, k), f.mul(negf, a(pivot_row, k)));
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.rank = pivot_row;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const RowEchelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
    Matrix k(m.modulus(), n, n - e.rank);
    std::size_t col = 0;
    const PrimeField& f = m.field();
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        k(free, col) = 1;
        for (std::size_t r = 0; r < e.rank; ++r) k(e.pivot_columns[r], col) = f.neg(e.reduced(r, free));
        ++col;
    }
    return k;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    auto x = solve(m, Matrix::column_vector(m.modulus(), b));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side rows mismatch");
    const RowEchelon e = rref(Matrix::hstack(m, b));
    const std::size_t n = m.cols();
    // A pivot landing in the augmented block means some column is inconsistent.
    for (std::size_t c : e.pivot_columns)
        if (c >= n) return std::nullopt;
    Matrix x(m.modulus(), n, b.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivot_columns[r], j) = e.reduced(r, n + j);
    return x;
}

Matrix column_space(const Matrix& m) {
    const RowEchelon e = rref(m.transpose());
    Matrix basis(m.modulus(), m.rows(), e.rank);
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, r) = e.reduced(r, i);
    return basis;
}

bool column_space_contains(const Matrix& space, const Matrix& vectors) {
    if (space.rows() != vectors.rows()) throw DimensionMismatch("containment: ambient dimension mismatch");
    if (vectors.cols() == 0) return true;
    return rank(Matrix::hstack(space, vectors)) == rank(space);
}

SubspaceRelation subspace_ops(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows()) throw DimensionMismatch("subspace_ops: ambient dimension mismatch");
    SubspaceRelation out;
    const Matrix both = Matrix::hstack(u, v);
    out.sum = column_space(both);
    // (a; b) in ker [U | V] gives U a = -V b, so U a spans the intersection.
    const Matrix k = kernel_basis(both);
    out.intersection = column_space(u * k.block(0, 0, u.cols(), k.cols()));
    const std::size_t ru = rank(u), rv = rank(v);
    out.first_in_second = out.sum.cols() == rv;
    out.second_in_first = out.sum.cols() == ru;
    return out;
}

QuotientSpace quotient_space(const Matrix& subspace, std::size_t ambient_dim) {
    if (subspace.rows() != ambient_dim) throw DimensionMismatch("quotient_space: ambient dimension mismatch");
    const std::uint32_t p = subspace.modulus();
    const RowEchelon e = rref(subspace.transpose());
    std::vector<long> pivot_row_of(ambient_dim, -1);
    for (std::size_t r = 0; r < e.rank; ++r) pivot_row_of[e.pivot_columns[r]] = static_cast<long>(r);

    QuotientSpace q;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (pivot_row_of[i] < 0) q.kept.push_back(i);
    const std::size_t qd = q.kept.size();
    q.projection = Matrix(p, qd, ambient_dim);
    q.section = Matrix(p, ambient_dim, qd);
    const PrimeField& f = subspace.field();
    for (std::size_t k = 0; k < qd; ++k) {
        q.section(q.kept[k], k) = 1;
        q.projection(k, q.kept[k]) = 1;
    }
    // A pivot coordinate e_i reduces to e_i - row_r, whose kept part is -row_r.
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        if (pivot_row_of[i] < 0) continue;
        const auto r = static_cast<std::size_t>(pivot_row_of[i]);
        for (std::size_t k = 0; k < qd; ++k) q.projection(k, i) = f.neg(e.reduced(r, q.kept[k]));
    }
    return q;
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t ambient) : field_(p), ambient_(ambient) {}

Vector EchelonBasis::reduce(Vector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c == 0) continue;
        const Scalar negc = field_.neg(c);
        const Vector& row = rows_[i];
        for (std::size_t k = 0; k < ambient_; ++k)
            if (row[k] != 0) v[k] = field_.add(v[k], field_.mul(negc, row[k]));
    }
    return v;
}

bool EchelonBasis::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("EchelonBasis: vector length mismatch");
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool EchelonBasis::insert(const Vector& v) {
    if (v.size() != ambient_) throw DimensionMismatch("EchelonBasis: vector length mismatch");
    Vector r = reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && r[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    const Scalar inv = field_.inv(r[piv]);
    for (auto& s : r) s = field_.mul(s, inv);
    // Keep existing rows reduced against the new pivot.
    for (auto& row : rows_) {
        const Scalar c = row[piv];
        if (c == 0) continue;
        const Scalar negc = field_.neg(c);
        for (std::size_t k = 0; k < ambient_; ++k)
            if (r[k] != 0) row[k] = field_.add(row[k], field_.mul(negc, r[k]));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

}  // namespace extclosure

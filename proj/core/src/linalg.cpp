#include <coxl2/error.hpp>
#include <coxl2/linalg.hpp>

namespace coxl2 {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Vector> Matrix::columns() const
{
    std::vector<Vector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::hcat(const Matrix& o) const
{
    if (o.rows_ != rows_ && o.cols_ && cols_) throw InvalidArgument("hcat row mismatch");
    std::size_t r = cols_ ? rows_ : o.rows_;
    Matrix m(r, cols_ + o.cols_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, cols_ + j) = o(i, j);
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols_ != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
    Vector r(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m)
{
    return rref(m).size();
}

Matrix kernel(const Matrix& a)
{
    Matrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, a.cols());
}

Matrix column_basis(const Matrix& a)
{
    Matrix m = a;
    auto pivots = rref(m);
    std::vector<Vector> cols;
    for (auto p : pivots) cols.push_back(a.column(p));
    return Matrix::from_columns(cols, a.rows());
}

Vector solve(const Matrix& a, const Vector& b)
{
    if (a.rows() != a.cols() || b.size() != a.rows()) throw InvalidArgument("solve needs a square system");
    std::size_t n = a.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug);
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw InvalidArgument("singular system");
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

Rational weighted_dot(const Vector& x, const Vector& y, const Vector& w)
{
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) s += w[i] * x[i] * y[i];
    return s;
}

Vector weighted_projection(const Matrix& basis, const Vector& w, const Vector& v)
{
    std::size_t k = basis.cols(), n = basis.rows();
    if (k == 0) return Vector(n, Rational(0));
    Matrix g(k, k);
    Vector rhs(k);
    auto cols = basis.columns();
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = weighted_dot(cols[i], v, w);
        for (std::size_t j = i; j < k; ++j) g(i, j) = g(j, i) = weighted_dot(cols[i], cols[j], w);
    }
    Vector c = solve(g, rhs);
    return basis * c;
}

Matrix weighted_complement(const Matrix& basis, const Vector& w)
{
    // x is orthogonal iff B^T diag(w) x = 0
    Matrix a(basis.cols(), basis.rows());
    for (std::size_t j = 0; j < basis.cols(); ++j)
        for (std::size_t i = 0; i < basis.rows(); ++i) a(j, i) = basis(i, j) * w[i];
    if (basis.cols() == 0) return Matrix::identity(basis.rows());
    return kernel(a);
}

Matrix intersect_spans(const Matrix& a, const Matrix& b)
{
    std::size_t n = a.rows() ? a.rows() : b.rows();
    if (a.cols() == 0 || b.cols() == 0) return Matrix(n, 0);
    Matrix ab = a.hcat(b);
    Matrix k = kernel(ab);
    std::vector<Vector> vecs;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Vector x(n, Rational(0));
        for (std::size_t i = 0; i < a.cols(); ++i)
            if (k(i, j) != 0)
                for (std::size_t r = 0; r < n; ++r) x[r] += k(i, j) * a(r, i);
        vecs.push_back(std::move(x));
    }
    return column_basis(Matrix::from_columns(vecs, n));
}

Matrix sum_spans(const Matrix& a, const Matrix& b)
{
    if (a.cols() == 0) return column_basis(b);
    if (b.cols() == 0) return column_basis(a);
    return column_basis(a.hcat(b));
}

bool span_contains(const Matrix& b, const Matrix& a)
{
    if (a.cols() == 0) return true;
    if (b.cols() == 0) return rank(a) == 0;
    return rank(b.hcat(a)) == rank(b);
}

std::size_t sparse_rank(std::vector<std::map<std::size_t, Rational>> rows)
{
    std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) {
                std::size_t col = lead->first;
                pivots.emplace(col, std::move(row));
                break;
            }
            Rational f = lead->second / it->second.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto [pos, inserted] = row.emplace(c, Rational(0));
                pos->second -= f * v;
                if (pos->second == 0) row.erase(pos);
            }
        }
    }
    return pivots.size();
}

}  // namespace coxl2

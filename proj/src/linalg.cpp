#include "qaff/linalg.hpp"

#include <algorithm>

namespace qaff {

SparseVec sparse_from_dense(const std::vector<Scalar>& d) {
    SparseVec v;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.emplace_back(i, d[i]);
    return v;
}

std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim) {
    std::vector<Scalar> d(dim);
    for (const auto& [i, x] : v) d.at(i) = x;
    return d;
}

SparseVec unit_vector(std::size_t i) { return {{i, Scalar(1L)}}; }

Scalar sparse_get(const SparseVec& v, std::size_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
    return (it != v.end() && it->first == i) ? it->second : Scalar();
}

SparseVec sparse_scale(const SparseVec& x, const Scalar& a) {
    if (a.is_zero()) return {};
    SparseVec r = x;
    for (auto& [i, v] : r) v *= a;
    return r;
}

SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y) {
    if (a.is_zero()) return x;
    SparseVec r;
    r.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.emplace_back(y[j].first, a * y[j].second);
            ++j;
        } else {
            Scalar s = x[i].second + a * y[j].second;
            if (!s.is_zero()) r.emplace_back(x[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

void Accumulator::add(std::size_t i, const Scalar& v) {
    if (v.is_zero()) return;
    if (!used_[i]) {
        used_[i] = 1;
        touched_.push_back(i);
        val_[i] = v;
    } else {
        val_[i] += v;
    }
}

void Accumulator::add_scaled(const SparseVec& v, const Scalar& a) {
    if (a.is_zero()) return;
    for (const auto& [i, x] : v) add(i, x * a);
}

SparseVec Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec r;
    for (std::size_t i : touched_) {
        if (!val_[i].is_zero()) r.emplace_back(i, std::move(val_[i]));
        val_[i] = Scalar();
        used_[i] = 0;
    }
    touched_.clear();
    return r;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Scalar(1L));
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) m.data_[i].emplace_back(i, d[i]);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
    Matrix m(rows.size(), cols);
    m.data_ = std::move(rows);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j]) m.data_.at(i).emplace_back(j, v);
    return m;
}

Scalar Matrix::get(std::size_t i, std::size_t j) const { return sparse_get(data_.at(i), j); }

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != r.end() && it->first == j) {
        if (v.is_zero())
            r.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    set(i, j, get(i, j) + v);
}

std::size_t Matrix::nonzeros() const {
    std::size_t c = 0;
    for (const auto& r : data_) c += r.size();
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[j].emplace_back(i, v);
    return t;
}

SparseVec Matrix::apply(const SparseVec& v) const {
    SparseVec r;
    if (v.empty()) return r;
    for (std::size_t i = 0; i < rows_; ++i) {
        const SparseVec& row = data_[i];
        Scalar acc;
        std::size_t a = 0, b = 0;
        while (a < row.size() && b < v.size()) {
            if (row[a].first < v[b].first)
                ++a;
            else if (v[b].first < row[a].first)
                ++b;
            else
                acc += row[a++].second * v[b++].second;
        }
        if (!acc.is_zero()) r.emplace_back(i, std::move(acc));
    }
    return r;
}

SparseVec Matrix::apply_row(const SparseVec& v) const {
    Accumulator acc(cols_);
    for (const auto& [i, x] : v) acc.add_scaled(data_.at(i), x);
    return acc.take();
}

SparseVec Matrix::column(std::size_t j) const {
    SparseVec c;
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar v = get(i, j);
        if (!v.is_zero()) c.emplace_back(i, std::move(v));
    }
    return c;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in addition");
    for (std::size_t i = 0; i < rows_; ++i) data_[i] = sparse_axpy(data_[i], Scalar(1L), o.data_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in subtraction");
    for (std::size_t i = 0; i < rows_; ++i) data_[i] = sparse_axpy(data_[i], Scalar(-1L), o.data_[i]);
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        for (auto& r : data_) r.clear();
        return *this;
    }
    for (auto& r : data_)
        for (auto& [j, v] : r) v *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    Accumulator acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (const auto& [k, v] : a.data_[i]) acc.add_scaled(b.data_[k], v);
        r.data_[i] = acc.take();
    }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.empty(); });
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        if (!data_[i].empty()) return std::make_pair(i, data_[i].front().first);
    return std::nullopt;
}

bool Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i])
            if (j != i) return false;
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < b.rows(); ++k) {
            SparseVec& out = r.row(i * b.rows() + k);
            for (const auto& [j, x] : a.row(i))
                for (const auto& [l, y] : b.row(k)) out.emplace_back(j * b.cols() + l, x * y);
        }
    return r;
}

Matrix specialize_matrix(const Matrix& m, const Rational& t0) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) {
            Rational x = specialize(v, t0);
            if (x != 0) r.row(i).emplace_back(j, Scalar(x));
        }
    return r;
}

// ---------------------------------------------------------------------------

SparseVec Echelon::reduce(const SparseVec& v) const {
    bool hit = false;
    for (const auto& [c, x] : v)
        if (pivot_row_[c] >= 0) {
            hit = true;
            break;
        }
    if (!hit) return v;
    Accumulator acc(dim_);
    acc.add_scaled(v, Scalar(1L));
    for (const auto& [c, x] : v) {
        long r = pivot_row_[c];
        if (r >= 0) acc.add_scaled(rows_[static_cast<std::size_t>(r)], -x);
    }
    return acc.take();
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    std::size_t p = r.front().first;
    Scalar inv = r.front().second.inverse();
    for (auto& [j, x] : r) x *= inv;
    for (auto& row : rows_) {
        Scalar c = sparse_get(row, p);
        if (!c.is_zero()) row = sparse_axpy(row, -c, r);
    }
    pivot_row_[p] = static_cast<long>(rows_.size());
    pivot_of_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> p = pivot_of_;
    std::sort(p.begin(), p.end());
    return p;
}

std::vector<SparseVec> Echelon::basis() const {
    std::vector<SparseVec> b;
    for (std::size_t p : pivots()) b.push_back(rows_[static_cast<std::size_t>(pivot_row_[p])]);
    return b;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t c = 0; c < dim_; ++c)
        if (pivot_row_[c] < 0) f.push_back(c);
    return f;
}

std::vector<Scalar> Echelon::coordinates(const SparseVec& v) const {
    std::vector<std::size_t> p = pivots();
    std::vector<Scalar> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = sparse_get(v, p[k]);
    return out;
}

bool operator==(const Echelon& a, const Echelon& b) {
    return a.dim_ == b.dim_ && a.rank() == b.rank() && a.basis() == b.basis();
}

Echelon span_of(std::size_t dim, const std::vector<SparseVec>& vs) {
    Echelon e(dim);
    for (const auto& v : vs) e.insert(v);
    return e;
}

std::size_t rank(const Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.rank();
}

std::vector<SparseVec> kernel(const Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    std::vector<SparseVec> rows = e.basis();
    std::vector<std::size_t> piv = e.pivots();
    std::vector<SparseVec> out;
    for (std::size_t f : e.free_columns()) {
        SparseVec v;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Scalar c = sparse_get(rows[k], f);
            if (!c.is_zero()) v.emplace_back(piv[k], -c);
        }
        v.emplace_back(f, Scalar(1L));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> intersect(const Echelon& a, const Echelon& b) {
    // x = sum_i c_i a_i lies in span(b) iff its reduction mod b vanishes.
    std::vector<SparseVec> ab = a.basis();
    std::vector<SparseVec> reduced;
    for (const auto& v : ab) reduced.push_back(b.reduce(v));
    Matrix m = Matrix::from_columns(a.dim(), reduced);
    std::vector<SparseVec> out;
    for (const auto& c : kernel(m)) {
        Accumulator acc(a.dim());
        for (const auto& [i, x] : c) acc.add_scaled(ab[i], x);
        out.push_back(acc.take());
    }
    return out;
}

Matrix inverse(const Matrix& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw UsageError("inverse of a non-square matrix");
    // Row reduce [M | I].
    Echelon e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec r = m.row(i);
        r.emplace_back(n + i, Scalar(1L));
        e.insert(r);
    }
    std::vector<SparseVec> b = e.basis();
    std::vector<std::size_t> p = e.pivots();
    if (b.size() != n || p.back() >= n) throw MathError("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [j, x] : b[k])
            if (j >= n) inv.row(p[k]).emplace_back(j - n, x);
    return inv;
}

}  // namespace qaff

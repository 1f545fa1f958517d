#include "ncfrob/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ncfrob {

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    auto valid_char = [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+';
    };
    if (s.empty() || !std::all_of(s.begin(), s.end(), valid_char)) {
        throw InputError("invalid rational literal '" + s + "'");
    }
    if (s.front() == '+') s.erase(0, 1);
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.find_first_not_of("0123456789", slash + 1) != std::string::npos) {
        throw InputError("invalid rational literal '" + s + "'");
    }
    Scalar value;
    if (value.set_str(s, 10) != 0) {
        throw InputError("invalid rational literal '" + s + "'");
    }
    if (value.get_den() == 0) {
        throw InputError("zero denominator in '" + s + "'");
    }
    value.canonicalize();
    return value;
}

// ---------------------------------------------------------------- Vector

Vector Vector::unit_vector(std::size_t dim, std::size_t i, const Scalar& value) {
    Vector v(dim);
    v.set(i, value);
    return v;
}

Vector Vector::from_dense(std::span<const Scalar> values) {
    Vector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
    return v;
}

void Vector::check_index(std::size_t i) const {
    if (i >= dim_) {
        throw InputError("vector index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(dim_));
    }
}

Scalar Vector::operator[](std::size_t i) const {
    check_index(i);
    auto it = entries_.find(i);
    return it == entries_.end() ? Scalar(0) : it->second;
}

void Vector::set(std::size_t i, const Scalar& value) {
    check_index(i);
    if (value == 0) {
        entries_.erase(i);
    } else {
        Scalar& slot = entries_[i];
        slot = value;
        slot.canonicalize();
    }
}

void Vector::add(std::size_t i, const Scalar& value) {
    check_index(i);
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(i, value);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += value;
        if (it->second == 0) entries_.erase(it);
    }
}

void Vector::add_scaled(const Vector& other, const Scalar& factor) {
    if (other.dim_ != dim_) throw InputError("vector dimension mismatch");
    if (factor == 0) return;
    for (const auto& [i, v] : other.entries_) add(i, v * factor);
}

Vector& Vector::operator+=(const Vector& other) {
    add_scaled(other, 1);
    return *this;
}

Vector& Vector::operator-=(const Vector& other) {
    add_scaled(other, -1);
    return *this;
}

Vector& Vector::operator*=(const Scalar& factor) {
    if (factor == 0) {
        entries_.clear();
    } else {
        for (auto& [i, v] : entries_) v *= factor;
    }
    return *this;
}

Scalar dot(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw InputError("vector dimension mismatch in dot product");
    Scalar sum = 0;
    const Vector& small = a.nnz() <= b.nnz() ? a : b;
    const Vector& large = a.nnz() <= b.nnz() ? b : a;
    for (const auto& [i, v] : small) sum += v * large[i];
    return sum;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols, Vector(rows)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<Vector> columns) {
    for (const auto& c : columns) {
        if (c.dim() != rows) throw InputError("column dimension does not match row count");
    }
    Matrix m;
    m.rows_ = rows;
    m.columns_ = std::move(columns);
    return m;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nnz();
    return n;
}

bool Matrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Vector& c) { return c.is_zero(); });
}

Scalar Matrix::operator()(std::size_t r, std::size_t c) const { return column(c)[r]; }

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    if (c >= cols()) throw InputError("matrix column index out of range");
    columns_[c].set(r, value);
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& value) {
    if (c >= cols()) throw InputError("matrix column index out of range");
    columns_[c].add(r, value);
}

const Vector& Matrix::column(std::size_t c) const {
    if (c >= cols()) throw InputError("matrix column index out of range");
    return columns_[c];
}

void Matrix::set_column(std::size_t c, Vector v) {
    if (c >= cols()) throw InputError("matrix column index out of range");
    if (v.dim() != rows_) throw InputError("column dimension does not match row count");
    columns_[c] = std::move(v);
}

Vector Matrix::row(std::size_t r) const {
    if (r >= rows_) throw InputError("matrix row index out of range");
    Vector out(cols());
    for (std::size_t c = 0; c < cols(); ++c) out.set(c, columns_[c][r]);
    return out;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out(rows_, Vector(cols()));
    for (std::size_t c = 0; c < cols(); ++c) {
        for (const auto& [r, v] : columns_[c]) out[r].set(c, v);
    }
    return out;
}

Matrix Matrix::transpose() const {
    return from_columns(cols(), row_vectors());
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.dim()) throw InputError("matrix-vector dimension mismatch");
    Vector out(a.rows());
    for (const auto& [c, v] : x) out.add_scaled(a.columns_[c], v);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix-matrix dimension mismatch");
    std::vector<Vector> cols;
    cols.reserve(b.cols());
    for (const auto& bc : b.columns_) cols.push_back(a * bc);
    return Matrix::from_columns(a.rows(), std::move(cols));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch");
    Matrix out = a;
    for (std::size_t c = 0; c < a.cols(); ++c) out.columns_[c] += b.columns_[c];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix shape mismatch");
    Matrix out = a;
    for (std::size_t c = 0; c < a.cols(); ++c) out.columns_[c] -= b.columns_[c];
    return out;
}

// ----------------------------------------------------------- TensorIndex

TensorIndex::TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (auto d : dims_) size_ *= d;
}

std::size_t TensorIndex::flatten(std::span<const std::size_t> multi) const {
    if (multi.size() != dims_.size()) throw InputError("multi-index has wrong arity");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (multi[k] >= dims_[k]) throw InputError("multi-index component out of range");
        flat = flat * dims_[k] + multi[k];
    }
    return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
    if (flat >= size_) throw InputError("flat tensor index out of range");
    std::vector<std::size_t> multi(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        multi[k] = flat % dims_[k];
        flat /= dims_[k];
    }
    return multi;
}

Vector apply_to_factor(const Vector& t, std::span<const std::size_t> dims, std::size_t factor,
                       const Matrix& map) {
    if (factor >= dims.size()) throw InputError("apply_to_factor: factor out of range");
    if (map.cols() != dims[factor]) throw InputError("apply_to_factor: map does not fit factor");
    std::size_t total = 1;
    std::size_t stride = 1;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        total *= dims[k];
        if (k > factor) stride *= dims[k];
    }
    if (t.dim() != total) throw InputError("apply_to_factor: tensor dimension mismatch");
    const std::size_t out_total = total / dims[factor] * map.rows();
    Vector out(out_total);
    for (const auto& [idx, v] : t) {
        const std::size_t inner = idx % stride;
        const std::size_t mid = (idx / stride) % dims[factor];
        const std::size_t outer = idx / (stride * dims[factor]);
        for (const auto& [r, w] : map.column(mid)) {
            out.add((outer * map.rows() + r) * stride + inner, v * w);
        }
    }
    return out;
}

// ------------------------------------------------------------ RowReducer

RowReducer::RowReducer(std::size_t unknowns) : unknowns_(unknowns) {}

void RowReducer::add_equation(const Vector& coefficients, const Scalar& rhs) {
    if (coefficients.dim() != unknowns_) throw InputError("equation has wrong number of unknowns");
    Row row(coefficients.begin(), coefficients.end());
    if (rhs != 0) row[unknowns_] = rhs;

    // Existing pivot rows are zero in every other pivot column, so
    // subtracting them never re-introduces an already-cleared pivot.
    std::vector<std::size_t> hits;
    for (const auto& [c, v] : row) {
        if (pivots_.contains(c)) hits.push_back(c);
    }
    for (auto c : hits) {
        const Scalar factor = row[c];
        for (const auto& [pc, pv] : pivots_.at(c)) {
            auto [it, inserted] = row.try_emplace(pc, -factor * pv);
            if (!inserted) {
                it->second -= factor * pv;
                if (it->second == 0) row.erase(it);
            }
        }
    }
    if (row.empty()) return;

    const auto lead = row.begin()->first;
    const Scalar inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    if (lead == unknowns_) consistent_ = false;

    for (auto& [pc, prow] : pivots_) {
        auto it = prow.find(lead);
        if (it == prow.end()) continue;
        const Scalar factor = it->second;
        for (const auto& [c, v] : row) {
            auto [jt, inserted] = prow.try_emplace(c, -factor * v);
            if (!inserted) {
                jt->second -= factor * v;
                if (jt->second == 0) prow.erase(jt);
            }
        }
    }
    pivots_.emplace(lead, std::move(row));
}

std::size_t RowReducer::rank() const {
    return pivots_.size() - (pivots_.contains(unknowns_) ? 1 : 0);
}

std::optional<Vector> RowReducer::particular_solution() const {
    if (!consistent_) return std::nullopt;
    Vector x(unknowns_);
    for (const auto& [pc, prow] : pivots_) {
        auto it = prow.find(unknowns_);
        if (it != prow.end()) x.set(pc, it->second);
    }
    return x;
}

std::vector<Vector> RowReducer::kernel() const {
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < unknowns_; ++f) {
        if (pivots_.contains(f)) continue;
        Vector v(unknowns_);
        v.set(f, 1);
        for (const auto& [pc, prow] : pivots_) {
            if (pc >= unknowns_) continue;
            auto it = prow.find(f);
            if (it != prow.end()) v.set(pc, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ----------------------------------------------------------- front ends

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
    if (a.rows() != b.dim()) throw InputError("solve_linear: matrix rows != rhs dimension");
    RowReducer reducer(a.cols());
    auto rows = a.row_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r) reducer.add_equation(rows[r], b[r]);
    return reducer.particular_solution();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    RowReducer reducer(a.cols());
    for (const auto& row : a.row_vectors()) reducer.add_equation(row);
    return reducer.kernel();
}

std::size_t rank(const Matrix& a) {
    RowReducer reducer(a.cols());
    for (const auto& row : a.row_vectors()) reducer.add_equation(row);
    return reducer.rank();
}

std::size_t rank(std::span<const Vector> vectors) {
    if (vectors.empty()) return 0;
    RowReducer reducer(vectors.front().dim());
    for (const auto& v : vectors) reducer.add_equation(v);
    return reducer.rank();
}

bool is_invertible(const Matrix& a) {
    if (a.rows() != a.cols()) throw InputError("is_invertible: matrix is not square");
    return rank(a) == a.rows();
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw InputError("inverse: matrix is not square");
    const std::size_t n = a.rows();
    // RREF of [A | I]: A is invertible iff every pivot lands in the left
    // block, and the right block is then A^{-1}. The kernel of [A | I] is
    // spanned by (-A^{-1} e_j, e_j), read off column by column.
    RowReducer reducer(2 * n);
    auto rows = a.row_vectors();
    for (std::size_t r = 0; r < n; ++r) {
        Vector augmented(2 * n);
        for (const auto& [c, v] : rows[r]) augmented.set(c, v);
        augmented.set(n + r, 1);
        reducer.add_equation(augmented);
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!reducer.pivot_at(c)) return std::nullopt;
    }
    auto kernel = reducer.kernel();
    if (kernel.size() != n) throw InternalError("inverse: unexpected kernel size");
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [idx, v] : kernel[j]) {
            if (idx < n) inv.set(idx, j, -v);
        }
    }
    return inv;
}

}  // namespace ncfrob

#include "hopfcyc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopfcyc {

namespace {

void check_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("matrix operation across fields " + a.name() + " and " + b.name());
}

// Sorts by column, sums duplicates, drops zeros.
void canonicalize(Matrix::Row& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.size();) {
    std::size_t j = i + 1;
    Scalar acc = row[i].value;
    while (j < row.size() && row[j].col == row[i].col) acc += row[j++].value;
    if (!acc.is_zero()) row[out++] = {row[i].col, std::move(acc)};
    i = j;
  }
  row.resize(out);
}

Matrix::Row merge(const Matrix::Row& a, const Matrix::Row& b, bool subtract) {
  Matrix::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, subtract ? -b[j].value : b[j].value});
      ++j;
    } else {
      Scalar v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  Scalar one = field.one();
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, one});
  return m;
}

Matrix Matrix::column(Field field, std::span<const Scalar> values) {
  Matrix m(field, values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) m.rows_[i].push_back({0, values[i]});
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  const Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->value;
  return field_.zero();
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (j >= cols_) throw std::out_of_range("matrix column index");
  Row& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->value = v;
  } else if (!v.is_zero()) {
    r.insert(it, {j, v});
  }
}

void Matrix::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.is_zero()) return;
  set(i, j, at(i, j) + v);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Scalar& coef) {
  if (coef.is_zero()) return;
  if (r0 + block.rows() > rows() || c0 + block.cols() > cols_) throw std::out_of_range("add_block");
  for (std::size_t i = 0; i < block.rows(); ++i) {
    if (block.rows_[i].empty()) continue;
    Row shifted;
    shifted.reserve(block.rows_[i].size());
    for (const auto& e : block.rows_[i]) shifted.push_back({e.col + c0, e.value * coef});
    rows_[r0 + i] = merge(rows_[r0 + i], shifted, false);
  }
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

bool Matrix::is_identity() const {
  if (rows() != cols_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != 1 || rows_[i][0].col != i || !rows_[i][0].value.is_one()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) t.rows_[e.col].push_back({i, e.value});
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) m.rows_[i] = rows_.at(idx[i]);
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  std::vector<std::ptrdiff_t> where(cols_, -1);
  for (std::size_t j = 0; j < idx.size(); ++j) where.at(idx[j]) = static_cast<std::ptrdiff_t>(j);
  Matrix m(field_, rows(), idx.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i])
      if (where[e.col] >= 0) m.rows_[i].push_back({static_cast<std::size_t>(where[e.col]), e.value});
    canonicalize(m.rows_[i]);
  }
  return m;
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
  Matrix m(field_, rows(), end - begin);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i])
      if (e.col >= begin && e.col < end) m.rows_[i].push_back({e.col - begin, e.value});
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_field(field_, o.field_);
  if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!o.rows_[i].empty()) rows_[i] = merge(rows_[i], o.rows_[i], false);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_field(field_, o.field_);
  if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!o.rows_[i].empty()) rows_[i] = merge(rows_[i], o.rows_[i], true);
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.value *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& r : m.rows_)
    for (auto& e : r) e.value = -e.value;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(field_, o.field_);
  if (cols_ != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(field_, rows(), o.cols_);
  // Dense accumulator with a touched list per output row.
  std::vector<Scalar> acc(o.cols_);
  std::vector<char> used(o.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    touched.clear();
    for (const auto& a : rows_[i]) {
      for (const auto& b : o.rows_[a.col]) {
        if (!used[b.col]) {
          used[b.col] = 1;
          touched.push_back(b.col);
          acc[b.col] = a.value * b.value;
        } else {
          acc[b.col] += a.value * b.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    Row& r = out.rows_[i];
    for (std::size_t c : touched) {
      used[c] = 0;
      if (!acc[c].is_zero()) r.push_back({c, std::move(acc[c])});
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows() != o.rows() || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& a = rows_[i];
    const Row& b = o.rows_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].col != b[k].col || !(a[k].value == b[k].value)) return false;
  }
  return true;
}

Matrix Matrix::hstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(blocks[0].field_, blocks[0].rows(), cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    check_field(m.field_, b.field_);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& e : b.rows_[i]) m.rows_[i].push_back({e.col + off, e.value});
    off += b.cols();
  }
  return m;
}

Matrix Matrix::vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks[0].cols()) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(blocks[0].field_, rows, blocks[0].cols());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    check_field(m.field_, b.field_);
    for (std::size_t i = 0; i < b.rows(); ++i) m.rows_[off + i] = b.rows_[i];
    off += b.rows();
  }
  return m;
}

MatrixBuilder::MatrixBuilder(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), pending_(rows) {}

void MatrixBuilder::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("MatrixBuilder index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!v.is_zero()) pending_[i].push_back({j, v});
}

void MatrixBuilder::add_block(std::size_t r0, std::size_t c0, const Matrix& block, const Scalar& coef) {
  if (coef.is_zero()) return;
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (const auto& e : block.row(i)) add(r0 + i, c0 + e.col, e.value * coef);
}

Matrix MatrixBuilder::build() && {
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    canonicalize(pending_[i]);
    m.rows_[i] = std::move(pending_[i]);
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  MatrixBuilder mb(a.field(), out.rows(), out.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& ea : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& eb : b.row(k))
          mb.add(i * b.rows() + k, ea.col * b.cols() + eb.col, ea.value * eb.value);
  return std::move(mb).build();
}

Matrix kron_all(std::span<const Matrix> factors) {
  if (factors.empty()) throw std::invalid_argument("kron_all of nothing");
  Matrix m = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i]);
  return m;
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace hopfcyc

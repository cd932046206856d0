// Exact row reduction. Rows are fed one at a time and reduced against the
// pivots found so far (pivot = leading column of the reduced row, rows taken in
// index order). Over F_p the arithmetic is on raw residues; over Q rows are
// kept as primitive integer vectors and combined fraction-free.

#include "hopfcyc/matrix.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace hopfcyc {

namespace {

using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;

struct ModEchelon {
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;

  std::uint64_t p;
  std::size_t cols;
  std::vector<std::ptrdiff_t> pivot_of;  // column -> index into rows, or -1
  std::vector<Row> rows;                 // leading entry 1

  std::vector<std::uint64_t> acc;
  std::vector<char> live;

  ModEchelon(std::uint64_t p_, std::size_t cols_) : p(p_), cols(cols_), pivot_of(cols_, -1), acc(cols_, 0), live(cols_, 0) {}

  void insert(const Matrix::Row& in) {
    MinHeap heap;
    std::vector<std::size_t> support;
    for (const auto& e : in) {
      acc[e.col] = e.value.residue_value();
      live[e.col] = 1;
      support.push_back(e.col);
      heap.push(e.col);
    }
    while (!heap.empty()) {
      std::size_t c = heap.top();
      heap.pop();
      if (!heap.empty() && heap.top() == c) continue;
      if (acc[c] == 0) continue;
      std::ptrdiff_t r = pivot_of[c];
      if (r < 0) {
        Row out;
        std::uint64_t inv = pow_mod(acc[c], p - 2, p);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        for (std::size_t j : support)
          if (j >= c && acc[j] != 0) out.push_back({j, acc[j] * inv % p});
        pivot_of[c] = static_cast<std::ptrdiff_t>(rows.size());
        rows.push_back(std::move(out));
        break;
      }
      std::uint64_t f = p - acc[c];
      for (const auto& [j, v] : rows[r]) {
        if (!live[j]) {
          live[j] = 1;
          acc[j] = 0;
          support.push_back(j);
        }
        bool was_zero = acc[j] == 0;
        acc[j] = (acc[j] + f * v) % p;
        if (was_zero && j != c) heap.push(j);
      }
    }
    for (std::size_t j : support) {
      acc[j] = 0;
      live[j] = 0;
    }
  }
};

struct IntEchelon {
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;

  std::size_t cols;
  std::vector<std::ptrdiff_t> pivot_of;
  std::vector<Row> rows;  // primitive, leading entry positive

  std::vector<mpz_class> acc;
  std::vector<char> live;

  explicit IntEchelon(std::size_t cols_) : cols(cols_), pivot_of(cols_, -1), acc(cols_), live(cols_, 0) {}

  void insert(const Matrix::Row& in) {
    if (in.empty()) return;
    mpz_class den = 1;
    for (const auto& e : in) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.value.rational_value().get_den_mpz_t());
    MinHeap heap;
    std::vector<std::size_t> support;
    for (const auto& e : in) {
      const mpq_class& q = e.value.rational_value();
      acc[e.col] = q.get_num() * (den / q.get_den());
      live[e.col] = 1;
      support.push_back(e.col);
      heap.push(e.col);
    }
    mpz_class g, fa, fp;
    while (!heap.empty()) {
      std::size_t c = heap.top();
      heap.pop();
      if (!heap.empty() && heap.top() == c) continue;
      if (sgn(acc[c]) == 0) continue;
      std::ptrdiff_t r = pivot_of[c];
      if (r < 0) {
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        Row out;
        mpz_class content = 0;
        for (std::size_t j : support)
          if (j >= c && sgn(acc[j]) != 0) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), acc[j].get_mpz_t());
            out.push_back({j, acc[j]});
          }
        if (sgn(out.front().second) < 0) content = -content;
        for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
        pivot_of[c] = static_cast<std::ptrdiff_t>(rows.size());
        rows.push_back(std::move(out));
        break;
      }
      const Row& prow = rows[r];
      const mpz_class& lead = prow.front().second;
      mpz_gcd(g.get_mpz_t(), acc[c].get_mpz_t(), lead.get_mpz_t());
      mpz_divexact(fa.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(fp.get_mpz_t(), acc[c].get_mpz_t(), g.get_mpz_t());
      // acc <- fa*acc - fp*prow, which kills column c.
      if (fa != 1)
        for (std::size_t j : support)
          if (j > c && sgn(acc[j]) != 0) acc[j] *= fa;
      acc[c] = 0;
      for (std::size_t k = 1; k < prow.size(); ++k) {
        std::size_t j = prow[k].first;
        if (!live[j]) {
          live[j] = 1;
          acc[j] = 0;
          support.push_back(j);
        }
        bool was_zero = sgn(acc[j]) == 0;
        mpz_submul(acc[j].get_mpz_t(), fp.get_mpz_t(), prow[k].second.get_mpz_t());
        if (was_zero) heap.push(j);
      }
    }
    for (std::size_t j : support) {
      acc[j] = 0;
      live[j] = 0;
    }
  }
};

// Echelon rows (leading 1) keyed by pivot, in increasing pivot order.
struct Echelon {
  std::vector<std::size_t> pivots;
  std::vector<Matrix::Row> rows;
};

Echelon echelon(const Matrix& m) {
  Echelon out;
  Field f = m.field();
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (pivot col, row idx)
  if (f.is_rational()) {
    IntEchelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    for (std::size_t i = 0; i < e.rows.size(); ++i) order.push_back({e.rows[i].front().first, i});
    std::sort(order.begin(), order.end());
    for (auto [c, i] : order) {
      const auto& r = e.rows[i];
      Matrix::Row row;
      row.reserve(r.size());
      for (const auto& [j, v] : r) row.push_back({j, Scalar::rational(mpq_class(v, r.front().second))});
      out.pivots.push_back(c);
      out.rows.push_back(std::move(row));
    }
  } else {
    std::uint64_t p = f.characteristic();
    ModEchelon e(p, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    for (std::size_t i = 0; i < e.rows.size(); ++i) order.push_back({e.rows[i].front().first, i});
    std::sort(order.begin(), order.end());
    for (auto [c, i] : order) {
      Matrix::Row row;
      row.reserve(e.rows[i].size());
      for (const auto& [j, v] : e.rows[i]) row.push_back({j, Scalar::residue(v, p)});
      out.pivots.push_back(c);
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// Clears every pivot column above and below each pivot.
void back_substitute(Echelon& e, std::size_t cols, const Field& f) {
  std::vector<std::ptrdiff_t> where(cols, -1);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) where[e.pivots[i]] = static_cast<std::ptrdiff_t>(i);
  std::vector<Scalar> acc(cols, f.zero());
  std::vector<char> live(cols, 0);
  for (std::size_t ii = e.rows.size(); ii-- > 0;) {
    Matrix::Row& row = e.rows[ii];
    bool needs = false;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (where[row[k].col] >= 0) needs = true;
    if (!needs) continue;
    std::vector<std::size_t> support;
    for (const auto& en : row) {
      acc[en.col] = en.value;
      live[en.col] = 1;
      support.push_back(en.col);
    }
    // Rows below ii are already reduced, so one pass in increasing order works.
    for (std::size_t k = 1; k < row.size(); ++k) {
      std::size_t c = row[k].col;
      std::ptrdiff_t r = where[c];
      if (r < 0 || acc[c].is_zero()) continue;
      Scalar factor = acc[c];
      for (const auto& en : e.rows[r]) {
        if (!live[en.col]) {
          live[en.col] = 1;
          acc[en.col] = f.zero();
          support.push_back(en.col);
        }
        acc[en.col] -= factor * en.value;
      }
    }
    std::sort(support.begin(), support.end());
    Matrix::Row out;
    for (std::size_t j : support) {
      if (!acc[j].is_zero()) out.push_back({j, acc[j]});
      acc[j] = f.zero();
      live[j] = 0;
    }
    row = std::move(out);
  }
}

}  // namespace

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) return echelon(m.transpose()).pivots.size();
  return echelon(m).pivots.size();
}

std::size_t solve_dim_hom(const Matrix& m) { return m.cols() - rank(m); }

RowEchelon row_echelon(const Matrix& m) {
  Echelon e = echelon(m);
  back_substitute(e, m.cols(), m.field());
  MatrixBuilder mb(m.field(), e.rows.size(), m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (const auto& en : e.rows[i]) mb.add(i, en.col, en.value);
  return {std::move(mb).build(), e.pivots};
}

KernelBasis kernel_basis(const Matrix& m) {
  Field f = m.field();
  Echelon e = echelon(m);
  back_substitute(e, m.cols(), f);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : e.pivots) is_pivot[c] = 1;
  KernelBasis kb;
  std::vector<std::ptrdiff_t> free_index(m.cols(), -1);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) {
      free_index[c] = static_cast<std::ptrdiff_t>(kb.free_cols.size());
      kb.free_cols.push_back(c);
    }
  MatrixBuilder mb(f, m.cols(), kb.free_cols.size());
  for (std::size_t j = 0; j < kb.free_cols.size(); ++j) mb.add(kb.free_cols[j], j, f.one());
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (std::size_t k = 1; k < e.rows[i].size(); ++k) {
      const auto& en = e.rows[i][k];
      mb.add(e.pivots[i], static_cast<std::size_t>(free_index[en.col]), -en.value);
    }
  kb.basis = std::move(mb).build();
  return kb;
}

Matrix KernelBasis::coordinates(const Matrix& vectors) const {
  Matrix c = vectors.select_rows(free_cols);
  if (!(basis * c == vectors)) throw std::domain_error("vector not in the span of the kernel basis");
  return c;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<Matrix> blocks{m, Matrix::identity(m.field(), n)};
  RowEchelon re = row_echelon(Matrix::hstack(blocks));
  if (re.pivots.size() < n || (n > 0 && re.pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
  return re.rows.col_range(n, 2 * n);
}

Cokernel cokernel(const Matrix& image) {
  // The pivots of the row echelon form of image^T span the image; the other
  // coordinates give a complement. A vector v then maps to
  // v_comp - R_comp * v_piv-coefficients, computed by reducing against rows.
  Field f = image.field();
  std::size_t n = image.rows();
  RowEchelon re = row_echelon(image.transpose());
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : re.pivots) is_pivot[c] = 1;
  Cokernel ck;
  std::vector<std::ptrdiff_t> where(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      where[c] = static_cast<std::ptrdiff_t>(ck.complement.size());
      ck.complement.push_back(c);
    }
  // e_c for a pivot c is congruent to e_c - row(c) = -(non-pivot part of row).
  MatrixBuilder proj(f, ck.complement.size(), n);
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) proj.add(static_cast<std::size_t>(where[c]), c, f.one());
  for (std::size_t i = 0; i < re.pivots.size(); ++i)
    for (const auto& en : re.rows.row(i))
      if (en.col != re.pivots[i]) proj.add(static_cast<std::size_t>(where[en.col]), re.pivots[i], -en.value);
  ck.projection = std::move(proj).build();
  MatrixBuilder sec(f, n, ck.complement.size());
  for (std::size_t j = 0; j < ck.complement.size(); ++j) sec.add(ck.complement[j], j, f.one());
  ck.section = std::move(sec).build();
  return ck;
}

}  // namespace hopfcyc

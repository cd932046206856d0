#pragma once

#include "hopfcyc/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcyc {

/// Sparse vector as (index, coefficient) pairs, sorted, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

struct LawCheck {
  std::string law;
  bool holds;
  std::string detail;
};

struct ValidationReport {
  std::string subject;
  std::vector<LawCheck> checks;

  bool passed() const;
  std::vector<std::string> failing() const;
  void add(std::string law, bool holds, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix = {});
};

/// Raised on shape errors in structure tensors, before any axiom is checked.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term2 {
  std::size_t a, b;
  Scalar c;
};
struct Term3 {
  std::size_t a, b, c;
  Scalar coef;
};

/// Finite-dimensional Hopf algebra by structure tensors:
///   mult    n x n^2   column i*n+j holds e_i e_j
///   unit    n x 1
///   comult  n^2 x n   column i holds Delta(e_i), row j*n+k the e_j (x) e_k coefficient
///   counit  1 x n
///   S, S_inv  n x n   column i holds S(e_i)
class HopfAlgebra {
 public:
  HopfAlgebra(Field field, std::vector<std::string> labels, Matrix mult, Matrix unit, Matrix comult,
              Matrix counit, Matrix antipode, std::optional<Matrix> antipode_inv = std::nullopt);

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix& mult() const { return mult_; }
  const Matrix& unit() const { return unit_; }
  const Matrix& comult() const { return comult_; }
  const Matrix& counit() const { return counit_; }
  const Matrix& antipode() const { return S_; }
  const Matrix& antipode_inv() const { return S_inv_; }
  /// True when S_inv was computed here by inversion rather than supplied.
  bool antipode_inv_computed() const { return s_inv_computed_; }

  // Cached sparse forms.
  const SparseVec& product(std::size_t i, std::size_t j) const { return prod_[i * dim() + j]; }
  const std::vector<Term2>& coproduct(std::size_t i) const { return cop_[i]; }
  /// (Delta (x) id) Delta(e_i) as e_a (x) e_b (x) e_c terms.
  const std::vector<Term3>& coproduct3(std::size_t i) const { return cop3_[i]; }
  const Scalar& counit_of(std::size_t i) const { return eps_[i]; }
  const SparseVec& S_of(std::size_t i) const { return S_cols_[i]; }
  const SparseVec& S_inv_of(std::size_t i) const { return S_inv_cols_[i]; }
  const SparseVec& unit_vec() const { return unit_vec_; }

  /// Product of two sparse elements.
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec apply_S(const SparseVec& x) const;
  SparseVec basis(std::size_t i) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  Matrix mult_, unit_, comult_, counit_, S_, S_inv_;
  bool s_inv_computed_ = false;

  std::vector<SparseVec> prod_;
  std::vector<std::vector<Term2>> cop_;
  std::vector<std::vector<Term3>> cop3_;
  std::vector<Scalar> eps_;
  std::vector<SparseVec> S_cols_, S_inv_cols_;
  SparseVec unit_vec_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

ValidationReport validate_hopf(const HopfAlgebra& H);

/// A Hopf algebra map rho: K -> H, matrix dim(H) x dim(K).
struct HopfMap {
  HopfPtr source;
  HopfPtr target;
  Matrix matrix;
};
ValidationReport validate_hopf_map(const HopfMap& rho);

/// Multiplication table of a finite group: table[a][b] = index of a*b.
using GroupTable = std::vector<std::vector<std::size_t>>;

GroupTable cyclic_group_table(std::size_t n);
GroupTable symmetric_group3_table();
/// Labels matching symmetric_group3_table.
std::vector<std::string> symmetric_group3_labels();

HopfPtr build_trivial_hopf(Field field);
HopfPtr build_group_algebra(const GroupTable& table, Field field, std::vector<std::string> labels = {});
HopfPtr build_dual_group_algebra(const GroupTable& table, Field field, std::vector<std::string> labels = {});
HopfPtr build_sweedler(Field field);
/// Taft algebra over F_p with basis g^a x^b (index b*N + a).
HopfPtr build_taft(std::size_t N, std::uint64_t p, std::uint64_t q);
/// Same relations over an arbitrary field, q given as a scalar of order N.
HopfPtr build_taft(std::size_t N, const Scalar& q);

/// Plain associative algebra by structure tensors (mult dim x dim^2, unit dim x 1).
struct Algebra {
  Field field;
  std::size_t dim = 0;
  Matrix mult;
  Matrix unit;
};
ValidationReport validate_algebra(const Algebra& A);

}  // namespace hopfcyc

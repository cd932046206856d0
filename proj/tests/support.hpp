#pragma once

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/functors.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

using namespace hopfcyc;

inline Scalar small_scalar(const Field& f, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  return f.from_int(d(rng));
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m.set(i, j, small_scalar(f, rng));
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng, 0.8);
    if (rank(m) == n) return m;
  }
}

/// Group-like Hopf map sending basis element k to basis element img[k].
inline HopfMap group_map(HopfPtr K, HopfPtr H, const std::vector<std::size_t>& img) {
  Matrix m(H->field(), H->dim(), K->dim());
  for (std::size_t k = 0; k < img.size(); ++k) m.set(img[k], k, H->field().one());
  return {K, H, m};
}

inline std::vector<std::pair<std::string, HopfMap>> hopf_maps(const Field& f) {
  auto k = build_trivial_hopf(f);
  auto Z2 = build_group_algebra(cyclic_group_table(2), f);
  auto Z3 = build_group_algebra(cyclic_group_table(3), f);
  auto Z4 = build_group_algebra(cyclic_group_table(4), f);
  auto S3 = build_group_algebra(symmetric_group3_table(), f, symmetric_group3_labels());
  auto Sw = build_sweedler(f);
  return {{"id kZ2", group_map(Z2, Z2, {0, 1})},     {"k -> kZ2", group_map(k, Z2, {0})},
          {"k -> H4", group_map(k, Sw, {0})},        {"kZ2 -> kZ4", group_map(Z2, Z4, {0, 2})},
          {"kZ2 -> kS3", group_map(Z2, S3, {0, 3})}, {"kZ3 -> kS3", group_map(Z3, S3, {0, 1, 2})},
          {"kZ2 -> H4", group_map(Z2, Sw, {0, 1})},  {"kZ4 -> kZ2", group_map(Z4, Z2, {0, 1, 0, 1})},
          {"id H4", group_map(Sw, Sw, {0, 1, 2, 3})}};
}

/// Valid aYD contramodules over H: free objects, valid evaluation objects, sums.
inline std::vector<AydContramodule> contramodule_pool(HopfPtr H) {
  std::vector<AydContramodule> out{tr_contra(trivial_module(H)), tr_contra(regular_module(H)),
                                   tr_contra(adjoint_module(H))};
  for (const auto& V : {trivial_module(H), regular_module(H)})
    for (std::size_t i = 0; i < H->dim(); ++i) {
      auto e = evaluation_contramodule(V, i);
      if (validate_contramodule(e).passed()) out.push_back(e);
    }
  out.push_back(direct_sum(out.front(), out.back()));
  return out;
}

inline AydContramodule random_contramodule(HopfPtr H, std::mt19937_64& rng) {
  auto pool = contramodule_pool(H);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  AydContramodule M = pool[pick(rng)];
  if (M.dim() <= 6) M = conjugate(M, random_invertible(H->field(), M.dim(), rng));
  return M;
}

/// Stable objects sit in one degree; the others come as sigma-cones.
inline MixedAydContramodule random_mixed(HopfPtr H, std::mt19937_64& rng) {
  AydContramodule M = random_contramodule(H, rng);
  std::uniform_int_distribution<int> lo(-1, 1);
  if (is_stable(M) && std::bernoulli_distribution(0.5)(rng)) return concentrated(M, lo(rng));
  return sigma_cone(M, lo(rng));
}

/// Two-term mixed complex W^lo -> W^{lo+1} with random d and an h that kills
/// d on both sides.
inline MixedComplexVec random_two_term(const Field& f, std::mt19937_64& rng, int lo = 0) {
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  std::size_t a = dim(rng), b = dim(rng);
  Matrix d = random_matrix(f, b, a, rng, 0.5);
  KernelBasis ker = kernel_basis(d);                 // a x r
  KernelBasis left = kernel_basis(d.transpose());    // b x s, rows annihilate d
  Matrix R = random_matrix(f, ker.dim(), left.dim(), rng, 0.8);
  Matrix h = ker.basis * R * left.basis.transpose();  // b -> a
  return mixed_complex(f, lo, {a, b}, {d, Matrix(f, 0, b)}, {Matrix(f, 0, a), h});
}

inline std::vector<HopfPtr> small_hopf(const Field& f) {
  std::vector<HopfPtr> out{build_trivial_hopf(f), build_group_algebra(cyclic_group_table(2), f),
                           build_group_algebra(cyclic_group_table(3), f)};
  out.push_back(build_sweedler(f));
  return out;
}

}  // namespace testing_support

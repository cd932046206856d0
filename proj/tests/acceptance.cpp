// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace hopfcyc;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool holds, const std::string& what) {
    if (!holds && ok) detail = what;
    ok = ok && holds;
  }
};

struct Named {
  std::string name;
  HopfPtr H;
  std::vector<HModule> modules;  // dim <= 3
};

std::vector<Named> listed_hopf() {
  Field Q = Field::rationals(), F7 = Field::prime(7);
  auto with = [](std::string name, HopfPtr H, std::vector<std::vector<Scalar>> chars) {
    Named n{std::move(name), H, {trivial_module(H), trivial_module(H, 2), trivial_module(H, 3)}};
    if (H->dim() <= 3) {
      n.modules.push_back(regular_module(H));
      n.modules.push_back(adjoint_module(H));
    }
    for (auto& c : chars) {
      HModule m = character_module(H, c);
      n.modules.push_back(m);
      n.modules.push_back(direct_sum(m, trivial_module(H)));
    }
    return n;
  };
  auto S3 = build_group_algebra(symmetric_group3_table(), Q, symmetric_group3_labels());
  std::vector<Scalar> s3_sign;
  for (std::size_t i = 0; i < 6; ++i) s3_sign.push_back(i < 3 ? Q.one() : -Q.one());
  auto Sw = build_sweedler(Q);
  auto T = build_taft(3, 7, 2);
  std::vector<Scalar> taft_char(9, F7.zero());
  taft_char[0] = F7.one();
  taft_char[1] = F7.from_int(2);
  taft_char[2] = F7.from_int(4);
  return {
      with("kZ2/Q", build_group_algebra(cyclic_group_table(2), Q), {{Q.one(), -Q.one()}}),
      with("kZ3/Q", build_group_algebra(cyclic_group_table(3), Q), {}),
      with("kZ3/F7", build_group_algebra(cyclic_group_table(3), F7), {{F7.one(), F7.from_int(2), F7.from_int(4)}}),
      with("kS3/Q", S3, {s3_sign}),
      with("k^Z2/Q", build_dual_group_algebra(cyclic_group_table(2), Q), {{Q.zero(), Q.one()}}),
      with("k^Z3/Q", build_dual_group_algebra(cyclic_group_table(3), Q), {{Q.zero(), Q.one(), Q.zero()}}),
      with("H4/Q", Sw, {{Q.one(), -Q.one(), Q.zero(), Q.zero()}}),
      with("Taft3/F7", T, {taft_char}),
  };
}

Outcome hopf_axioms() {
  Outcome o;
  for (const auto& n : listed_hopf()) {
    ValidationReport r = validate_hopf(*n.H);
    o.require(r.passed(), n.name + " fails " + (r.failing().empty() ? "" : r.failing()[0]));
  }
  return o;
}

Outcome monad_laws() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& n : listed_hopf()) {
    o.require(n.modules.size() >= 3, n.name + " has fewer than three modules");
    for (const auto& N : n.modules) {
      o.require(validate_module(N).passed(), n.name + ": invalid test module");
      ValidationReport r = validate_monad(N);
      o.require(r.passed(), n.name + " dim " + std::to_string(N.dim) + " fails " +
                                (r.failing().empty() ? "" : r.failing()[0]));
      ++count;
    }
  }
  o.detail = o.ok ? std::to_string(count) + " modules" : o.detail;
  return o;
}

Outcome stability() {
  Outcome o;
  Field Q = Field::rationals();
  auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
  auto t = evaluation_contramodule(trivial_module(Z2), 0);
  auto s = evaluation_contramodule(character_module(Z2, {Q.one(), -Q.one()}), 0);
  o.require(validate_contramodule(t).passed() && is_stable(t), "(k_triv, ev_1) not a stable object");
  o.require(validate_contramodule(s).passed() && is_stable(s), "(k_-, ev_1) not a stable object");
  std::size_t total = 0, stable = 0;
  for (const auto& n : listed_hopf())
    for (const auto& V : {trivial_module(n.H), regular_module(n.H), adjoint_module(n.H)}) {
      auto T = tr_contra(V);
      o.require(validate_contramodule(T).passed(), "Tr(V) over " + n.name + " invalid");
      bool trivial_action = true;
      for (std::size_t i = 0; i < n.H->dim(); ++i)
        trivial_action = trivial_action && V.act[i] == Matrix::identity(n.H->field(), V.dim) * n.H->counit_of(i);
      // Tr(V) is stable exactly when H acts trivially on V.
      o.require(is_stable(T) == trivial_action, "stability of Tr(V) over " + n.name + " misreported");
      ++total;
      stable += is_stable(T) ? 1 : 0;
    }
  if (o.ok) o.detail = std::to_string(stable) + " of " + std::to_string(total) + " free objects stable";
  return o;
}

Outcome chern_identities() {
  Outcome o;
  Field Q = Field::rationals();
  auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
  auto Sw = build_sweedler(Q);
  std::vector<std::pair<HModuleAlgebra, MixedAydContramodule>> pairs{
      {adjoint_module_algebra(Z2), concentrated(evaluation_contramodule(trivial_module(Z2), 0))},
      {unit_module_algebra(Z2), concentrated(evaluation_contramodule(trivial_module(Z2), 0))},
      {function_module_algebra(Z2, cyclic_group_table(2)),
       sigma_cone(evaluation_contramodule(character_module(Z2, {Q.one(), -Q.one()}), 1))},
      {unit_module_algebra(Sw), concentrated(tr_contra(trivial_module(Sw)))},
  };
  for (const auto& [A, M] : pairs) {
    ChernCharacter ch = chern(A, 4);
    ValidationReport r = validate_chern(ch);
    o.require(r.passed(), "ch(A) fails " + (r.failing().empty() ? "" : r.failing()[0]));
    CocyclicComplex C = build_cocyclic(A, M, 4);
    ValidationReport t = check_tau_consistency(ch, C);
    o.require(t.passed(), "tau consistency fails " + (t.failing().empty() ? "" : t.failing()[0]));
  }
  return o;
}

Outcome tricomplex() {
  Outcome o;
  Field Q = Field::rationals();
  auto Z2 = build_group_algebra(cyclic_group_table(2), Q);
  auto M = sigma_cone(evaluation_contramodule(character_module(Z2, {Q.one(), -Q.one()}), 1));
  o.require(!is_stable(M.objects[0]), "coefficient is not genuinely mixed");
  for (const auto& A : {adjoint_module_algebra(Z2), function_module_algebra(Z2, cyclic_group_table(2))}) {
    ValidationReport r = validate_tricomplex(build_tricomplex(A, M, 0, 5));
    o.require(r.passed(), "fails " + (r.failing().empty() ? "" : r.failing()[0]));
  }
  return o;
}

std::string table(const DimTable& t) {
  std::string s;
  for (const auto& [d, v] : t) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

Outcome three_way() {
  Outcome o;
  for (const auto& f : {Field::rationals(), Field::prime(7)}) {
    auto k = build_trivial_hopf(f);
    auto Z2 = build_group_algebra(cyclic_group_table(2), f);
    HModule sign = character_module(Z2, {f.one(), -f.one()});
    std::vector<std::pair<HModuleAlgebra, AydContramodule>> cases{
        {unit_module_algebra(k), evaluation_contramodule(trivial_module(k), 0)},
        {unit_module_algebra(Z2), evaluation_contramodule(trivial_module(Z2), 0)},
        {adjoint_module_algebra(Z2), evaluation_contramodule(trivial_module(Z2), 0)},
        {adjoint_module_algebra(Z2), evaluation_contramodule(sign, 0)},
        {adjoint_module_algebra(Z2), tr_contra(trivial_module(Z2))},
        {function_module_algebra(Z2, cyclic_group_table(2)), evaluation_contramodule(sign, 0)},
        {function_module_algebra(Z2, cyclic_group_table(2)), evaluation_contramodule(trivial_module(Z2), 0)},
    };
    for (const auto& [A, M] : cases) {
      auto y = hopf_cyclic_cohomology(A, concentrated(M), 0, 5);
      auto ts = tsygan_bicomplex(A, M, 0, 5);
      auto tri = tricomplex_cohomology(A, concentrated(M), 0, 5);
      o.require(y == ts && y == tri, "y " + table(y) + " tsygan " + table(ts) + " tricomplex " + table(tri));
    }
  }
  return o;
}

Outcome classical() {
  Outcome o;
  Field Q = Field::rationals();
  auto k = build_trivial_hopf(Q);
  auto t = hopf_cyclic_cohomology(unit_module_algebra(k), concentrated(evaluation_contramodule(trivial_module(k), 0)), 0, 6);
  o.require(table(t) == "1,0,1,0,1,0,1", "got " + table(t));
  if (o.ok) o.detail = table(t);
  return o;
}

Outcome adjunctions() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const auto& f : {Field::rationals(), Field::prime(7)}) {
    std::size_t eps = 0, rho = 0;
    for (const auto& H : small_hopf(f))
      for (int t = 0; t < 3; ++t) {
        MixedComplexVec W = random_two_term(f, rng, static_cast<int>(rng() % 3) - 1);
        MixedAydContramodule M = random_mixed(H, rng);
        o.require(check_eps_adjunction(W, M).equal, "eps adjunction dims differ");
        for (const auto& obj : eps_upper(W, H).objects) o.require(is_stable(obj), "eps_upper output unstable");
        ++eps;
      }
    for (const auto& [name, r] : hopf_maps(f))
      for (int t = 0; t < 2; ++t) {
        auto N = random_contramodule(r.target, rng);
        auto M = random_contramodule(r.source, rng);
        o.require(check_rho_adjunction(N, M, r).equal, "rho adjunction dims differ for " + name);
        ++rho;
      }
    o.require(eps >= 10 && rho >= 10, "too few instances");
    if (o.ok)
      o.detail += (o.detail.empty() ? "" : ", ") + std::string(f.is_rational() ? "Q: " : "F_p: ") +
                  std::to_string(eps) + " eps + " + std::to_string(rho) + " rho";
  }
  return o;
}

Outcome key_lemma() {
  Outcome o;
  Field Q = Field::rationals();
  for (const auto& H : {build_sweedler(Q), build_group_algebra(cyclic_group_table(2), Q)}) {
    BicomoduleAlgebra B = hopf_as_bicomodule_algebra(H);
    o.require(validate_bicomodule_algebra(B).passed(), "bicomodule algebra invalid");
    for (const auto& V : {trivial_module(H), regular_module(H), adjoint_module(H)})
      for (Side s : {Side::left, Side::right}) {
        ValidationReport r = validate_key_iso(key_iso(B, V, s));
        o.require(r.passed(), "fails " + (r.failing().empty() ? "" : r.failing()[0]));
      }
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  Field Q = Field::rationals();
  auto H = build_sweedler(Q);
  Matrix S = H->antipode();
  S.set(2, 2, Q.zero());
  S.set(3, 2, Q.one());
  HopfAlgebra bad(Q, H->labels(), H->mult(), H->unit(), H->comult(), H->counit(), S);
  auto f1 = validate_hopf(bad).failing();
  o.require(f1 == std::vector<std::string>{"antipode"}, "mutated antipode report differs");
  auto S3 = build_group_algebra(symmetric_group3_table(), Q, symmetric_group3_labels());
  auto f2 = validate_contramodule(evaluation_contramodule(trivial_module(S3), 3)).failing();
  o.require(f2 == std::vector<std::string>{"compatibility"}, "non-equivariant contraaction report differs");
  if (o.ok) o.detail = "named: " + f1[0] + ", " + f2[0];
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "Hopf axiom suite", 5, hopf_axioms},
      {2, "monad laws", 30, monad_laws},
      {3, "stability catalogue", 60, stability},
      {4, "Chern character identities", 60, chern_identities},
      {5, "tricomplex relations", 60, tricomplex},
      {6, "three-way agreement", 300, three_way},
      {7, "classical cyclic cohomology of k", 60, classical},
      {8, "adjunction dimensions", 120, adjunctions},
      {9, "key isomorphism", 60, key_lemma},
      {10, "negative controls", 60, negative_controls},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.budget_s) {
      o.ok = false;
      o.detail = "over time budget";
    }
    failures += o.ok ? 0 : 1;
    std::printf("criterion %2d %-34s %s  %.2fs%s%s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

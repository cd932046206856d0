#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/document.hpp"
#include "hopfcyc/functors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopfcyc;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failed = 1, guard = 2 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WorkspaceDocument load(const std::string& path) { return parse_document(slurp(path)); }

bool print_report(const ValidationReport& r, const std::string& object) {
  for (const auto& c : r.checks)
    std::cout << object << "," << c.law << "," << (c.holds ? "PASS" : "FAIL") << (c.detail.empty() ? "" : "," + c.detail)
              << "\n";
  return r.passed();
}

std::pair<int, int> parse_degrees(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--degrees", "expected a..b");
  int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
  if (b < a) throw CLI::ValidationError("--degrees", "empty range");
  return {a, b};
}

const MixedAydContramodule& require_contra(const WorkspaceDocument& doc) {
  if (!doc.coefficient || doc.coefficient->kind != CoefficientDoc::Kind::contramodule)
    throw DocumentError("/coefficient", "a contramodule coefficient is required");
  return doc.coefficient->contra;
}

const HModuleAlgebra& require_algebra(const WorkspaceDocument& doc) {
  if (!doc.algebra) throw DocumentError("/algebra", "a module algebra is required");
  return *doc.algebra;
}

int cmd_validate(const std::string& path) {
  WorkspaceDocument doc = load(path);
  bool good = print_report(validate_hopf(*doc.hopf), "hopf");
  if (doc.algebra) good = print_report(validate_module_algebra(*doc.algebra), "algebra") && good;
  if (doc.bicomodule) good = print_report(validate_bicomodule_algebra(*doc.bicomodule), "algebra") && good;
  if (doc.coefficient) {
    if (doc.coefficient->kind == CoefficientDoc::Kind::contramodule) {
      const auto& M = doc.coefficient->contra;
      good = print_report(validate_mixed_contramodule(M), "coefficient") && good;
      for (std::size_t k = 0; k < M.objects.size(); ++k)
        std::cout << "coefficient,degree " << M.lo + static_cast<int>(k) << ": stable,"
                  << (is_stable(M.objects[k]) ? "yes" : "no") << "\n";
    } else {
      const auto& M = doc.coefficient->module;
      good = print_report(validate_mixed_ayd_module(M), "coefficient") && good;
      for (std::size_t k = 0; k < M.objects.size(); ++k)
        std::cout << "coefficient,degree " << M.lo + static_cast<int>(k) << ": stable,"
                  << (is_stable_module(M.objects[k]) ? "yes" : "no") << "\n";
    }
  }
  if (doc.map) {
    good = print_report(validate_hopf(*doc.map->source), "map source") && good;
    good = print_report(validate_hopf_map(*doc.map), "map") && good;
  }
  std::cout << (good ? "PASS" : "FAIL") << "\n";
  return good ? ok : failed;
}

struct CohomologyFlags {
  std::string method;
  std::string degrees;
  std::size_t nmax = 0;
  std::size_t max_dim = 0;
};

int cmd_cohomology(const std::string& path, CohomologyFlags fl) {
  WorkspaceDocument doc = load(path);
  const auto& task = doc.task;
  if (fl.method.empty()) fl.method = task.value("method", std::string("all"));
  if (fl.degrees.empty()) fl.degrees = task.value("degrees", std::string("0..4"));
  if (fl.nmax == 0) fl.nmax = task.value("nmax", std::size_t{0});
  if (fl.max_dim == 0) fl.max_dim = task.value("max_dim", CyclicOptions{}.max_dim);
  auto [from, to] = parse_degrees(fl.degrees);
  const auto& A = require_algebra(doc);
  const auto& M = require_contra(doc);
  if (!validate_module_algebra(A).passed() || !validate_mixed_contramodule(M).passed()) {
    std::cerr << "input does not validate; run `validate` for details\n";
    return failed;
  }
  CyclicOptions opt;
  opt.n_max = fl.nmax;
  opt.max_dim = fl.max_dim;

  std::vector<std::string> names;
  std::vector<std::optional<DimTable>> tables;
  bool all = fl.method == "all";
  if (all || fl.method == "yseries") {
    names.push_back("yseries");
    tables.emplace_back(hopf_cyclic_cohomology(A, M, from, to, opt));
  }
  if (all || fl.method == "tsygan") {
    names.push_back("tsygan");
    bool applicable = M.objects.size() == 1 && M.lo == 0 && is_stable(M.objects[0]);
    if (applicable)
      tables.emplace_back(tsygan_bicomplex(A, M.objects[0], from, to, opt));
    else if (all)
      tables.emplace_back(std::nullopt);
    else
      throw DocumentError("/coefficient", "the Tsygan bicomplex needs a stable coefficient in degree 0");
  }
  if (all || fl.method == "tricomplex") {
    names.push_back("tricomplex");
    tables.emplace_back(tricomplex_cohomology(A, M, from, to, opt));
  }
  if (names.empty()) throw CLI::ValidationError("--method", "expected yseries, tsygan, tricomplex or all");

  std::cout << "degree";
  for (const auto& n : names) std::cout << "," << n;
  if (all) std::cout << ",status";
  std::cout << "\n";
  bool agree = true;
  for (int deg = from; deg <= to; ++deg) {
    std::cout << deg;
    std::optional<std::size_t> first;
    bool row_agree = true;
    for (const auto& t : tables) {
      if (!t) {
        std::cout << ",n/a";
        continue;
      }
      std::size_t v = (*t)[deg - from].second;
      std::cout << "," << v;
      if (first && *first != v) row_agree = false;
      if (!first) first = v;
    }
    if (all) std::cout << "," << (row_agree ? "AGREE" : "DISAGREE");
    agree = agree && row_agree;
    std::cout << "\n";
  }
  return agree ? ok : failed;
}

int cmd_chern(const std::string& path, std::size_t nmax, std::size_t max_dim) {
  WorkspaceDocument doc = load(path);
  const auto& A = require_algebra(doc);
  if (nmax == 0) nmax = doc.task.value("nmax", std::size_t{3});
  if (max_dim == 0) max_dim = CyclicOptions{}.max_dim;
  ChernCharacter ch = chern(A, nmax, max_dim);
  std::cout << "n,degree,dim,normalized\n";
  for (std::size_t n = 0; n <= nmax; ++n)
    std::cout << n << "," << -static_cast<int>(n) << "," << ch.objects[n].dim() << "," << ch.normalized[n].dim()
              << "\n";
  bool good = print_report(validate_chern(ch), "ch(A)");
  if (doc.coefficient && doc.coefficient->kind == CoefficientDoc::Kind::contramodule) {
    CocyclicComplex C = build_cocyclic(A, doc.coefficient->contra, nmax, max_dim);
    good = print_report(validate_cocyclic(C), "cochains") && good;
    good = print_report(check_tau_consistency(ch, C), "tau consistency") && good;
  }
  std::cout << (good ? "PASS" : "FAIL") << "\n";
  return good ? ok : failed;
}

HopfMap unit_map(HopfPtr H) {
  HopfPtr k = build_trivial_hopf(H->field());
  return {k, H, H->unit()};
}

int cmd_adjoint(const std::string& path) {
  WorkspaceDocument doc = load(path);
  HopfPtr H = doc.hopf;
  Field f = doc.field;
  MixedAydContramodule M = doc.coefficient && doc.coefficient->kind == CoefficientDoc::Kind::contramodule
                               ? doc.coefficient->contra
                               : concentrated(tr_contra(trivial_module(H)));
  bool good = true;
  auto line = [&](const std::string& what, const AdjunctionReport& r) {
    std::cout << what << "," << r.left_object << "," << r.left_dim << "," << r.right_object << "," << r.right_dim
              << "," << (r.equal ? "EQUAL" : "DIFFERENT") << "\n";
    good = good && r.equal;
  };
  std::cout << "pair,left,dim,right,dim,result\n";

  Matrix one = Matrix::identity(f, 1);
  std::vector<std::pair<std::string, MixedComplexVec>> ws{
      {"W = k", mixed_complex(f, M.lo, {1}, {Matrix(f, 0, 1)}, {Matrix(f, 0, 1)})},
      {"W = (k -d-> k)", mixed_complex(f, M.lo, {1, 1}, {one, Matrix(f, 0, 1)}, {Matrix(f, 0, 1), Matrix(f, 1, 1)})},
      {"W = (k <-h- k)", mixed_complex(f, M.lo, {1, 1}, {Matrix(f, 1, 1), Matrix(f, 0, 1)}, {Matrix(f, 0, 1), one})}};
  for (const auto& [name, W] : ws) {
    line("eps " + name, check_eps_adjunction(W, M));
    auto E = eps_upper(W, H);
    bool stable = true;
    for (const auto& o : E.objects) stable = stable && is_stable(o);
    std::cout << "eps " << name << ",eps_upper stable," << (stable ? "yes" : "no") << "\n";
    good = good && stable;
  }

  HopfMap rho = doc.map ? *doc.map : unit_map(H);
  if (!validate_hopf_map(rho).passed()) {
    std::cerr << "map does not validate\n";
    return failed;
  }
  HopfPtr K = rho.source;
  std::vector<std::pair<std::string, AydContramodule>> over_k{{"Tr(k)", tr_contra(trivial_module(K))},
                                                              {"Tr(K)", tr_contra(regular_module(K))}};
  for (std::size_t t = 0; t < M.objects.size(); ++t)
    for (const auto& [name, MK] : over_k)
      line("rho N = coefficient degree " + std::to_string(M.lo + static_cast<int>(t)) + ", M = " + name,
           check_rho_adjunction(M.objects[t], MK, rho));
  std::cout << (good ? "PASS" : "FAIL") << "\n";
  return good ? ok : failed;
}

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 1 && s[0] == 'F') return Field::prime(std::stoull(s.substr(s[1] == '_' ? 2 : 1)));
  throw CLI::ValidationError("--field", "expected Q or F<p>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hopf-cyclic cohomology of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Run every applicable validator on a document");
  validate->add_option("file", file, "document path or -")->required();

  std::string name, field_name = "Q";
  std::size_t n = 2, N = 3;
  std::uint64_t p = 7, q = 2;
  auto* example = app.add_subcommand("example", "Print a builder document");
  example->add_option("name", name, "group-zn, dual-group-zn, sweedler, taft or s3")
      ->required()
      ->check(CLI::IsMember({"group-zn", "dual-group-zn", "sweedler", "taft", "s3"}));
  example->add_option("--field", field_name, "Q or F<p>");
  example->add_option("--n", n, "order of the cyclic group");
  example->add_option("--N", N, "Taft parameter");
  example->add_option("--p", p, "Taft prime");
  example->add_option("--q", q, "Taft root of unity");

  CohomologyFlags fl;
  auto* cohom = app.add_subcommand("cohomology", "Hopf-cyclic cohomology dimensions as CSV");
  cohom->add_option("file", file)->required();
  cohom->add_option("--method", fl.method, "yseries, tsygan, tricomplex or all")
      ->check(CLI::IsMember({"yseries", "tsygan", "tricomplex", "all"}));
  cohom->add_option("--degrees", fl.degrees, "window a..b");
  cohom->add_option("--nmax", fl.nmax, "truncation of ch(A)");
  cohom->add_option("--max-dim", fl.max_dim, "largest allowed Hom space");

  std::size_t nmax = 0, max_dim = 0;
  auto* chern_cmd = app.add_subcommand("chern", "Dimensions of ch(A) and its identity suite");
  chern_cmd->add_option("file", file)->required();
  chern_cmd->add_option("--nmax", nmax);
  chern_cmd->add_option("--max-dim", max_dim);

  auto* adjoint = app.add_subcommand("adjoint", "Adjunction dimension reports");
  adjoint->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file);
    if (*example) {
      std::cout << serialize_document(example_document(name, parse_field(field_name), n, N, p, q)) << "\n";
      return ok;
    }
    if (*cohom) return cmd_cohomology(file, fl);
    if (*chern_cmd) return cmd_chern(file, nmax, max_dim);
    if (*adjoint) return cmd_adjoint(file);
  } catch (const GuardError& ex) {
    std::cerr << "guard: " << ex.what() << "\n";
    return guard;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return failed;
  }
  return ok;
}

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "slc/commutant.hpp"
#include "slc/poly_algebra.hpp"
#include "slc/realization.hpp"
#include "slc/sl_model.hpp"

using namespace slc;

namespace {

struct Options {
  int n = 3;
  std::string basis = "p";
  std::string family;
  int k = 2;
  std::string json_path;
  unsigned threads = 1;
  bool allow_large = false;
  std::uint64_t seed = kDefaultSeed;
};

// Output of one command: text for stdout, the JSON document, overall status.
struct Outcome {
  std::string text;
  std::string json;
  bool ok = true;
};

unsigned default_threads() {
  if (const char* env = std::getenv("SLCOMM_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring SLCOMM_THREADS=" << env << "\n";
  }
  return 1;
}

void require_range(const char* verb, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::out_of_range(std::string(verb) + " supports n = " + std::to_string(lo) + ".." + std::to_string(hi) +
                            ", got " + std::to_string(n));
}

Outcome run_basis(const Options& o) {
  require_range("basis", o.n, 2, 7);
  auto basis = enumerate_basis(o.n, o.n <= 5);
  std::ostringstream out;
  out << "commutant basis for n = " << o.n << ": " << basis.size() << " generators\n";
  for (int l : basis.cartan) out << "h" << l << "\n";
  for (const auto& c : basis.cycles) {
    out << "p";
    for (std::size_t i = 0; i < c.indices.size(); ++i) out << (i ? "," : "_") << c.indices[i];
    out << "\n";
  }
  return {out.str(), basis.to_json(), true};
}

Outcome run_dim(const Options& o) {
  require_range("dim", o.n, 2, 12);
  nlohmann::ordered_json doc;
  doc["n"] = o.n;
  doc["linear_dimension"] = linear_dimension(o.n);
  doc["cartan"] = o.n - 1;
  std::ostringstream out;
  out << linear_dimension(o.n) << " = " << (o.n - 1);
  nlohmann::ordered_json by_degree = nlohmann::ordered_json::object();
  for (int d = 2; d <= o.n; ++d) {
    by_degree[std::to_string(d)] = nu(o.n, d);
    out << " + " << nu(o.n, d);
  }
  doc["cycles_by_degree"] = by_degree;
  out << "\n";
  return {out.str(), doc.dump(), true};
}

Outcome run_table(const Options& o) {
  require_range("table", o.n, 2, 5);
  BasisKind kind;
  if (o.basis == "p")
    kind = BasisKind::P;
  else if (o.basis == "cfg")
    kind = BasisKind::Cfg;
  else
    throw std::invalid_argument("--basis must be p or cfg");
  if (o.n == 5 && !o.allow_large)
    throw std::out_of_range("table --n 5 takes minutes; pass --allow-large to run it");
  ProgressFn progress;
  if (o.n == 5)
    progress = [](std::size_t done, std::size_t total) {
      if (done % 100 == 0 || done == total) std::cerr << "pairs " << done << "/" << total << "\n";
    };
  auto table = structure_table(o.n, kind, o.threads, progress);
  std::ostringstream out;
  out << table.to_text();
  out << "algebra order " << algebra_order(table) << "\n";
  return {out.str(), table.to_json(), true};
}

Outcome run_verify(const Options& o) {
  if (o.family.empty()) throw std::invalid_argument("verify needs --family");
  Report rep;
  if (o.family == "printed-table") {
    if (o.n == 3)
      rep = printed_table_n3();
    else if (o.n == 4)
      rep = printed_listing_n4();
    else
      throw std::out_of_range("printed-table supports n = 3, 4");
  } else if (o.family == "filtration") {
    require_range("filtration", o.n, 3, 5);
    rep = filtration_check(o.n);
  } else if (o.family == "casimir-k") {
    require_range("casimir-k", o.n, 3, 3);
    rep = casimir_K(3, {1, 2, 3}).report;
  } else {
    rep = verify_identities(o.n, o.family);
  }
  return {rep.to_text(), rep.to_json(), rep.all_passed()};
}

Outcome run_realize(const Options& o) {
  require_range("realize", o.n, 3, 5);
  if (o.n == 5 && o.allow_large) std::cerr << "checking all 4005 generator pairs; this takes tens of minutes\n";
  auto rep = realization_report(o.n, o.seed, o.allow_large);
  return {rep.to_text(), rep.to_json(), rep.all_passed()};
}

Outcome run_casimir(const Options& o) {
  require_range("casimir", o.n, 2, 6);
  if (o.k < 2 || o.k > o.n) throw std::out_of_range("--k must satisfy 2 <= k <= n");
  auto c = trace_casimir(o.n, o.k);
  nlohmann::ordered_json doc;
  doc["n"] = o.n;
  doc["k"] = o.k;
  doc["terms"] = c.size();
  doc["polynomial"] = c.str();
  return {"c^[" + std::to_string(o.k) + "] = " + c.str() + "\n", doc.dump(), true};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial algebras from commutants of sl(n): enumeration, bracket tables and checks"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank parameter of sl(n)")->required();
    sub->add_option("--json", o.json_path, "write the JSON document to this path");
  };

  auto* basis = app.add_subcommand("basis", "commutant basis (n = 2..7)");
  add_common(basis);
  auto* dim = app.add_subcommand("dim", "linear dimension with the per-degree count (n = 2..12)");
  add_common(dim);
  auto* table = app.add_subcommand("table", "bracket table of the basis generators (n = 2..5)");
  add_common(table);
  table->add_option("--basis", o.basis, "p or cfg")->check(CLI::IsMember({"p", "cfg"}));
  table->add_option("--threads", o.threads, "worker threads (default SLCOMM_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  table->add_flag("--allow-large", o.allow_large, "allow n = 5");
  auto* verify = app.add_subcommand("verify", "check an identity family");
  add_common(verify);
  std::string families = "one of:";
  for (const auto& f : identity_families()) families += " " + f;
  families += " printed-table filtration casimir-k";
  verify->add_option("--family", o.family, families)->required();
  auto* realize = app.add_subcommand("realize", "realization on the sphere (n = 3..5)");
  add_common(realize);
  realize->add_option("--seed", o.seed, "seed for the float cross-check");
  realize->add_flag("--allow-large", o.allow_large, "n = 5: check all generator pairs");
  auto* casimir = app.add_subcommand("casimir", "trace Casimir c^[k] (n = 2..6)");
  add_common(casimir);
  casimir->add_option("--k", o.k, "degree, 2 <= k <= n");

  CLI11_PARSE(app, argc, argv);

  Outcome result;
  try {
    if (*basis)
      result = run_basis(o);
    else if (*dim)
      result = run_dim(o);
    else if (*table)
      result = run_table(o);
    else if (*verify)
      result = run_verify(o);
    else if (*realize)
      result = run_realize(o);
    else
      result = run_casimir(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << result.text;
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << o.json_path << "\n";
      return 2;
    }
    f << result.json << "\n";
  }
  return result.ok ? 0 : 1;
}

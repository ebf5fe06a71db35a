#include <random>

#include "doctest.h"
#include "json.hpp"
#include "slc/poly_algebra.hpp"

using namespace slc;

namespace {

Polynomial parse3(const std::string& text) { return Polynomial::parse(sl_context(3).registry(), text); }

Polynomial cyc(int n, std::vector<int> idx) { return cycle_poly(n, canonical_cycle(std::move(idx))); }

std::size_t count_kind(const Report& r, const std::string& kind) {
  return std::count_if(r.diagnostics.begin(), r.diagnostics.end(),
                       [&](const Diagnostic& d) { return d.kind == kind; });
}

}  // namespace

TEST_CASE("generator polynomials") {
  CHECK(generator_poly(3, GeneratorId::cycle({1, 2})) == parse3("1 * e1_2 e2_1"));
  CHECK(generator_poly(3, GeneratorId::c(1)) == parse3("2/3 * h1 + 1/3 * h2"));
  CHECK(generator_poly(3, GeneratorId::c(2)) == parse3("-1/3 * h1 + 1/3 * h2"));
  CHECK(generator_poly(3, GeneratorId::c(3)) == parse3("-1/3 * h1 + -2/3 * h2"));
  auto f = (cyc(3, {1, 3, 2}) - cyc(3, {1, 2, 3})) * Scalar::fraction(1, 2);
  CHECK(generator_poly(3, GeneratorId::f({1, 2, 3})) == f);
  CHECK(generator_poly(3, GeneratorId::cij(2, 1)) == cyc(3, {1, 2}));
  CHECK_THROWS_AS(generator_poly(3, GeneratorId::cartan(3)), std::invalid_argument);
  CHECK_THROWS_AS(generator_poly(3, GeneratorId::cycle({1, 4})), std::invalid_argument);
  CHECK_THROWS_AS(generator_poly(4, GeneratorId::f({1, 2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(generator_poly(4, GeneratorId::f({1, 2})), std::invalid_argument);
}

TEST_CASE("central elements sum to zero") {
  for (int n = 2; n <= 6; ++n) {
    Polynomial sum(sl_context(n).registry());
    for (int i = 1; i <= n; ++i) sum += generator_poly(n, GeneratorId::c(i));
    CHECK(sum.is_zero());
  }
}

TEST_CASE("index symmetries of f and g") {
  auto gp = [](int n, GeneratorId g) { return generator_poly(n, g); };
  using G = GeneratorId;
  for (int n : {3, 4}) {
    CHECK(gp(n, G::f({1, 2, 3})) == -gp(n, G::f({2, 1, 3})));
    CHECK(gp(n, G::f({1, 2, 3})) == gp(n, G::f({2, 3, 1})));
    CHECK(gp(n, G::g({1, 2, 3})) == gp(n, G::g({2, 1, 3})));
    CHECK(gp(n, G::g({1, 2, 3})) == gp(n, G::g({2, 3, 1})));
  }
  std::vector<int> idx{1, 2, 3, 4};
  do {
    auto [i, j, k, l] = std::array{idx[0], idx[1], idx[2], idx[3]};
    CHECK(gp(4, G::f({i, j, k, l})) == -gp(4, G::f({j, i, l, k})));
    CHECK(gp(4, G::g({i, j, k, l})) == gp(4, G::g({j, i, l, k})));
    CHECK(gp(4, G::f({i, j, k, l})) == gp(4, G::f({j, k, l, i})));
    CHECK(gp(4, G::g({i, j, k, l})) == gp(4, G::g({j, k, l, i})));
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("preferred f/g labels") {
  CHECK(fg_label({1, 3, 2}) == std::vector<int>{1, 2, 3});
  CHECK(fg_label({2, 1, 3}) == std::vector<int>{1, 2, 3});
  CHECK(fg_label({1, 4, 3, 2}) == std::vector<int>{1, 2, 3, 4});
  CHECK(fg_label({1, 3, 4, 2}) == std::vector<int>{1, 2, 4, 3});
  CHECK(fg_label({1, 4, 2, 3}) == std::vector<int>{1, 3, 2, 4});
  auto gens = table_generators(4, BasisKind::Cfg);
  CHECK(gens.size() == 4 + 6 + 2 * (4 + 3));
  CHECK(table_generators(4, BasisKind::P).size() == 23);
}

TEST_CASE("rewriting between bases keeps the polynomial") {
  std::mt19937_64 rng(7);
  for (int n : {3, 4}) {
    auto pgens = table_generators(n, BasisKind::P);
    auto cgens = table_generators(n, BasisKind::Cfg);
    std::uniform_int_distribution<std::size_t> pick_p(0, pgens.size() - 1), pick_c(0, cgens.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<NormalFormExpr::TermT> terms;
      for (int t = 0; t < 3; ++t) {
        Word w;
        for (int k = 0; k < 3; ++k) w.push_back({trial % 2 ? pgens[pick_p(rng)] : cgens[pick_c(rng)], 1});
        terms.push_back({Scalar(static_cast<long>(coeff(rng))), w});
      }
      auto e = NormalFormExpr::from_terms(terms);
      auto raw = expand(e, n);
      auto as_cfg = rewrite(e, n, BasisKind::Cfg);
      auto as_p = rewrite(e, n, BasisKind::P);
      CHECK(expand(as_cfg, n) == raw);
      CHECK(expand(as_p, n) == raw);
      CHECK(rewrite(as_cfg, n, BasisKind::Cfg) == as_cfg);
      CHECK(rewrite(as_p, n, BasisKind::Cfg) == as_cfg);
    }
  }
}

TEST_CASE("bracket examples") {
  using G = GeneratorId;
  auto p123 = NormalFormExpr::generator(G::cycle({1, 2, 3}));
  auto p132 = NormalFormExpr::generator(G::cycle({1, 3, 2}));
  CHECK(bracket(3, G::cycle({1, 2}), G::cycle({1, 3})) == p123 - p132);
  auto lhs = bracket(3, G::cycle({1, 2, 3}), G::cycle({1, 3, 2}));
  auto h1 = NormalFormExpr::generator(G::cartan(1)), h2 = NormalFormExpr::generator(G::cartan(2));
  auto p12 = NormalFormExpr::generator(G::cycle({1, 2})), p13 = NormalFormExpr::generator(G::cycle({1, 3})),
       p23 = NormalFormExpr::generator(G::cycle({2, 3}));
  CHECK(lhs == h1 * p13 * p23 + h2 * p12 * p13 - (h1 + h2) * p12 * p23);
  CHECK(bracket(3, G::cij(1, 2), G::cij(2, 3), BasisKind::Cfg) ==
        NormalFormExpr::generator(G::f({1, 2, 3}), Scalar(2)));
  // {c_kl, f_ijk} = g_ijlk - g_ijkl at i,j,k,l = 1,2,3,4
  auto rhs = rewrite(NormalFormExpr::generator(G::g({1, 2, 4, 3})) - NormalFormExpr::generator(G::g({1, 2, 3, 4})), 4,
                     BasisKind::Cfg);
  CHECK(bracket(4, G::cij(3, 4), G::f({1, 2, 3}), BasisKind::Cfg) == rhs);
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : table_generators(n, BasisKind::P)) {
      CHECK(bracket(n, G::cartan(1), g).is_zero());
      CHECK(bracket(n, G::c(n), g, BasisKind::Cfg).is_zero());
    }
}

TEST_CASE("structure tables and algebra order") {
  auto t2 = structure_table(2, BasisKind::P);
  CHECK(t2.nontrivial() == 0);
  CHECK(algebra_order(t2) == 0);
  CHECK(nlohmann::json::parse(t2.to_json())["entries"].empty());

  auto t3 = structure_table(3, BasisKind::P);
  CHECK(t3.entries.size() == 21);
  CHECK(algebra_order(t3) == 2);
  auto c3 = structure_table(3, BasisKind::Cfg);
  CHECK(algebra_order(c3) == 2);
  CHECK(c3.nontrivial() == 10);
  for (const auto& e : c3.entries)
    if (e.a.is_central() || e.b.is_central()) CHECK(e.value.is_zero());

  auto c4 = structure_table(4, BasisKind::Cfg, 4);
  CHECK(algebra_order(c4) == 3);
  CHECK(algebra_order(structure_table(4, BasisKind::P, 4)) == 3);
  CHECK(c4.to_json() == structure_table(4, BasisKind::Cfg, 1).to_json());

  auto doc = nlohmann::json::parse(c3.to_json());
  CHECK(doc["n"] == 3);
  CHECK(doc["basis"] == "cfg");
  CHECK(doc["entries"].size() == 10);
  CHECK(doc["entries"][0]["lhs"][0].is_string());
  CHECK(doc["entries"][0]["terms"][0]["word"][0].size() == 2);
}

TEST_CASE("degree bound n-1 for n = 2..5") {
  for (int n = 2; n <= 5; ++n) CHECK(algebra_order(structure_table(n, BasisKind::Cfg, 4)) <= n - 1);
}

TEST_CASE("table antisymmetry and Jacobi at raw level") {
  auto jacobi = [](int n, const GeneratorId& a, const GeneratorId& b, const GeneratorId& c) {
    const auto& ctx = sl_context(n);
    auto A = generator_poly(n, a), B = generator_poly(n, b), C = generator_poly(n, c);
    return (ctx.bracket(A, ctx.bracket(B, C)) + ctx.bracket(B, ctx.bracket(C, A)) + ctx.bracket(C, ctx.bracket(A, B)))
        .is_zero();
  };
  for (auto kind : {BasisKind::P, BasisKind::Cfg}) {
    auto gens = table_generators(3, kind);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        CHECK(bracket(3, gens[i], gens[j], kind) == -bracket(3, gens[j], gens[i], kind));
        for (std::size_t k = 0; k < gens.size(); ++k) CHECK(jacobi(3, gens[i], gens[j], gens[k]));
      }
  }
  std::mt19937_64 rng(11);
  auto gens = table_generators(4, BasisKind::Cfg);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int t = 0; t < 300; ++t) {
    auto a = gens[pick(rng)], b = gens[pick(rng)], c = gens[pick(rng)];
    CHECK(bracket(4, a, b, BasisKind::Cfg) == -bracket(4, b, a, BasisKind::Cfg));
    CHECK(jacobi(4, a, b, c));
  }
}

TEST_CASE("dependence identities") {
  for (int n : {3, 4, 5}) {
    for (auto fam : {"alde1", "rela1", "funrel", "addrel"}) {
      auto rep = verify_identities(n, fam);
      CHECK(!rep.checks.empty());
      CHECK_MESSAGE(rep.all_passed(), fam, " n=", n, "\n", rep.to_text());
    }
  }
  auto rela = verify_identities(4, "rela1");
  CHECK(rela.checks.size() == 7 + 1 + 2);
  CHECK(count_kind(rela, "mismatch") == 1);
  auto four = verify_identities(4, "addrels");
  CHECK(four.checks.size() == 48);
  CHECK(four.all_passed());
  for (auto fam : {"c2c3", "eq1equ1"}) CHECK(verify_identities(3, fam).all_passed());
  CHECK_THROWS_AS(verify_identities(3, "addrels"), std::invalid_argument);
  CHECK_THROWS_AS(verify_identities(4, "c2c3"), std::invalid_argument);
  CHECK_THROWS_AS(verify_identities(3, "nonsense"), std::invalid_argument);
}

TEST_CASE("quadratic algebra Casimir") {
  std::array<int, 3> idx{1, 2, 3};
  Polynomial first(sl_context(3).registry());
  do {
    auto k = casimir_K(3, idx);
    CHECK_MESSAGE(k.report.all_passed(), k.report.to_text());
    CHECK(k.report.checks.size() == 11);
    if (first.is_zero()) first = k.K;
    // K_ijk = K_jik = K_jki makes K independent of the index order
    CHECK(k.K == first);
  } while (std::next_permutation(idx.begin(), idx.end()));
  CHECK_THROWS(casimir_K(4, {1, 2, 3}));
  CHECK_THROWS(casimir_K(3, {1, 1, 2}));
}

TEST_CASE("printed n=3 tables") {
  auto rep = printed_table_n3();
  CHECK_MESSAGE(rep.all_passed(), rep.to_text());
  CHECK(rep.checks.size() == 8 + 10 + 4);
  CHECK(count_kind(rep, "mismatch") == 2);
  for (const auto& d : rep.diagnostics) CHECK(d.text.find("p132}") != std::string::npos);
}

TEST_CASE("printed n=4 listing") {
  auto rep = printed_listing_n4();
  CHECK(rep.diagnostics.size() == 41);
  CHECK(count_kind(rep, "match") == 37);
  CHECK(count_kind(rep, "mismatch") == 4);
  for (const auto& d : rep.diagnostics)
    if (d.kind == "mismatch") CHECK(d.text.find("holds for 24/24") != std::string::npos);
}

TEST_CASE("filtration") {
  CHECK(filtration_check(3).all_passed());
  CHECK(filtration_check(4).all_passed());
  CHECK(filtration_check(5).all_passed());
}

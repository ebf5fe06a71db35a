#include <algorithm>
#include <complex>
#include <random>

#include "doctest.h"
#include "random_poly.hpp"
#include "slc/poly_algebra.hpp"
#include "slc/realization.hpp"
#include "slc/sl_model.hpp"

using namespace slc;
using slc::testing::random_poly;

namespace {

// {f,g} written out from the partial derivatives.
Polynomial canonical_by_hand(const CanonicalRing& ring, const Polynomial& f, const Polynomial& g) {
  Polynomial out(ring.registry());
  for (int k = 1; k <= ring.n(); ++k) {
    out += f.derivative(ring.s_index(k)) * g.derivative(ring.p_index(k));
    out -= f.derivative(ring.p_index(k)) * g.derivative(ring.s_index(k));
  }
  return out;
}

// A point with |s| = 1 and s.p = 0, all s_k away from zero.
std::vector<std::complex<double>> shell_point(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<double> s(n), p(n);
  double norm = 0;
  do {
    norm = 0;
    for (auto& x : s) norm += (x = gauss(rng)) * x;
    norm = std::sqrt(norm);
    for (auto& x : s) x /= norm;
  } while (std::any_of(s.begin(), s.end(), [](double x) { return std::abs(x) < 0.2; }));
  double dot = 0;
  for (int k = 0; k < n; ++k) dot += (p[k] = gauss(rng)) * s[k];
  for (int k = 0; k < n; ++k) p[k] -= dot * s[k];
  std::vector<std::complex<double>> pt;
  for (double x : s) pt.emplace_back(x);
  for (double x : p) pt.emplace_back(x);
  for (int k = 0; k < n; ++k) pt.emplace_back(gauss(rng));
  return pt;
}

std::size_t failing(const Report& rep) {
  return std::count_if(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& c) { return !c.passed(); });
}

const CheckRecord* find(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("canonical bracket on coordinates") {
  const auto& ring = canonical_ring(3);
  CHECK(ring.bracket(ring.s(1), ring.p(1)) == ring.constant(Scalar(1)));
  CHECK(ring.bracket(ring.s(1), ring.p(2)).is_zero());
  CHECK(ring.bracket(ring.alpha(2), ring.p(2)).is_zero());
  CHECK(ring.bracket(ring.s(2).pow(-1), ring.p(2)) == -ring.s(2).pow(-2));
}

TEST_CASE("canonical bracket matches the derivative formula and its axioms") {
  const auto& ring = canonical_ring(3);
  auto vars = slc::testing::all_vars(ring.registry());
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_poly(ring.registry(), rng, 3, 3, vars);
    auto g = random_poly(ring.registry(), rng, 3, 3, vars);
    auto h = random_poly(ring.registry(), rng, 3, 2, vars, true);
    auto fg = ring.bracket(f, g);
    CHECK(fg == canonical_by_hand(ring, f, g));
    CHECK((fg + ring.bracket(g, f)).is_zero());
    CHECK(ring.bracket(f, g * h) == fg * h + g * ring.bracket(f, h));
    auto jacobi = ring.bracket(f, ring.bracket(g, h)) + ring.bracket(g, ring.bracket(h, f)) +
                  ring.bracket(h, fg);
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("realization images of sl(3) generators") {
  const auto& ring = canonical_ring(3);
  const auto& real = realization(3);
  const auto i_unit = Scalar::imag_unit();
  CHECK(real.image("h1") == (ring.alpha(1) - ring.alpha(2)) * i_unit);
  CHECK(real.image("h2") == (ring.alpha(2) - ring.alpha(3)) * i_unit);

  auto l12 = ring.s(1) * ring.p(2) - ring.s(2) * ring.p(1);
  auto sym = ring.alpha(1) * ring.s(2) * ring.s(1).pow(-1) + ring.alpha(2) * ring.s(1) * ring.s(2).pow(-1);
  CHECK(real.image("e1_2") == (l12 - sym * i_unit) * Scalar::fraction(-1, 2));
  CHECK(real.image("e2_1") == (-l12 - sym * i_unit) * Scalar::fraction(-1, 2));

  CHECK_THROWS_AS(build_realization(2), std::invalid_argument);
}

TEST_CASE("the map is not a Lie homomorphism on sl(n) generators") {
  const auto& ctx = sl_context(3);
  const auto& ring = canonical_ring(3);
  const auto& real = realization(3);
  // {h1, e12} = 2 e12 in sl(3), but h1 realizes to a constant
  CHECK(ring.bracket(real.image("h1"), real.image("e1_2")).is_zero());
  CHECK_FALSE(real.apply(ctx.bracket(ctx.h(1), ctx.e(1, 2))).is_zero());
}

TEST_CASE("realized c_12 for n = 3") {
  const auto& ring = canonical_ring(3);
  auto c12 = realization(3).apply(generator_poly(3, GeneratorId::cij(1, 2)));
  auto l = ring.angular(1, 2);
  auto a1 = ring.alpha(1), a2 = ring.alpha(2);
  auto expected = (l * l + a1 * a1 * ring.s(2) * ring.s(2) * ring.s(1).pow(-2) +
                   a2 * a2 * ring.s(1) * ring.s(1) * ring.s(2).pow(-2) + a1 * a2 * Scalar(2)) *
                  Scalar::fraction(-1, 4);
  CHECK(c12 == expected);
}

TEST_CASE("on-shell reduction of the constraints") {
  for (int n = 3; n <= 5; ++n) {
    const auto& ring = canonical_ring(n);
    Polynomial norm(ring.registry()), dot(ring.registry());
    for (int k = 1; k <= n; ++k) {
      norm += ring.s(k) * ring.s(k);
      dot += ring.s(k) * ring.p(k);
    }
    CHECK(reduce_on_shell(norm - Scalar(1), n).is_zero());
    CHECK(reduce_on_shell(dot, n).is_zero());
    CHECK(reduce_on_shell(ring.hamiltonian() - ring.cartesian_hamiltonian(), n).is_zero());
    CHECK_FALSE(reduce_on_shell(norm, n).is_zero());
  }
  const auto& ring = canonical_ring(3);
  // s3^3 = s3 (1 - s1^2 - s2^2)
  auto s3 = ring.s(3);
  auto expected = s3 * (ring.constant(Scalar(1)) - ring.s(1) * ring.s(1) - ring.s(2) * ring.s(2));
  CHECK(reduce_on_shell(s3.pow(3), 3) == expected);
  // p3 is eliminated
  auto r = reduce_on_shell(ring.p(3), 3);
  CHECK(r.max_exponent(ring.p_index(3)) == 0);
  CHECK(r.min_exponent(ring.p_index(3)) == 0);
}

TEST_CASE("reduction is idempotent and preserves values on the constraint surface") {
  const auto& ring = canonical_ring(3);
  auto vars = slc::testing::all_vars(ring.registry());
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poly(ring.registry(), rng, 5, 4, vars, true);
    auto r = reduce_on_shell(p, 3);
    CHECK(reduce_on_shell(r, 3) == r);
    for (int k = 0; k < 3; ++k) {
      auto pt = shell_point(3, rng);
      auto a = p.evaluate(pt), b = r.evaluate(pt);
      CHECK(std::abs(a - b) <= 1e-9 * (1 + std::abs(a)));
    }
  }
}

TEST_CASE("shell_check statuses and float residual") {
  const auto& ring = canonical_ring(3);
  Polynomial norm(ring.registry());
  for (int k = 1; k <= 3; ++k) norm += ring.s(k) * ring.s(k);
  auto one = ring.constant(Scalar(1));
  CHECK(shell_check("a", "t", norm, norm).status == "identical");
  CHECK(shell_check("b", "t", norm, one).status == "on_shell");
  auto bad = shell_check("c", "t", norm, one + one);
  CHECK(bad.status == "FAIL");
  CHECK(bad.residual_terms > 0);
  CHECK(float_residual(norm, one, 20, 5) < 1e-12);
  CHECK(float_residual(norm, one + one, 20, 5) > 0.5);
}

TEST_CASE("realized commutant brackets for n = 3") {
  auto rep = homomorphism_check(3);
  CHECK(rep.checks.size() == 37);  // 36 generator pairs and the float cross-check
  CHECK(rep.all_passed());
  for (const auto& c : rep.checks)
    if (c.relation == "realized-bracket") CHECK(c.status == "identical");
}

TEST_CASE("collapse report for n = 3") {
  auto rep = collapse_report(3);
  CHECK(failing(rep) == 1);
  const auto* printed = find(rep, "g_123 collapse");
  const auto* amended = find(rep, "g_123 collapse (amended)");
  REQUIRE(printed);
  REQUIRE(amended);
  CHECK(printed->status == "FAIL");
  CHECK(amended->passed());
  REQUIRE(find(rep, "c^[3] collapse"));
  CHECK(find(rep, "c^[3] collapse")->passed());
}

TEST_CASE("Racah relations for n = 3") {
  auto rep = racah_check(3);
  CHECK(failing(rep) == 1);
  const auto* printed = find(rep, "rescaled Casimir as a quadratic function of H");
  REQUIRE(printed);
  CHECK(printed->status == "FAIL");
  REQUIRE(find(rep, "rescaled Casimir as a quadratic function of H (amended)"));
  CHECK(find(rep, "rescaled Casimir as a quadratic function of H (amended)")->passed());
}

TEST_CASE("collapse and Racah reports for n = 4") {
  auto col = collapse_report(4);
  CHECK(failing(col) == 1);
  REQUIRE(find(col, "c^[4] collapse"));
  CHECK(find(col, "c^[4] collapse")->status == "FAIL");
  REQUIRE(find(col, "c^[4] collapse (amended)"));
  CHECK(find(col, "c^[4] collapse (amended)")->passed());

  auto rac = racah_check(4);
  CHECK(rac.all_passed());
  CHECK(rac.checks.size() > 100);
}

TEST_CASE("report arguments out of range") {
  CHECK_THROWS_AS(homomorphism_check(2), std::invalid_argument);
  CHECK_THROWS_AS(collapse_report(6), std::invalid_argument);
  CHECK_THROWS_AS(racah_check(7), std::invalid_argument);
}

TEST_CASE("realization for n = 5") {
  auto hom = homomorphism_check(5);
  std::size_t pairs = std::count_if(hom.checks.begin(), hom.checks.end(),
                                    [](const CheckRecord& c) { return c.relation == "realized-bracket"; });
  CHECK(pairs == 4005 - 2775);  // every generator against all c_i and c_ij
  CHECK(hom.all_passed());
  CHECK(collapse_report(5).all_passed());
  CHECK(racah_check(5).all_passed());
}

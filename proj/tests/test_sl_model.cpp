#include "doctest.h"
#include "slc/sl_model.hpp"

using namespace slc;

namespace {

Polynomial P(int n, const std::string& s) { return Polynomial::parse(sl_context(n).registry(), s); }

}  // namespace

TEST_CASE("basis ordering") {
  auto names = sl_basis_names(3);
  std::vector<std::string> expected{"h1", "h2", "e1_2", "e1_3", "e2_3", "e2_1", "e3_1", "e3_2"};
  CHECK(names == expected);
  for (int n = 2; n <= 7; ++n) CHECK(sl_basis_names(n).size() == static_cast<std::size_t>(n * n - 1));
  CHECK_THROWS(build_sl(1));
}

TEST_CASE("defining brackets") {
  {
    const auto& ctx = sl_context(2);
    CHECK(ctx.bracket(ctx.e(1, 2), ctx.e(2, 1)) == ctx.h(1));
  }
  {
    const auto& ctx = sl_context(3);
    CHECK(ctx.bracket(ctx.h(1), ctx.e(1, 2)) == Scalar(2) * ctx.e(1, 2));
  }
  {
    const auto& ctx = sl_context(4);
    CHECK(ctx.bracket(ctx.e(1, 2), ctx.e(2, 3)) == ctx.e(1, 3));
    CHECK(ctx.bracket(ctx.e(1, 3), ctx.e(3, 1)) == ctx.h(1) + ctx.h(2));
  }
}

TEST_CASE("structure constants validate for n up to 7") {
  for (int n = 2; n <= 7; ++n) CHECK_NOTHROW(build_sl(n));
}

TEST_CASE("weights") {
  CHECK(weight_of(3, 1, 2) == std::vector<int>{2, -1});
  CHECK(weight_of(4, 1, 3) == std::vector<int>{1, 1, -1});
  CHECK_THROWS(weight_of(3, 2, 2));
  for (int n = 2; n <= 7; ++n) {
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (j == k) continue;
        auto a = weight_of(n, j, k);
        auto b = weight_of(n, k, j);
        for (int l = 0; l < n - 1; ++l) REQUIRE(a[l] == -b[l]);
        if (j < k) {
          std::vector<int> sum(n - 1, 0);
          for (int s = j; s < k; ++s) {
            auto v = weight_of(n, s, s + 1);
            for (int l = 0; l < n - 1; ++l) sum[l] += v[l];
          }
          REQUIRE(sum == a);
        }
      }
    // simple-root weights form the Cartan matrix
    for (int j = 1; j < n; ++j) {
      auto v = weight_of(n, j, j + 1);
      for (int i = 1; i < n; ++i) {
        int cartan = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
        REQUIRE(v[i - 1] == cartan);
      }
    }
  }
}

TEST_CASE("weights agree with the adjoint action") {
  for (int n = 2; n <= 5; ++n) {
    const auto& ctx = sl_context(n);
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (j == k) continue;
        auto w = weight_of(n, j, k);
        for (int i = 1; i < n; ++i)
          REQUIRE(ctx.bracket(ctx.h(i), ctx.e(j, k)) == Scalar(static_cast<long>(w[i - 1])) * ctx.e(j, k));
      }
  }
}

TEST_CASE("trace Casimirs match the printed low-rank forms") {
  CHECK(trace_casimir(2, 2) == P(2, "1/4 * h1^2 + 1 * e1_2 e2_1"));
  auto c2 = P(3, "1 * e1_2 e2_1 + 1 * e1_3 e3_1 + 1 * e2_3 e3_2 + 1/3 * h1^2 + 1/3 * h1 h2 + 1/3 * h2^2");
  CHECK(trace_casimir(3, 2) == c2);
  const auto& ctx = sl_context(3);
  auto h1 = ctx.h(1);
  auto h2 = ctx.h(2);
  auto p12 = ctx.e(1, 2) * ctx.e(2, 1);
  auto p13 = ctx.e(1, 3) * ctx.e(3, 1);
  auto p23 = ctx.e(2, 3) * ctx.e(3, 2);
  auto p123 = ctx.e(1, 2) * ctx.e(2, 3) * ctx.e(3, 1);
  auto p132 = ctx.e(1, 3) * ctx.e(3, 2) * ctx.e(2, 1);
  auto c3 = p123 + p132 +
            Scalar::fraction(1, 3) * ((h1 + Scalar(2) * h2) * p12 + (h1 - h2) * p13 - (Scalar(2) * h1 + h2) * p23) +
            Scalar::fraction(1, 9) * h1 * h2 * (h1 - h2) + Scalar::fraction(2, 27) * (h1.pow(3) - h2.pow(3));
  CHECK(trace_casimir(3, 3) == c3);
  CHECK_THROWS(trace_casimir(3, 4));
  CHECK_THROWS(trace_casimir(3, 1));
}

TEST_CASE("trace Casimirs are central for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto& ctx = sl_context(n);
    for (int k = 2; k <= n; ++k) {
      auto c = trace_casimir(n, k);
      for (std::size_t v = 0; v < ctx.registry()->size(); ++v)
        REQUIRE(ctx.bracket(c, Polynomial::variable(ctx.registry(), v)).is_zero());
    }
  }
}

TEST_CASE("algebraic Hamiltonians") {
  const auto& ctx = sl_context(3);
  auto p123 = ctx.e(1, 2) * ctx.e(2, 3) * ctx.e(3, 1);
  HamiltonianSpec casimir_only;
  casimir_only.gamma[2] = Scalar(1);
  auto h = algebraic_hamiltonian(3, casimir_only);
  CHECK(h == trace_casimir(3, 2));
  CHECK(ctx.bracket(h, p123).is_zero());
  HamiltonianSpec linear;
  linear.beta[1] = Scalar(1);
  CHECK(algebraic_hamiltonian(3, linear) == ctx.h(1));
  CHECK(algebraic_hamiltonian(3, {}).is_zero());
  HamiltonianSpec mixed;
  mixed.alpha[{1, 2}] = Scalar(3);
  mixed.gamma[3] = Scalar(-1);
  auto hm = algebraic_hamiltonian(3, mixed);
  CHECK(ctx.bracket(hm, p123).is_zero());
  CHECK(ctx.bracket(hm, ctx.e(1, 3) * ctx.e(3, 1)).is_zero());
  HamiltonianSpec bad;
  bad.gamma[4] = Scalar(1);
  CHECK_THROWS(algebraic_hamiltonian(3, bad));
}

#include "slc/sl_model.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace slc {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
}

// Delta_k = sum_{s>=k} (n-s)/n h_s - sum_{s<k} s/n h_s as (h index, coefficient).
std::vector<std::pair<int, Scalar>> delta_coefficients(int n, int k) {
  std::vector<std::pair<int, Scalar>> out;
  for (int s = 1; s < n; ++s) {
    Scalar c = s >= k ? Scalar::fraction(n - s, n) : -Scalar::fraction(s, n);
    out.emplace_back(s, c);
  }
  return out;
}

}  // namespace

std::string h_name(int i) { return "h" + std::to_string(i); }
std::string e_name(int i, int j) { return "e" + std::to_string(i) + "_" + std::to_string(j); }

std::vector<std::string> sl_basis_names(int n) {
  require_n(n);
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back(h_name(i));
  for (int i = 1; i < n; ++i)
    for (int s = 1; s <= n - i; ++s) names.push_back(e_name(i, i + s));
  for (int i = 1; i < n; ++i)
    for (int s = 1; s <= n - i; ++s) names.push_back(e_name(i + s, i));
  return names;
}

StructureConstants build_sl(int n) {
  auto names = sl_basis_names(n);
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx[names[i]] = i;
  auto e = [&](int i, int j) { return idx.at(e_name(i, j)); };
  auto h = [&](int i) { return idx.at(h_name(i)); };

  std::vector<StructureEntry> entries;
  // [h_a, e_jk] = (d_aj - d_{a+1,j} - d_ak + d_{a+1,k}) e_jk
  for (int a = 1; a < n; ++a)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (j == k) continue;
        int w = (a == j) - (a + 1 == j) - (a == k) + (a + 1 == k);
        if (w != 0) entries.push_back({h(a), e(j, k), e(j, k), Scalar(w)});
      }
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  auto add_E = [&](std::size_t lhs_i, std::size_t lhs_j, int r, int c, const Scalar& coeff) {
    if (r != c) {
      entries.push_back({lhs_i, lhs_j, e(r, c), coeff});
    } else {
      for (const auto& [s, dc] : delta_coefficients(n, r)) entries.push_back({lhs_i, lhs_j, h(s), coeff * dc});
    }
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (k == l || e(i, j) >= e(k, l)) continue;
          if (j == k) add_E(e(i, j), e(k, l), i, l, Scalar(1));
          if (l == i) add_E(e(i, j), e(k, l), k, j, Scalar(-1));
        }
    }
  return StructureConstants(std::move(names), entries);
}

SlContext::SlContext(int n)
    : n_(n),
      reg_(make_registry(sl_basis_names(n))),
      sc_(build_sl(n)),
      pb_(PoissonBracket::lie_poisson(sc_, reg_)) {
  for (int i = 1; i < n; ++i) cartan_.push_back(h_index(i));
  pairs_.assign(reg_->size(), {0, 0});
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k) pairs_[e_index(j, k)] = {j, k};
}

std::size_t SlContext::h_index(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("Cartan index out of range");
  return static_cast<std::size_t>(i - 1);
}

std::size_t SlContext::e_index(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) throw std::out_of_range("e index out of range");
  return reg_->index(e_name(i, j));
}

Polynomial SlContext::delta(int k) const {
  if (k < 1 || k > n_) throw std::out_of_range("diagonal index out of range");
  Polynomial out(reg_);
  for (const auto& [s, c] : delta_coefficients(n_, k)) out.add_scaled(h(s), c);
  return out;
}

const SlContext& sl_context(int n) {
  require_n(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SlContext>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SlContext>(n);
  return *slot;
}

std::vector<int> weight_of(int n, int j, int k) {
  require_n(n);
  if (j == k) throw std::invalid_argument("weight_of needs j != k");
  if (j < 1 || k < 1 || j > n || k > n) throw std::out_of_range("weight index out of range");
  std::vector<int> v;
  for (int l = 1; l < n; ++l) v.push_back((l == j) - (l + 1 == j) - (l == k) + (l + 1 == k));
  return v;
}

Polynomial trace_casimir(int n, int k) {
  require_n(n);
  if (k < 2 || k > n) throw std::out_of_range("Casimir order must satisfy 2 <= k <= n");
  const auto& ctx = sl_context(n);
  using Mat = std::vector<std::vector<Polynomial>>;
  Mat m(n, std::vector<Polynomial>(n, Polynomial(ctx.registry())));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = i == j ? ctx.delta(i) : ctx.e(i, j);
  Mat power = m;
  for (int step = 1; step < k - 1; ++step) {
    Mat next(n, std::vector<Polynomial>(n, Polynomial(ctx.registry())));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PolyAccumulator acc(ctx.registry());
        for (int l = 0; l < n; ++l) acc.add(power[i][l] * m[l][j]);
        next[i][j] = std::move(acc).finish();
      }
    power = std::move(next);
  }
  // trace of power * m
  PolyAccumulator acc(ctx.registry());
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) acc.add(power[i][l] * m[l][i]);
  return std::move(acc).finish() * Scalar::fraction(1, k);
}

Polynomial algebraic_hamiltonian(int n, const HamiltonianSpec& spec) {
  const auto& ctx = sl_context(n);
  Polynomial out(ctx.registry());
  for (const auto& [ij, c] : spec.alpha) out.add_scaled(ctx.h(ij.first) * ctx.h(ij.second), c);
  for (const auto& [k, c] : spec.beta) out.add_scaled(ctx.h(k), c);
  for (const auto& [l, c] : spec.gamma) {
    if (l < 2 || l > n) throw std::out_of_range("Casimir order in Hamiltonian spec out of range");
    out.add_scaled(trace_casimir(n, l), c);
  }
  return out;
}

}  // namespace slc

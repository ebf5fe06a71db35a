#pragma once

#include <map>
#include <string>
#include <vector>

namespace slc::detail {

// Injective assignments of the letters into 1..n, lexicographic.
inline std::vector<std::map<char, int>> assignments(const std::string& letters, int n) {
  std::vector<std::map<char, int>> out;
  std::vector<int> pick(letters.size());
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == letters.size()) {
      std::map<char, int> a;
      for (std::size_t k = 0; k < letters.size(); ++k) a[letters[k]] = pick[k];
      out.push_back(std::move(a));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      pick[pos] = v;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::string assignment_str(const std::map<char, int>& a) {
  std::string out = "(";
  for (const auto& [ch, v] : a) {
    if (out.size() > 1) out += ",";
    out += std::string(1, ch) + "=" + std::to_string(v);
  }
  return out + ")";
}

}  // namespace slc::detail

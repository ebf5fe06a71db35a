#include "slc/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace slc {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed(); });
}

void Report::add(Report other) {
  std::move(other.checks.begin(), other.checks.end(), std::back_inserter(checks));
  std::move(other.diagnostics.begin(), other.diagnostics.end(), std::back_inserter(diagnostics));
}

std::string Report::to_json() const {
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    ids.push_back({{"name", c.name},
                   {"relation", c.relation},
                   {"status", c.status},
                   {"residual_terms", c.residual_terms}});
  }
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const auto& d : diagnostics) notes.push_back({{"name", d.name}, {"kind", d.kind}, {"text", d.text}});
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["identities"] = ids;
  doc["diagnostics"] = notes;
  return doc.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed() ? "ok   " : "FAIL ") << c.name << " [" << c.relation << "] " << c.status;
    if (c.residual_terms) out << " residual_terms=" << c.residual_terms;
    out << '\n';
  }
  for (const auto& d : diagnostics) out << "note " << d.kind << ' ' << d.name << ": " << d.text << '\n';
  std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed(); });
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace slc

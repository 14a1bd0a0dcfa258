#include "ecg/types.hpp"

#include <cmath>
#include <set>

namespace ecg {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

std::vector<PanelViolation> validate_panel(const MacroPanel& panel) {
  std::vector<PanelViolation> out;
  auto bad = [&](const std::string& c, int y, const std::string& f,
                 const std::string& r) {
    out.push_back({c, y, f, r});
  };

  std::map<std::string, std::set<int>> years_by_country;
  for (const auto& [key, obs] : panel.observations) {
    const auto& [country, year] = key;
    years_by_country[country].insert(year);

    if (!finite(obs.gdp_pc) || obs.gdp_pc <= 0)
      bad(country, year, "gdp_pc", "must be finite and > 0");
    if (!finite(obs.capital_pc) || obs.capital_pc <= 0)
      bad(country, year, "capital_pc", "must be finite and > 0");
    if (!finite(obs.employment_rate) || obs.employment_rate <= 0 ||
        obs.employment_rate > 1)
      bad(country, year, "employment_rate", "must be in (0, 1]");
    if (!finite(obs.human_capital) || obs.human_capital <= 0)
      bad(country, year, "human_capital", "must be finite and > 0");
    if (!finite(obs.labor_share) || obs.labor_share <= 0 || obs.labor_share >= 1)
      bad(country, year, "labor_share", "must be in (0, 1)");
    if (!finite(obs.population) || obs.population <= 0)
      bad(country, year, "population", "must be finite and > 0");
  }

  // Growth rates need at least one consecutive-year pair per country.
  for (const auto& [country, years] : years_by_country) {
    bool has_pair = false;
    for (int y : years)
      if (years.count(y + 1)) { has_pair = true; break; }
    if (!has_pair)
      bad(country, *years.begin(), "year", "insufficient consecutive years");
  }

  return out;
}

}  // namespace ecg

#include "qcc/model_zoo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcc {
namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 7> kNames = {{
    {ModelKind::morse, "morse"},
    {ModelKind::box, "box"},
    {ModelKind::atom, "atom"},
    {ModelKind::truncated_harmonic, "truncated_harmonic"},
    {ModelKind::coupled_oscillators, "coupled_oscillators"},
    {ModelKind::degenerate_upper, "degenerate_upper"},
    {ModelKind::alternating_odd, "alternating_odd"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<double> from_spacings(double e1, const std::vector<double>& mu) {
  std::vector<double> levels{e1};
  for (double m : mu) levels.push_back(levels.back() + m);
  return levels;
}

std::vector<double> dipoles_or(const ModelParams& p, int n,
                               std::vector<double> fallback) {
  if (p.dipoles.empty()) return fallback;
  require(static_cast<int>(p.dipoles.size()) == n - 1,
          "expected " + std::to_string(n - 1) + " dipoles, got " +
              std::to_string(p.dipoles.size()));
  return p.dipoles;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "";
}

ModelKind model_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

SystemSpec make_model(const ModelParams& p) {
  switch (p.model) {
    case ModelKind::morse: {
      const int n = p.size;
      require(n >= 2, "morse needs N >= 2");
      require(p.b > 0 && p.b * n < 1,
              "morse needs 0 < B < 1/N (got B = " + std::to_string(p.b) + ")");
      require(p.spacing > 0, "morse spacing must be positive");
      std::vector<double> mu;
      for (int k = 1; k < n; ++k) mu.push_back(p.spacing * (1 - p.b * k));
      return SystemSpec(from_spacings(p.ground_energy, mu),
                        dipoles_or(p, n, std::vector<double>(n - 1, 1.0)));
    }
    case ModelKind::box: {
      const int n = p.size;
      require(n >= 2, "box needs N >= 2");
      require(p.c > 0, "box needs C > 0");
      std::vector<double> levels;
      for (int k = 1; k <= n; ++k) levels.push_back(p.c * k * k);
      return SystemSpec(levels,
                        dipoles_or(p, n, std::vector<double>(n - 1, 1.0)));
    }
    case ModelKind::atom: {
      const int n = p.size;
      require(n >= 2, "atom needs N >= 2");
      require(p.z >= 1, "atom needs Z >= 1");
      // Prefactor kept at 13.9 eV to match the published example rather than
      // the Rydberg energy (13.6 eV).
      std::vector<double> levels;
      for (int k = 1; k <= n; ++k) {
        levels.push_back(-13.9 * p.z * p.z / (double(k) * k));
      }
      return SystemSpec(levels,
                        dipoles_or(p, n, std::vector<double>(n - 1, 1.0)));
    }
    case ModelKind::truncated_harmonic: {
      const int n = p.size;
      require(n >= 2, "truncated_harmonic needs N >= 2");
      std::vector<double> levels, d;
      for (int k = 1; k <= n; ++k) levels.push_back(k + 0.5);
      for (int k = 1; k < n; ++k) d.push_back(std::sqrt(double(k)));
      return SystemSpec(levels, dipoles_or(p, n, d));
    }
    case ModelKind::coupled_oscillators: {
      const int l = p.size;
      require(l >= 2, "coupled_oscillators needs l >= 2");
      require(p.delta != 0, "coupled_oscillators needs Delta != 0");
      require(p.spacing > 0, "coupled_oscillators spacing must be positive");
      require(p.spacing + p.delta >= 0,
              "coupled_oscillators needs spacing + Delta >= 0");
      require(p.coupling != 0, "coupled_oscillators needs d != 0");
      const int n = 2 * l;
      std::vector<double> levels, d;
      for (int k = 1; k <= n; ++k) {
        levels.push_back(p.ground_energy + (k - 1) * p.spacing +
                         (k > l ? p.delta : 0.0));
      }
      for (int k = 1; k < n; ++k) {
        if (k == l) {
          d.push_back(p.coupling);
        } else if (p.variant == DipoleVariant::uniform) {
          d.push_back(1.0);
        } else {
          d.push_back(std::sqrt(double(k < l ? k : k - l)));
        }
      }
      return SystemSpec(levels, dipoles_or(p, n, d));
    }
    case ModelKind::degenerate_upper: {
      const int n = p.size;
      require(n >= 2, "degenerate_upper needs N >= 2");
      require(p.upper_energy > p.ground_energy,
              "degenerate_upper needs E_2 > E_1");
      std::vector<double> levels(n, p.upper_energy);
      levels[0] = p.ground_energy;
      return SystemSpec(levels,
                        dipoles_or(p, n, std::vector<double>(n - 1, 1.0)));
    }
    case ModelKind::alternating_odd: {
      const int l = p.size;
      require(l >= 1, "alternating_odd needs l >= 1");
      const int n = 2 * l + 1;
      std::vector<double> odd = p.odd_spacings;
      if (odd.empty()) {
        for (int k = 1; k < l; ++k) odd.push_back(p.mu1 + 0.3 * k);
      }
      require(static_cast<int>(odd.size()) == l - 1,
              "alternating_odd needs l - 1 odd spacings");
      std::vector<double> mu;
      for (int k = 1; k < n; ++k) {
        if (k % 2 == 0) {
          mu.push_back(p.mu2);
        } else {
          mu.push_back(k == 1 ? p.mu1 : odd[(k - 3) / 2]);
        }
      }
      for (double m : mu) require(m >= 0, "alternating_odd spacings must be >= 0");
      require(p.mu1 > 0, "alternating_odd needs mu1 > 0");
      for (std::size_t k = 1; k < mu.size(); ++k) {
        require(mu[k] != p.mu1, "alternating_odd needs mu1 distinct from "
                                "every other spacing");
      }
      return SystemSpec(from_spacings(p.ground_energy, mu),
                        dipoles_or(p, n, std::vector<double>(n - 1, 1.0)));
    }
  }
  throw std::invalid_argument("unknown model");
}

std::optional<SystemSpec> theorem4_family(int n, double d1) {
  if (n < 3 || !(d1 > 0) || !std::isfinite(d1)) return std::nullopt;
  std::vector<double> levels, d;
  for (int k = 1; k <= n; ++k) levels.push_back(k);
  for (int k = 1; k < n; ++k) {
    d.push_back(d1 * std::sqrt(double(k) * (n - k) / (n - 1)));
  }
  return SystemSpec(levels, d);
}

}  // namespace qcc

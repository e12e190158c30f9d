#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcc/system_model.hpp"

namespace qcc {

enum class ModelKind {
  morse,
  box,
  atom,
  truncated_harmonic,
  coupled_oscillators,
  degenerate_upper,
  alternating_odd,
};

std::string_view to_string(ModelKind kind);
/// Throws std::invalid_argument for an unknown name.
ModelKind model_from_string(std::string_view name);

/// Dipole choice for two coupled l-level oscillators: sqrt_ladder uses
/// sqrt(n) below the junction and sqrt(n - l) above it, uniform uses 1 on
/// both sides. The junction dipole d_l is `coupling` in both.
enum class DipoleVariant { sqrt_ladder, uniform };

struct ModelParams {
  ModelKind model = ModelKind::morse;
  /// Number of levels N, except l for coupled_oscillators (N = 2l) and
  /// alternating_odd (N = 2l + 1).
  int size = 4;
  double ground_energy = 0.0;

  double b = 0.1;        ///< morse anharmonicity, 0 < b < 1/N
  double c = 1.0;        ///< box prefactor, c > 0
  double z = 1.0;        ///< atomic number, z >= 1
  double spacing = 1.0;  ///< oscillator quantum (morse, coupled_oscillators)
  double delta = 0.5;    ///< junction offset of coupled oscillators, != 0
  double coupling = 1.0; ///< junction dipole d_l of coupled oscillators
  DipoleVariant variant = DipoleVariant::sqrt_ladder;

  double upper_energy = 1.0;  ///< degenerate_upper: E_2 = ... = E_N

  double mu1 = 2.0;  ///< alternating_odd first spacing
  double mu2 = 1.0;  ///< alternating_odd even spacings
  /// alternating_odd spacings mu_3, mu_5, ..., mu_{2l-1}; defaults to
  /// mu1 + 0.3 k when empty.
  std::vector<double> odd_spacings;

  /// Overrides the model's dipoles when non-empty (N - 1 values).
  std::vector<double> dipoles;
};

/// Builds the named example system. Throws std::invalid_argument when a
/// parameter is outside its valid range.
SystemSpec make_model(const ModelParams& params);

/// Equally spaced system (unit spacing, E_1 = 1) whose v_n all coincide:
/// d_n^2 = n (N - n) / (N - 1) * d1^2, giving v_n = 2 d1^2 / (N - 1).
/// Reproduces d1 = d2 at N = 3 and d1^2 = d3^2 = 3/4 d2^2 at N = 4. Empty
/// when N < 3 or d1 <= 0.
std::optional<SystemSpec> theorem4_family(int n, double d1);

}  // namespace qcc

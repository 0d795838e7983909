#pragma once

#include <cstddef>
#include <span>

#include "msa/error.hpp"
#include "msa/transcript.hpp"

namespace msa::scoring {

/// Speaker role shift rate: N_shifts / (N_turns - 1).
struct ShiftRate {
  std::size_t shifts = 0;
  std::size_t pairs = 0;

  double value() const { return static_cast<double>(shifts) / static_cast<double>(pairs); }
  /// Whole percent, truncated (1/3 -> 33).
  int percent_truncated() const { return static_cast<int>(shifts * 100 / pairs); }

  bool operator==(const ShiftRate&) const = default;
};

/// Counts consecutive-pair inequalities. Works for the closed PragmaticRole
/// set as well as free-form annotation labels. Errors: TooFewTurns (N < 2).
template <typename Role>
ShiftRate count_role_shifts(std::span<const Role> roles) {
  if (roles.size() < 2)
    throw Error(ErrorCode::TooFewTurns, "shift rate needs at least two turns");
  ShiftRate r{0, roles.size() - 1};
  for (std::size_t i = 0; i + 1 < roles.size(); ++i) r.shifts += !(roles[i] == roles[i + 1]);
  return r;
}

double role_shift_rate(std::span<const PragmaticRole> roles);

}  // namespace msa::scoring

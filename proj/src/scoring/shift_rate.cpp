#include "msa/scoring/shift_rate.hpp"

namespace msa::scoring {

double role_shift_rate(std::span<const PragmaticRole> roles) { return count_role_shifts(roles).value(); }

}  // namespace msa::scoring

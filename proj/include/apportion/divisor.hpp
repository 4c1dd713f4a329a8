#pragma once

#include <optional>
#include <vector>

#include "apportion/errors.hpp"
#include "apportion/rational.hpp"
#include "apportion/signpost.hpp"

namespace apportion {

// All seat vectors the divisor method with signpost `s` admits for `votes`
// and `house`. Ties are branched exhaustively, the result is deduplicated and
// sorted lexicographically. Throws TieExplosion when more than `max_ties`
// distinct solutions exist and AdamsHouseTooSmall when gamma(1) = 0 and the
// house cannot seat every positive-vote party. Zero-vote parties always end
// at zero seats.
std::vector<std::vector<int>> apportion(const std::vector<Rat>& votes,
                                        int house, const Signpost& s,
                                        std::size_t max_ties = 64);

// Exact membership test: does a positive multiplier exist under which every
// entry of `seats` is a valid rounding of its scaled vote?
bool is_valid_apportionment(const std::vector<Rat>& votes,
                            const std::vector<int>& seats, const Signpost& s);

// Closed interval of multipliers certifying `seats`; `hi` is absent when the
// interval is unbounded above. Requires a valid apportionment.
struct MultiplierInterval {
  Rat lo;
  std::optional<Rat> hi;
};
MultiplierInterval multiplier_interval(const std::vector<Rat>& votes,
                                       const std::vector<int>& seats,
                                       const Signpost& s);

}  // namespace apportion

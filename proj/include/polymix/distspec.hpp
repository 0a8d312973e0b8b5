// Textual distribution specs used by the CLI:
//   named  --  "lindley:2.0", "gen_lindley3:1.0,0.5,2.0"
//   raw    --  "raw:d=2,beta=1,theta=1;0;1"
// Whitespace-insensitive; numbers parsed as locale-independent decimals.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymix/family.hpp"

namespace polymix {

struct DistSpec {
    // Exactly one of the two forms is populated.
    std::string name;                 // named form: catalog identifier
    std::vector<double> params;       //   with positional parameters
    std::optional<FamilyParams> raw;  // raw form, already validated

    bool is_raw() const { return raw.has_value(); }
};

// Throws std::invalid_argument with a character position on malformed
// input, unknown catalog names, or arity mismatches.
DistSpec parse_dist_spec(std::string_view text);

Family realize(const DistSpec& spec);

struct GridSpec {
    double start;
    double stop;
    std::size_t count;
};

// "start:stop:count" with count >= 2, 0 <= start <= stop.
GridSpec parse_grid(std::string_view text);

std::vector<double> grid_points(const GridSpec& g);

}  // namespace polymix

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "optlearn/grid.hpp"
#include "optlearn/simulator.hpp"

namespace optlearn::io {

// CSV contract: one row per node in lexicographic node order by axis index,
// columns x_1..x_d then the value (or action code), '.' decimal and 17
// significant digits so baselines round-trip bit-exactly.

void write_value_csv(std::ostream& os, const ValueField& field,
                     const std::string& value_column = "value");
void write_policy_csv(std::ostream& os, const PolicyField& policy);
void write_episodes_csv(std::ostream& os, const std::vector<sim::EpisodeResult>& episodes);

// Readers accept exactly what the writers emit (grid reconstructed from the
// coordinate columns); malformed input throws PARSE_ERROR.
ValueField read_value_csv(std::istream& is, Space space);
PolicyField read_policy_csv(std::istream& is);

std::string format_double(double x);  // %.17g

}  // namespace optlearn::io

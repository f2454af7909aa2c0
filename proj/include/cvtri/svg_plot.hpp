#pragma once

#include "cvtri/csv.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cvtri {

/// Classical bound a column is compared against, inferred from its name:
/// pi_* and e_* -> 1, k_* -> 0, ds_* and v_* -> 4. nullopt otherwise.
std::optional<double> guide_level(const std::string& column);

/// Line plot of `columns` against the first column of `table`, with dashed
/// guide lines at the bounds of the plotted criteria. Throws
/// std::out_of_range for unknown columns and std::invalid_argument for an
/// empty table or empty column list.
void render_plot(const CsvTable& table, const std::vector<std::string>& columns,
                 std::ostream& out);

}  // namespace cvtri

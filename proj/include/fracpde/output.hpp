#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fracpde/analysis.hpp"

namespace fracpde {

// %.4e, five significant digits, matching the table resolution.
std::string format_scientific(double v);

// Columns: step,e_inf,rate_inf,e_l2,rate_l2; "*" where a rate is undefined.
void write_rate_csv(const RateTable& table, std::ostream& os);
void write_rate_json(const RateTable& table, std::ostream& os);

// Final-time field, plus the error report when one is available.
void write_solve_csv(const SolutionHistory& history,
                     const std::optional<ErrorReport>& report, std::ostream& os);
void write_solve_json(const SolutionHistory& history,
                      const std::optional<ErrorReport>& report, std::ostream& os);

// Space-time heat map of the whole history.
void emit_heatmap_svg(const SolutionHistory& history, const std::string& path);

// Log-log error-versus-step plot with a reference slope guide (2 for the
// temporal axis, 4 for the spatial axis).
void emit_rate_svg(const RateTable& table, const std::string& path);

}  // namespace fracpde

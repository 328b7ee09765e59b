#pragma once

#include <string>
#include <vector>

namespace infoscale::cli {

/// Shortest form with 17 significant digits ("nan", "inf", "-inf" for non-finite).
std::string format_double(double x);

/// Comma-separated table with a header row.
std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<std::vector<double>>& rows);

}  // namespace infoscale::cli

#pragma once

#include <string>

namespace robust1d {

/// Shortest decimal form with at most 12 significant digits, '.' as the
/// decimal point regardless of locale ("2", "0.1", "1.02", "1e-16").
std::string format_number(double v);

}  // namespace robust1d

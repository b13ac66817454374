#pragma once

#include "oscillab/expsum/weighted_sum.hpp"

#include <string>

namespace oscillab::cli {

/// Standalone SVG, log-log |value| against N, one marker per grid point.
/// Identical input gives identical bytes. Zero moduli are drawn at the floor
/// of the y axis.
std::string render_plot(const expsum::SumProfile& profile, const std::string& title = {});

/// Writes render_plot to `path`; throws precondition on an empty profile, io
/// when the file cannot be written.
void emit_plot(const expsum::SumProfile& profile, const std::string& path, const std::string& title = {});

}  // namespace oscillab::cli

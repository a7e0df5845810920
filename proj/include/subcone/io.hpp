#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "subcone/discrete_function.hpp"
#include "subcone/embedding.hpp"
#include "subcone/hyperbolic.hpp"
#include "subcone/pl_function.hpp"

namespace subcone::io {

// JSON: {"breakpoints":[{"t":"p/q","v":"p/q"},...]}. Rationals are strings.
std::string serialize(const PLFunction& f);
// JSON: {"rho":"p/q","support":[{"t":"p/q","v":"p/q"},...]}
std::string serialize(const DiscreteFunction& g);

/// Throw ParseError prefixed with source and the JSON path of the bad field.
PLFunction parse_pl_function(std::string_view text, std::string_view source = "<input>");
DiscreteFunction parse_discrete_function(std::string_view text, std::string_view source = "<input>");

/// n lines of n comma-separated rationals, optional non-numeric header line.
/// Errors carry source:line:column.
TreeMetric parse_tree_metric_csv(std::string_view text, std::string_view source = "<input>");
std::string serialize_csv(const TreeMetric& a);

/// "rho,phi" or "rho,logphi:<sign>,<log|phi|>".
PolarPoint parse_polar_literal(std::string_view text);

/// 17 significant digits.
std::string format_real(Real x);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace subcone::io

#pragma once

#include "csp/system.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace csp {

/// Labelled-automaton view: one node per state component, labelled with its
/// space (interface inclusions as an xlabel), one edge per nonempty span
/// labelled "name (a,b)". With `labels`, only that label pair is drawn.
std::string toDot(const System& g, const std::string& graphName,
                  std::optional<std::pair<std::size_t, std::size_t>> labels = std::nullopt);

/// The extended matrix for label pair (a, b) as a text grid: bottom rows
/// then state rows, top columns then state columns, entries by span name.
std::string matrixTable(const System& g, const std::string& title, std::size_t a, std::size_t b);

} // namespace csp

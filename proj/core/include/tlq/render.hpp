#pragma once

#include <optional>
#include <string>

#include "tlq/rootlimit.hpp"

namespace tlq {

/// "3", "7/2" for doubled values.
std::string half_label(int x2);

/**
 * Fixed-width label grid: one column per z_{j,m}, one row per line i. Spurious
 * cells are "•", labels read "a,d,g" with a "!" suffix when singular, cycles
 * are bracketed by "‹ ›" and critical j's are fenced by "|".
 */
std::string render_cycle_diagram(const CycleDiagram& d);

/**
 * Rows 0..n of Gamma^{(k)}_j with one column per 2j. With p, critical columns
 * are drawn as ":" where empty and the last row is followed by orbit markers.
 */
std::string render_bratteli(int n, std::optional<int> p);

}  // namespace tlq

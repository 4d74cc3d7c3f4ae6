#pragma once

#include <string>

#include "img/automaton.hpp"

namespace img {

/// Graphviz Moore diagram. Active states are black dots labelled σ, inactive
/// states white. Edges into the identity are not drawn. Output is
/// deterministic: nodes in state order, edges by state then letter.
std::string moore_dot(const AutomatonSpec& spec, const std::string& graph_name = "moore");

}  // namespace img

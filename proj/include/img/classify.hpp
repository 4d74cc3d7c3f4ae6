#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "img/automaton.hpp"
#include "img/periodic.hpp"

namespace img {

/// g|_v = 1 for every |v| >= depth.
struct Finitary {
  unsigned depth;
};

/// g|_cycle = g, every other section on that level is finitary; the
/// nontrivial action is concentrated along ray = cycle^ω.
struct Directed {
  std::string cycle;
  EventuallyPeriodicBits ray;
};

/// Bounded but neither finitary nor directed (e.g. a state above a cycle).
struct OtherBounded {};

/// Two cycles are connected, or a cycle has a chord: not bounded.
struct Unbounded {};

using StateClass = std::variant<Finitary, Directed, OtherBounded, Unbounded>;

StateClass classify_state(std::uint32_t state, const AutomatonSpec& spec);
std::string describe(const StateClass& c);

}  // namespace img

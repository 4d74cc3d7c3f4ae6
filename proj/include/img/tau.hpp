#pragma once

#include <vector>

#include "img/automaton.hpp"
#include "img/periodic.hpp"
#include "img/word.hpp"

namespace img {

/// τ(s) for every state s: τ(s)_m is the parity of the number of active
/// sections of s on level m. These are the images of the generators in the
/// abelianization (Z/2)^ω of the full tree automorphism group.
///
/// Solves τ(s)_0 = active(s), τ(s)_m = τ(s|0)_{m-1} + τ(s|1)_{m-1} by
/// iterating the state vector over GF(2) until it repeats.
using TauTable = std::vector<EventuallyPeriodicBits>;
TauTable generator_tau(const AutomatonSpec& spec);

/// τ(g) as the sum of τ over the letters of g (τ is a homomorphism onto an
/// abelian group of exponent 2, so signs do not matter).
EventuallyPeriodicBits tau(const Word& g, const TauTable& table);

/// g acts transitively on every level iff τ(g) = (1,1,1,...).
bool is_level_transitive_element(const Word& g, const TauTable& table);

}  // namespace img

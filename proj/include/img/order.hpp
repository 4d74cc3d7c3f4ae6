#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "img/automaton.hpp"
#include "img/tau.hpp"
#include "img/word.hpp"

namespace img {

struct FiniteOrder {
  std::uint64_t order;
};

enum class InfiniteWitness {
  level_transitive,  ///< τ(g) = (1,1,...)
  abelian_image,     ///< nonzero image in a torsion-free abelianization
  torsion_free,      ///< nontrivial element of a torsion-free group
};

struct InfiniteOrder {
  InfiniteWitness witness;
};

/// No trivial power found up to `bound`.
struct UnknownOrder {
  std::uint64_t bound;
};

using OrderResult = std::variant<FiniteOrder, InfiniteOrder, UnknownOrder>;

struct OrderOptions {
  unsigned max_exp = 20;
  unsigned small_scan = 64;
  /// Family knowledge: every nontrivial element has infinite order.
  bool torsion_free = false;
  /// Family knowledge: nonzero result proves infinite order.
  std::function<bool(const Word&)> free_abelian_nonzero;
};

/// Witnesses for infinite order first, then g^m = 1 for m = 1..small_scan and
/// m = 2^j for 2^j <= 2^max_exp. The first trivial power found is the order.
OrderResult order_probe(const Word& g, const AutomatonSpec& spec, const TauTable& tau_table,
                        const OrderOptions& options = {});

std::string describe(const OrderResult& r);
std::string to_string(InfiniteWitness w);

}  // namespace img

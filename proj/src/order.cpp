#include "img/order.hpp"

#include "img/selfsimilar.hpp"

namespace img {

OrderResult order_probe(const Word& g, const AutomatonSpec& spec, const TauTable& tau_table,
                        const OrderOptions& options) {
  const Word r = reduce(g, spec);
  if (is_trivial(r, spec)) return FiniteOrder{1};

  if (is_level_transitive_element(r, tau_table)) return InfiniteOrder{InfiniteWitness::level_transitive};
  if (options.free_abelian_nonzero && options.free_abelian_nonzero(r))
    return InfiniteOrder{InfiniteWitness::abelian_image};
  if (options.torsion_free) return InfiniteOrder{InfiniteWitness::torsion_free};

  for (std::uint64_t m = 2; m <= options.small_scan; ++m)
    if (is_trivial_power(r, m, spec)) return FiniteOrder{m};

  // Beyond the scan only powers of two are tried; if g^(2^j) = 1 is the
  // first hit then the order divides 2^j and exceeds 2^(j-1).
  for (unsigned j = 1; j <= options.max_exp; ++j) {
    const std::uint64_t m = std::uint64_t{1} << j;
    if (m <= options.small_scan) continue;
    if (is_trivial_power(r, m, spec)) return FiniteOrder{m};
  }
  return UnknownOrder{std::uint64_t{1} << options.max_exp};
}

std::string to_string(InfiniteWitness w) {
  switch (w) {
    case InfiniteWitness::level_transitive: return "level-transitive";
    case InfiniteWitness::abelian_image: return "nonzero abelian image";
    case InfiniteWitness::torsion_free: return "torsion-free group";
  }
  return "?";
}

std::string describe(const OrderResult& r) {
  struct {
    std::string operator()(const FiniteOrder& f) const { return std::to_string(f.order); }
    std::string operator()(const InfiniteOrder& i) const { return "infinite (" + to_string(i.witness) + ")"; }
    std::string operator()(const UnknownOrder& u) const {
      return "unknown (no trivial power up to " + std::to_string(u.bound) + ")";
    }
  } visitor;
  return std::visit(visitor, r);
}

}  // namespace img

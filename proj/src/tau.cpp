#include "img/tau.hpp"

#include <map>

namespace img {

TauTable generator_tau(const AutomatonSpec& spec) {
  const std::size_t n = spec.size();
  std::vector<std::vector<std::uint8_t>> history;
  std::map<std::vector<std::uint8_t>, std::size_t> first_seen;

  std::vector<std::uint8_t> cur(n);
  for (std::size_t s = 0; s < n; ++s) cur[s] = spec.state(static_cast<std::uint32_t>(s)).active ? 1 : 0;

  std::size_t repeat_from = 0;
  for (;;) {
    auto [it, fresh] = first_seen.emplace(cur, history.size());
    if (!fresh) {
      repeat_from = it->second;
      break;
    }
    history.push_back(cur);
    std::vector<std::uint8_t> next(n, 0);
    for (std::size_t s = 0; s < n; ++s)
      for (std::int32_t sec : spec.state(static_cast<std::uint32_t>(s)).sections)
        if (sec != kIdentity) next[s] ^= cur[static_cast<std::size_t>(sec)];
    cur = std::move(next);
  }

  TauTable table;
  table.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::uint8_t> pre, per;
    for (std::size_t m = 0; m < repeat_from; ++m) pre.push_back(history[m][s]);
    for (std::size_t m = repeat_from; m < history.size(); ++m) per.push_back(history[m][s]);
    table.emplace_back(std::move(pre), std::move(per));
  }
  return table;
}

EventuallyPeriodicBits tau(const Word& g, const TauTable& table) {
  // Letters of the same state cancel in pairs; count parities first.
  std::vector<std::uint8_t> parity(table.size(), 0);
  for (Symbol s : g) parity[s.state] ^= 1;
  EventuallyPeriodicBits sum = EventuallyPeriodicBits::constant(0);
  for (std::size_t s = 0; s < table.size(); ++s)
    if (parity[s]) sum = sum + table[s];
  return sum;
}

bool is_level_transitive_element(const Word& g, const TauTable& table) {
  return tau(g, table).is_constant(1);
}

}  // namespace img

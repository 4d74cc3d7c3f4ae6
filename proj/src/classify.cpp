#include "img/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace img {

namespace {

// States reachable from `s` (including s), identity excluded.
std::vector<std::uint32_t> reachable(std::uint32_t s, const AutomatonSpec& spec) {
  std::vector<bool> seen(spec.size(), false);
  std::vector<std::uint32_t> order, stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    order.push_back(q);
    for (std::int32_t sec : spec.state(q).sections)
      if (sec != kIdentity && !seen[static_cast<std::size_t>(sec)]) {
        seen[static_cast<std::size_t>(sec)] = true;
        stack.push_back(static_cast<std::uint32_t>(sec));
      }
  }
  return order;
}

bool reaches(std::uint32_t from, std::uint32_t to, const AutomatonSpec& spec) {
  auto r = reachable(from, spec);
  return std::find(r.begin(), r.end(), to) != r.end();
}

}  // namespace

StateClass classify_state(std::uint32_t s, const AutomatonSpec& spec) {
  const auto reach = reachable(s, spec);

  // Strongly connected pieces among reachable states: q ~ r iff each reaches the other.
  std::vector<std::vector<std::uint32_t>> comps;
  std::set<std::uint32_t> placed;
  for (auto q : reach) {
    if (placed.count(q)) continue;
    std::vector<std::uint32_t> comp{q};
    placed.insert(q);
    for (auto r : reach)
      if (!placed.count(r) && reaches(q, r, spec) && reaches(r, q, spec)) {
        comp.push_back(r);
        placed.insert(r);
      }
    comps.push_back(std::move(comp));
  }

  std::vector<const std::vector<std::uint32_t>*> cycles;
  for (const auto& comp : comps) {
    std::size_t inner = 0;
    std::set<std::uint32_t> members(comp.begin(), comp.end());
    for (auto q : comp)
      for (std::int32_t sec : spec.state(q).sections)
        if (sec != kIdentity && members.count(static_cast<std::uint32_t>(sec))) ++inner;
    if (inner == 0) continue;               // acyclic singleton
    if (inner != comp.size()) return Unbounded{};  // not a simple cycle
    cycles.push_back(&comp);
  }

  if (cycles.empty()) {
    // Longest path to the identity.
    std::function<unsigned(std::int32_t)> depth = [&](std::int32_t q) -> unsigned {
      if (q == kIdentity) return 0;
      const State& st = spec.state(static_cast<std::uint32_t>(q));
      unsigned d = std::max(depth(st.sections[0]), depth(st.sections[1]));
      if (d == 0 && !st.active) return 0;
      return d + 1;
    };
    return Finitary{depth(static_cast<std::int32_t>(s))};
  }

  // A cycle reaching another cycle means unbounded growth of active sections.
  for (const auto* a : cycles)
    for (const auto* b : cycles)
      if (a != b && reaches(a->front(), b->front(), spec)) return Unbounded{};

  const auto& own = *cycles.front();
  const bool on_cycle = cycles.size() == 1 && std::find(own.begin(), own.end(), s) != own.end();
  if (!on_cycle) return OtherBounded{};

  std::set<std::uint32_t> members(own.begin(), own.end());
  std::string cycle;
  std::vector<std::uint8_t> bits;
  std::uint32_t q = s;
  do {
    const State& st = spec.state(q);
    for (unsigned x = 0; x < 2; ++x) {
      const std::int32_t sec = st.sections[x];
      if (sec != kIdentity && members.count(static_cast<std::uint32_t>(sec))) {
        cycle += static_cast<char>('0' + x);
        bits.push_back(static_cast<std::uint8_t>(x));
        q = static_cast<std::uint32_t>(sec);
        break;
      }
    }
  } while (q != s);
  return Directed{cycle, EventuallyPeriodicBits({}, bits)};
}

std::string describe(const StateClass& c) {
  struct {
    std::string operator()(const Finitary& f) const { return "finitary(" + std::to_string(f.depth) + ")"; }
    std::string operator()(const Directed& d) const {
      return "directed(cycle " + d.cycle + ", ray " + to_string(d.ray) + ")";
    }
    std::string operator()(const OtherBounded&) const { return "bounded"; }
    std::string operator()(const Unbounded&) const { return "unbounded"; }
  } v;
  return std::visit(v, c);
}

}  // namespace img

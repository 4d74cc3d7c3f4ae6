#include "img/nucleus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "img/selfsimilar.hpp"

namespace img {

ElementTable::ElementTable(const AutomatonSpec& spec, unsigned fingerprint_depth)
    : spec_(spec), depth_(fingerprint_depth) {}

std::uint64_t ElementTable::fingerprint(const Word& w) const {
  std::uint64_t h = 1469598103934665603ull;
  const std::uint64_t count = std::uint64_t{1} << depth_;
  for (std::uint64_t i = 0; i < count; ++i) {
    auto letters = Vertex::from_index(i, depth_).letters();
    act_in_place(w, letters, spec_);
    h ^= Vertex(std::move(letters)).index();
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t ElementTable::intern(const Word& raw) {
  Word w = reduce(raw, spec_);
  const std::uint64_t fp = fingerprint(w);
  auto [lo, hi] = buckets_.equal_range(fp);
  for (auto it = lo; it != hi; ++it) {
    const std::size_t id = it->second;
    if (reps_[id] == w || equal(reps_[id], w, spec_)) {
      if (shortlex_less(w, reps_[id])) reps_[id] = std::move(w);
      return id;
    }
  }
  reps_.push_back(std::move(w));
  buckets_.emplace(fp, reps_.size() - 1);
  return reps_.size() - 1;
}

std::vector<Word> standard_seed(const AutomatonSpec& spec) {
  std::vector<Word> seed{Word{}};
  for (std::uint32_t s = 0; s < spec.size(); ++s) {
    seed.push_back(gen(spec, s));
    if (!spec.state(s).involution) seed.push_back(gen(spec, s, true));
  }
  return seed;
}

namespace {

// Section graph over element classes, grown on demand.
class SectionGraph {
 public:
  SectionGraph(const AutomatonSpec& spec, ElementTable& table, std::size_t cap)
      : spec_(spec), table_(table), cap_(cap) {}

  void explore(std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t id = stack.back();
      stack.pop_back();
      if (id < edges_.size() && edges_[id][0] != kUnset) continue;
      if (edges_.size() < table_.size()) edges_.resize(table_.size(), {kUnset, kUnset});
      const WreathPair p = wreath_decompose(table_.rep(id), spec_);
      const std::size_t e0 = table_.intern(p.section0);
      const std::size_t e1 = table_.intern(p.section1);
      if (table_.size() > cap_)
        throw NonContractingError("nucleus search exceeded " + std::to_string(cap_) +
                                  " elements; the recursion is possibly non-contracting");
      if (edges_.size() < table_.size()) edges_.resize(table_.size(), {kUnset, kUnset});
      edges_[id] = {e0, e1};
      for (std::size_t e : {e0, e1})
        if (edges_[e][0] == kUnset) stack.push_back(e);
    }
  }

  /// Classes lying on a cycle, together with everything reachable from them.
  std::set<std::size_t> recurrent() const {
    const std::size_t n = edges_.size();
    // Tarjan SCC, iterative.
    std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::size_t> comp_size;
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
      if (edges_[root][0] == kUnset || index[root] != kUnset) continue;
      std::vector<std::pair<std::size_t, unsigned>> call{{root, 0}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!call.empty()) {
        auto& [v, next] = call.back();
        if (next < 2) {
          const std::size_t w = edges_[v][next++];
          if (edges_[w][0] == kUnset) continue;
          if (index[w] == kUnset) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        const std::size_t done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        if (low[done] == index[done]) {
          const std::size_t c = comp_size.size();
          std::size_t members = 0;
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = c;
            ++members;
          } while (w != done);
          comp_size.push_back(members);
        }
      }
    }
    std::vector<std::size_t> frontier;
    std::set<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v) {
      if (edges_[v][0] == kUnset) continue;
      const bool cyclic = comp_size[comp[v]] > 1 || edges_[v][0] == v || edges_[v][1] == v;
      if (cyclic && out.insert(v).second) frontier.push_back(v);
    }
    while (!frontier.empty()) {
      const std::size_t v = frontier.back();
      frontier.pop_back();
      for (std::size_t w : edges_[v])
        if (edges_[w][0] != kUnset && out.insert(w).second) frontier.push_back(w);
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  const AutomatonSpec& spec_;
  ElementTable& table_;
  std::size_t cap_;
  std::vector<std::array<std::size_t, 2>> edges_;
};

}  // namespace

std::vector<Word> nucleus_closure(const AutomatonSpec& spec, const std::vector<Word>& seed,
                                  const NucleusOptions& options) {
  ElementTable table(spec);
  SectionGraph graph(spec, table, options.max_elements);
  for (const Word& w : seed) graph.explore(table.intern(w));

  std::set<std::size_t> current = graph.recurrent();
  std::set<std::pair<std::size_t, std::size_t>> tried;
  for (unsigned round = 0;; ++round) {
    if (round >= options.max_rounds)
      throw NonContractingError("nucleus search did not stabilise within " +
                                std::to_string(options.max_rounds) +
                                " rounds; the recursion is possibly non-contracting");
    const std::vector<std::size_t> members(current.begin(), current.end());
    for (std::size_t g : members)
      for (std::size_t h : members)
        if (tried.emplace(g, h).second)
          graph.explore(table.intern(multiply(table.rep(g), table.rep(h), spec)));
    std::set<std::size_t> next = graph.recurrent();
    if (next == current) break;
    current = std::move(next);
  }

  std::vector<Word> out;
  for (std::size_t id : current) out.push_back(table.rep(id));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace img

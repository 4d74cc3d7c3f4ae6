#include "img/selfsimilar.hpp"

#include <unordered_set>
#include <utility>

namespace img {

Vertex::Vertex(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto x : letters_)
    if (x > 1) throw DomainError("vertex letters must be 0 or 1");
}

Vertex Vertex::parse(std::string_view bits) {
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("vertex must be a bitstring, got \"" + std::string(bits) + "\"");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Vertex(std::move(out));
}

Vertex Vertex::from_index(std::uint64_t index, unsigned level) {
  std::vector<std::uint8_t> out(level);
  for (unsigned i = 0; i < level; ++i) out[level - 1 - i] = static_cast<std::uint8_t>((index >> i) & 1u);
  return Vertex(std::move(out));
}

std::uint64_t Vertex::index() const {
  std::uint64_t r = 0;
  for (auto x : letters_) r = (r << 1) | x;
  return r;
}

std::string Vertex::str() const {
  std::string s;
  for (auto x : letters_) s += static_cast<char>('0' + x);
  return s;
}

Vertex Vertex::concat(const Vertex& other) const {
  auto out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Vertex(std::move(out));
}

WreathPair wreath_decompose(const Word& g, const AutomatonSpec& spec) {
  std::vector<Symbol> raw[2];
  bool swap = false;
  for (unsigned start : {0u, 1u}) {
    unsigned cur = start;
    for (Symbol s : g) {
      const State& st = spec.state(s.state);
      const unsigned flip = st.active ? 1u : 0u;
      // s^-1 = <(s|_{x^σ})^-1>: read the section on the image letter.
      const unsigned read = s.inverse ? cur ^ flip : cur;
      const std::int32_t sec = st.sections[read];
      if (sec != kIdentity) raw[start].push_back({static_cast<std::uint32_t>(sec), s.inverse});
      cur ^= flip;
    }
    if (start == 0) swap = (cur == 1);
  }
  return {reduce(raw[0], spec), reduce(raw[1], spec), swap};
}

Word restrict_to(const Word& g, const Vertex& v, const AutomatonSpec& spec) {
  Word cur = reduce(g, spec);
  for (std::size_t i = 0; i < v.level() && !cur.empty(); ++i)
    cur = wreath_decompose(cur, spec).section(v[i]);
  return cur;
}

void act_in_place(const Word& g, std::vector<std::uint8_t>& letters, const AutomatonSpec& spec) {
  for (Symbol s : g) {
    std::int32_t q = static_cast<std::int32_t>(s.state);
    for (auto& x : letters) {
      if (q == kIdentity) break;
      const State& st = spec.state(static_cast<std::uint32_t>(q));
      const std::uint8_t y = x ^ (st.active ? 1 : 0);
      q = st.sections[s.inverse ? y : x];
      x = y;
    }
  }
}

Vertex act(const Word& g, const Vertex& v, const AutomatonSpec& spec) {
  auto letters = v.letters();
  act_in_place(g, letters, spec);
  return Vertex(std::move(letters));
}

bool is_trivial(const Word& g, const AutomatonSpec& spec) {
  Word start = reduce(g, spec);
  std::unordered_set<Word, WordHash> seen{start};
  std::vector<Word> stack{std::move(start)};
  while (!stack.empty()) {
    Word h = std::move(stack.back());
    stack.pop_back();
    if (h.empty()) continue;
    WreathPair p = wreath_decompose(h, spec);
    if (p.swap) return false;
    for (Word* sec : {&p.section0, &p.section1})
      if (!sec->empty() && seen.insert(*sec).second) stack.push_back(std::move(*sec));
  }
  return true;
}

bool is_trivial_power(const Word& g, std::uint64_t m, const AutomatonSpec& spec) {
  if (m == 0) return true;
  struct Item {
    Word w;
    std::uint64_t m;
    bool operator==(const Item&) const = default;
  };
  struct ItemHash {
    std::size_t operator()(const Item& i) const noexcept {
      return WordHash{}(i.w) ^ (std::hash<std::uint64_t>{}(i.m) * 0x9e3779b97f4a7c15ull);
    }
  };
  Item start{cyclic_reduce(g, spec), m};
  std::unordered_set<Item, ItemHash> seen{start};
  std::vector<Item> stack{std::move(start)};
  auto push = [&](Word w, std::uint64_t e) {
    if (w.empty()) return;
    Item it{cyclic_reduce(w, spec), e};
    if (seen.insert(it).second) stack.push_back(std::move(it));
  };
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    WreathPair p = wreath_decompose(it.w, spec);
    if (p.swap) {
      if (it.m % 2 == 1) return false;
      push(multiply(p.section0, p.section1, spec), it.m / 2);
    } else {
      push(std::move(p.section0), it.m);
      push(std::move(p.section1), it.m);
    }
  }
  return true;
}

bool equal(const Word& g, const Word& h, const AutomatonSpec& spec) {
  return is_trivial(multiply(g, inverse(h, spec), spec), spec);
}

std::vector<std::uint64_t> level_permutation(const Word& g, unsigned depth,
                                             const AutomatonSpec& spec, unsigned depth_cap) {
  if (depth > depth_cap)
    throw DomainError("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(depth_cap));
  const Word r = reduce(g, spec);
  const std::uint64_t count = std::uint64_t{1} << depth;
  std::vector<std::uint64_t> image(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto letters = Vertex::from_index(i, depth).letters();
    act_in_place(r, letters, spec);
    image[i] = Vertex(std::move(letters)).index();
  }
  return image;
}

std::vector<std::vector<Vertex>> orbit_on_level(const Word& g, unsigned depth,
                                                const AutomatonSpec& spec, unsigned depth_cap) {
  const auto image = level_permutation(g, depth, spec, depth_cap);
  std::vector<bool> done(image.size(), false);
  std::vector<std::vector<Vertex>> cycles;
  for (std::uint64_t i = 0; i < image.size(); ++i) {
    if (done[i]) continue;
    std::vector<Vertex> cycle;
    for (std::uint64_t j = i; !done[j]; j = image[j]) {
      done[j] = true;
      cycle.push_back(Vertex::from_index(j, depth));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace img

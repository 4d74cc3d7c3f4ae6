#include "img/word.hpp"

#include <algorithm>

namespace img {

Word Word::formal_inverse() const {
  std::vector<Symbol> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverted());
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Symbol> out;
  out.reserve(letters_.size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the packed symbols.
  std::uint64_t h = 1469598103934665603ull;
  for (Symbol s : w) {
    std::uint64_t code = (std::uint64_t{s.state} << 1) | (s.inverse ? 1u : 0u);
    h ^= code;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Word free_reduce(std::span<const Symbol> raw) {
  std::vector<Symbol> out;
  out.reserve(raw.size());
  for (Symbol s : raw) {
    if (!out.empty() && out.back() == s.inverted())
      out.pop_back();
    else
      out.push_back(s);
  }
  return Word(std::move(out));
}

Word free_reduce(std::span<const Symbol> raw,
                 const std::function<bool(std::uint32_t)>& involutive) {
  std::vector<Symbol> out;
  out.reserve(raw.size());
  for (Symbol s : raw) {
    if (involutive(s.state)) s.inverse = false;
    if (!out.empty() && out.back() == s.inverted())
      out.pop_back();
    else if (!out.empty() && out.back() == s && !s.inverse && involutive(s.state))
      out.pop_back();
    else
      out.push_back(s);
  }
  return Word(std::move(out));
}

Word substitute(const Word& g, std::span<const Word> image) {
  std::vector<Symbol> raw;
  for (Symbol s : g) {
    const Word& img = image[s.state];
    if (!s.inverse)
      raw.insert(raw.end(), img.begin(), img.end());
    else
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        raw.push_back(it->inverted());
  }
  return free_reduce(raw);
}

}  // namespace img

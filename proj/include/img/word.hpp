#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace img {

/// Raised for malformed input: unknown generators, bad kneading data, syntax.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One signed generator letter: a state index of an automaton and a sign.
struct Symbol {
  std::uint32_t state = 0;
  bool inverse = false;

  constexpr Symbol inverted() const { return {state, !inverse}; }

  friend constexpr bool operator==(Symbol, Symbol) = default;
  // (index, sign) with the positive letter first.
  friend constexpr std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (auto c = a.state <=> b.state; c != 0) return c;
    return a.inverse <=> b.inverse;
  }
};

/// A word over signed generator symbols. The empty word is the identity.
///
/// Word itself is only a sequence; reduction is done by free_reduce() or by
/// the automaton-aware reduce(), which also cancels involutions.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Symbol> letters) : letters_(letters) {}

  static Word generator(std::uint32_t state, bool inverse = false) {
    return Word{{state, inverse}};
  }

  std::span<const Symbol> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Formal inverse: letters reversed and signs flipped (no reduction).
  Word formal_inverse() const;
  /// Concatenation without reduction.
  Word concat(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> letters_;
};

/// Shortlex order: shorter first, then lexicographic by (index, sign).
bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Free-group normal form: cancels adjacent s, s^-1 pairs.
Word free_reduce(std::span<const Symbol> raw);

/// Free reduction in a free product of cyclic groups of order 2 on the states
/// flagged by `involutive`: those letters lose their sign and ss cancels.
Word free_reduce(std::span<const Symbol> raw,
                 const std::function<bool(std::uint32_t)>& involutive);

/// Free-group word applying `image[s]` to every letter s (inverse letters get
/// the formal inverse), then freely reduced.
Word substitute(const Word& g, std::span<const Word> image);

}  // namespace img

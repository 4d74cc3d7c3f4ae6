#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "img/word.hpp"

namespace img {

/// Section target meaning "the identity automorphism".
inline constexpr std::int32_t kIdentity = -1;

/// One state of a binary Mealy automaton: g = <g|0, g|1> or <g|0, g|1>σ.
/// Each section is another state or the identity, so restricting a word
/// never makes it longer.
struct State {
  std::string name;
  std::array<std::int32_t, 2> sections{kIdentity, kIdentity};
  bool active = false;
  /// The state is known to have order 2; words drop its sign.
  bool involution = false;
};

/// A finite automaton over the alphabet {0,1} whose states generate a
/// self-similar group acting on the right of the binary tree.
class AutomatonSpec {
 public:
  AutomatonSpec() = default;
  explicit AutomatonSpec(std::vector<State> states);

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const State& state(std::uint32_t i) const { return states_[i]; }
  const std::vector<State>& states() const { return states_; }
  std::optional<std::uint32_t> find(std::string_view name) const;
  std::uint32_t index_of(std::string_view name) const;  // throws DomainError
  std::vector<std::string> names() const;
  bool has_involutions() const { return has_involutions_; }

  /// Appends the states of `other`, renaming by `suffix`; returns the
  /// index offset of the appended block.
  std::uint32_t append(const AutomatonSpec& other, std::string_view suffix);

 private:
  void validate() const;

  std::vector<State> states_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  bool has_involutions_ = false;
};

// Group-word arithmetic relative to an automaton. Every result is reduced:
// freely, and with involutive states unsigned and cancelling in pairs.

Word reduce(std::span<const Symbol> raw, const AutomatonSpec& spec);
inline Word reduce(const Word& raw, const AutomatonSpec& spec) {
  return reduce(raw.letters(), spec);
}
Word multiply(const Word& g, const Word& h, const AutomatonSpec& spec);
Word inverse(const Word& g, const AutomatonSpec& spec);
/// g^e for any integer e.
Word power(const Word& g, long long e, const AutomatonSpec& spec);
/// g^h = h^-1 g h.
Word conjugate(const Word& g, const Word& h, const AutomatonSpec& spec);
/// [g,h] = g^-1 h^-1 g h.
Word commutator(const Word& g, const Word& h, const AutomatonSpec& spec);
/// Removes cancelling first/last letter pairs (conjugation-invariant form).
Word cyclic_reduce(const Word& g, const AutomatonSpec& spec);
/// The generator (or its inverse) as a one-letter reduced word.
Word gen(const AutomatonSpec& spec, std::uint32_t state, bool inverse = false);

/// Automaton JSON: {"states":[{"name","sec0","sec1","active"[,"involution"]}]}
/// with "1" standing for the identity section.
AutomatonSpec spec_from_json(std::string_view text);
std::string spec_to_json(const AutomatonSpec& spec, int indent = 2);

}  // namespace img

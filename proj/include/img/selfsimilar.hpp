#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "img/automaton.hpp"
#include "img/word.hpp"

namespace img {

/// A vertex of the binary tree: a finite word over {0,1}; the root is empty.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<std::uint8_t> letters);
  /// Parses a bitstring such as "0110"; "" is the root.
  static Vertex parse(std::string_view bits);
  /// The vertex at `level` whose letters are the binary digits of `index`,
  /// first letter most significant.
  static Vertex from_index(std::uint64_t index, unsigned level);

  std::size_t level() const { return letters_.size(); }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::vector<std::uint8_t>& letters() { return letters_; }
  std::uint64_t index() const;
  std::string str() const;
  Vertex concat(const Vertex& other) const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// g = <section0, section1> followed by the swap σ when `swap` is set.
struct WreathPair {
  Word section0;
  Word section1;
  bool swap = false;

  const Word& section(unsigned x) const { return x == 0 ? section0 : section1; }
  friend bool operator==(const WreathPair&, const WreathPair&) = default;
};

/// One level of the wreath recursion. The group acts on the right, words
/// compose left to right, and <g0,g1>σ applies the sections before swapping.
WreathPair wreath_decompose(const Word& g, const AutomatonSpec& spec);

/// g|_v, the section of g at vertex v (g|_{vx} = g|_v|_x).
Word restrict_to(const Word& g, const Vertex& v, const AutomatonSpec& spec);

/// The image of v under g.
Vertex act(const Word& g, const Vertex& v, const AutomatonSpec& spec);
/// In-place action on a letter buffer.
void act_in_place(const Word& g, std::vector<std::uint8_t>& letters, const AutomatonSpec& spec);

/// Decides g = 1: explores every section of g (finitely many, since sections
/// never lengthen words) and fails as soon as one of them is active.
bool is_trivial(const Word& g, const AutomatonSpec& spec);

/// Decides g^m = 1 without expanding the power: uses
/// g^m = <g0^m, g1^m> for inactive g, and g^m = <(g0 g1)^{m/2}, ...> for
/// active g and even m (active g with odd m is never trivial).
bool is_trivial_power(const Word& g, std::uint64_t m, const AutomatonSpec& spec);

/// g and h define the same tree automorphism.
bool equal(const Word& g, const Word& h, const AutomatonSpec& spec);

inline constexpr unsigned kDefaultOrbitDepthCap = 12;

/// Images of all vertices of level `depth` (indexed via Vertex::index()).
std::vector<std::uint64_t> level_permutation(const Word& g, unsigned depth,
                                             const AutomatonSpec& spec,
                                             unsigned depth_cap = kDefaultOrbitDepthCap);

/// Cycle decomposition of g on X^depth. Cycles start at their smallest
/// vertex and are listed by that vertex.
std::vector<std::vector<Vertex>> orbit_on_level(const Word& g, unsigned depth,
                                                const AutomatonSpec& spec,
                                                unsigned depth_cap = kDefaultOrbitDepthCap);

}  // namespace img

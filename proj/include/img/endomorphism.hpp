#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "img/kneading.hpp"

namespace img {

/// One element of an enumerated subgroup: its shortlex-least spelling in the
/// given generators (indices into the generator list) and the group word.
struct SubgroupElement {
  std::vector<unsigned> spelling;
  Word word;
};

/// Breadth-first enumeration of the subgroup generated by `generators`:
/// shorter spellings first, then lexicographic in generator order; the first
/// spelling of each element wins. Stops after `max_size` elements or words of
/// length `max_length`.
std::vector<SubgroupElement> enumerate_subgroup(const std::vector<Word>& generators,
                                                const AutomatonSpec& spec,
                                                std::size_t max_size = 4096,
                                                std::size_t max_length = 64);

/// The endomorphism of K_{w,v} and its parameters: Ψ(a_1^t) = <b_k, a_n^s>,
/// <a_n^s, b_k> dihedral of order 2^{m+1}, <a_1^t, b_1> dihedral of order
/// 2^{m+2}, φ(b_k) = a_1^{u b_1^{y_k}}.
struct EndomorphismData {
  unsigned m = 1;
  Word r;  ///< auxiliary element of <b_1> when n = 1, k >= 2
  Word s;
  Word t;
  /// u as a group word, and spelled in b^t, b^{tb}, b^{t^2}, b^{t^2 b}.
  Word u;
  std::vector<unsigned> u_spelling;
  /// φ on generators, as free-group words, indexed by state.
  std::vector<Word> images;

  bool sections_ok = false;       ///< Ψφ on generators matches the table
  bool small_dihedral_ok = false; ///< order(a_n^s b_k) = 2^m
  bool large_dihedral_ok = false; ///< order(a_1^t b_1) = 2^{m+1}
  bool phi_s_ok = false;          ///< φ(s) ∈ {t, b_1 t}; reported only, not always attainable
  bool all_ok() const { return sections_ok && small_dihedral_ok && large_dihedral_ok; }
};

/// Finite search for s, t, m (and r, u) following the four cases
/// (k,n >= 2), (k >= 3, n = 1), (k = 2, n = 1), (k = 1, n >= 2).
/// Throws DomainError for K_v or (k,n) = (1,1), and when a search finds nothing.
EndomorphismData derive_endomorphism_parameters(const KneadingGroup& group);

/// The names of the generators u is spelled in.
extern const char* const kUGeneratorText[4];

Word phi_kwv(const Word& g, const KneadingGroup& group, const EndomorphismData& data);
/// ρ: b_k -> a_n^s, a_n -> b_k, every other generator -> 1.
Word rho_kwv(const Word& g, const KneadingGroup& group, const EndomorphismData& data);

/// φ^level(g) as a free-group word (no reduction in the group).
Word phi_free(const Word& g, const std::vector<Word>& images, unsigned level = 1);

}  // namespace img

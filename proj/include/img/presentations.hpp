#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "img/endomorphism.hpp"
#include "img/kneading.hpp"

namespace img {

/// Relators as words in the free group on the group's generators. They are
/// only freely reduced, so squares of involutions survive.
struct RelatorFamily {
  std::vector<Word> base;
  /// Number of φ-iterates meant to be expanded.
  unsigned levels = 0;
};

/// [a_i, a_j^{a_1^e}] for 2 <= i,j <= n, 0 <= e <= r, e even when
/// x_{i-1} != x_{j-1} and odd otherwise. Empty for n = 1.
RelatorFamily relators_kv(const KneadingGroup& group, unsigned r);

/// The dihedral group <a_1^t, b_1> of order 2^{m+2}, split by the parity of
/// the number of b_1 letters. Words are alternating in A = a_1^t and B = b_1,
/// enumerated by length and then starting letter (A first).
struct DihedralSplit {
  std::vector<Word> odd;   ///< O
  std::vector<Word> even;  ///< E
  /// No element was met with both parities.
  bool parity_consistent = true;
};
DihedralSplit dihedral_split(const KneadingGroup& group, const EndomorphismData& data);

/// [b_i, b_j^w], [a_i, b_j^w], [a_i, a_j^w] with w in O or E according to
/// whether the letters preceding the two indices agree.
RelatorFamily relators_kwv(const KneadingGroup& group, const EndomorphismData& data);

/// a_i^2, b_j^2, [a_i, a_{i+l n/d}] and φ^l((a_n^s b_k)^{2^m}) for l <= levels.
RelatorFamily fbar_relators(const KneadingGroup& group, const EndomorphismData& data, unsigned levels);

/// φ^l(w) for l = 0..levels and every base word w, level by level.
std::vector<Word> phi_expand(const std::vector<Word>& base, const std::vector<Word>& images,
                             unsigned levels);

/// All relators of the L-presentation up to φ-level `levels`.
std::vector<Word> presentation_relators(const KneadingGroup& group, unsigned levels);

struct RelatorReport {
  std::size_t total = 0;
  /// Distinct as free words.
  std::size_t distinct = 0;
  /// Indices (into the input) of relators that are not trivial.
  std::vector<std::size_t> failures;
};

/// Runs is_trivial on every word, split over `threads` workers (0 picks the
/// hardware count). Failures are listed in input order.
RelatorReport verify_relators(const std::vector<Word>& words, const AutomatonSpec& spec,
                              unsigned threads = 0);

/// A finitely presented ascending HNN-extension containing the group.
struct PresentationDoc {
  std::vector<std::string> generators;
  std::vector<std::string> relators;  ///< word-parser syntax over `generators`
  /// How the original generators sit inside (documentation only).
  std::vector<std::string> identification;
  std::string p;
  std::string q;  ///< empty for K_v

  /// "generators: ..." then "relators:" and one relator per line.
  std::string text() const;
};

/// `data` is required for K_{w,v} and ignored for K_v.
PresentationDoc emit_hnn(const KneadingGroup& group, const EndomorphismData* data = nullptr);

/// Evaluates a relator of the HNN-extension inside the group, with t acting
/// as φ (g^t = φ(g)), a = a_1^-1 (K_v) or a = a_1^u, b = b_1 (K_{w,v}).
/// Throws DomainError when the total t-exponent is not zero.
Word evaluate_hnn(const std::string& relator, const KneadingGroup& group, const EndomorphismData* data);

}  // namespace img

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "img/automaton.hpp"
#include "img/word.hpp"

namespace img {

/// Interns words as group elements. Each class keeps its shortlex-least
/// word seen so far as representative. Candidates are bucketed by their
/// action on a fixed level and confirmed with equal().
class ElementTable {
 public:
  explicit ElementTable(const AutomatonSpec& spec, unsigned fingerprint_depth = 6);

  /// Class id of `w`, creating a class when none is equal to it.
  std::size_t intern(const Word& w);
  std::size_t size() const { return reps_.size(); }
  const Word& rep(std::size_t id) const { return reps_[id]; }

 private:
  std::uint64_t fingerprint(const Word& w) const;

  const AutomatonSpec& spec_;
  unsigned depth_;
  std::vector<Word> reps_;
  std::unordered_multimap<std::uint64_t, std::size_t> buckets_;
};

class NonContractingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NucleusOptions {
  unsigned max_rounds = 32;
  std::size_t max_elements = 200000;
};

/// The nucleus of the wreath recursion generated by `seed` (normally the
/// generators, their inverses and 1).
///
/// Elements are classes of words under equal(). The section graph on
/// classes is explored from the seed; the recurrent part (everything
/// reachable from a cycle) is kept, and products of recurrent pairs are added
/// and explored until the recurrent part stops growing. Returns the
/// representatives in shortlex order. Throws NonContractingError when a cap
/// is reached.
std::vector<Word> nucleus_closure(const AutomatonSpec& spec, const std::vector<Word>& seed,
                                  const NucleusOptions& options = {});

/// 1, every generator and every inverse.
std::vector<Word> standard_seed(const AutomatonSpec& spec);

}  // namespace img

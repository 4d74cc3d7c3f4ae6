#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "img/automaton.hpp"
#include "img/order.hpp"
#include "img/tau.hpp"
#include "img/word.hpp"

namespace img {

/// Kneading data: Periodic(v) with v = x_1...x_{n-1}, or Preperiodic(w, v)
/// with w = y_1...y_k, v = x_1...x_n and y_k != x_n. Bit words are strings
/// over '0'/'1'.
class KneadingSpec {
 public:
  enum class Kind { periodic, preperiodic };

  static KneadingSpec periodic(std::string v);
  /// Throws DomainError unless w, v are nonempty and end in different letters.
  static KneadingSpec preperiodic(std::string w, std::string v);

  Kind kind() const { return kind_; }
  bool is_periodic() const { return kind_ == Kind::periodic; }
  const std::string& w() const { return w_; }
  const std::string& v() const { return v_; }
  /// Preperiodic with v a proper power (accepted, but flagged).
  bool non_primitive() const { return non_primitive_; }
  /// "Periodic(0)" or "Preperiodic(110,1)".
  std::string str() const;

  friend bool operator==(const KneadingSpec&, const KneadingSpec&) = default;

 private:
  Kind kind_ = Kind::periodic;
  std::string w_, v_;
  bool non_primitive_ = false;
};

/// Throws DomainError unless every character is '0' or '1'.
void check_bits(std::string_view bits);
/// The shortest u with word = u^d, and that d.
std::pair<std::string, unsigned> primitive_root(std::string_view word);

struct PeriodParameter {
  unsigned d = 1;
  std::string u;
  /// Periodic case with d > 1: the letter x with v x = u^d.
  std::optional<int> x;
  /// +1 for x = 0, -1 for x = 1 (1 when x is absent).
  int epsilon = 1;
};

/// Maximal d with v x = u^d (periodic) or v = u^d (preperiodic).
PeriodParameter period_parameter(const KneadingSpec& kneading);

/// K_v: a_1 = <1, a_n>σ, a_{i+1} = <a_i, 1> if x_i = 0, <1, a_i> if x_i = 1.
AutomatonSpec build_kv(std::string_view v);
/// K_{w,v}: b_1 = σ, b_{j+1} routed by y_j, a_1 = <b_k, a_n> if x_n = 1,
/// <a_n, b_k> if x_n = 0, a_{i+1} routed by x_i. States b_1..b_k, a_1..a_n,
/// all involutions.
AutomatonSpec build_kwv(std::string_view w, std::string_view v);

/// Exponent sums in Z^n (K_v) or (Z/2)^{k+n} in state order b..., a... (K_{w,v}).
struct AbelianImage {
  bool mod2 = false;
  std::vector<long long> coords;

  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

/// A K_v or K_{w,v} together with the family structure used by the checks.
class KneadingGroup {
 public:
  explicit KneadingGroup(KneadingSpec kneading);
  static KneadingGroup kv(std::string v) { return KneadingGroup(KneadingSpec::periodic(std::move(v))); }
  static KneadingGroup kwv(std::string w, std::string v) {
    return KneadingGroup(KneadingSpec::preperiodic(std::move(w), std::move(v)));
  }

  const KneadingSpec& kneading() const { return kneading_; }
  const AutomatonSpec& spec() const { return spec_; }
  bool periodic() const { return kneading_.is_periodic(); }
  /// Number of a-generators.
  unsigned n() const { return n_; }
  /// Number of b-generators (0 for K_v).
  unsigned k() const { return k_; }
  /// 1-based state indices; a(n+1) = a(1) and b(k+1) = a(1).
  std::uint32_t a(unsigned i) const;
  std::uint32_t b(unsigned j) const;
  /// Letters x_i, y_j (1-based).
  int x(unsigned i) const { return kneading_.v()[i - 1] - '0'; }
  int y(unsigned j) const { return kneading_.w()[j - 1] - '0'; }
  const PeriodParameter& period() const { return period_; }
  const TauTable& tau_table() const { return tau_; }
  /// Includes the torsion-freeness and Z^n facts for K_v.
  OrderOptions order_options() const;
  std::string name() const;

  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  Word ga(unsigned i, bool inverse = false) const { return gen(spec_, a(i), inverse); }
  Word gb(unsigned j) const { return gen(spec_, b(j)); }

 private:
  KneadingSpec kneading_;
  AutomatonSpec spec_;
  unsigned n_ = 0, k_ = 0;
  PeriodParameter period_;
  TauTable tau_;
};

/// The nucleus as given by the closed formulas: 1 + n(d+1) elements for K_v,
/// {1, b_1..b_k} plus the (Z/2)^d subgroups A_i for K_{w,v}.
std::vector<Word> nucleus_closed_form(const KneadingGroup& group);

AbelianImage abelianize(const Word& g, const KneadingGroup& group);

/// The substitution a_n -> a_1^2, a_i -> a_{i+1} (x_i = 0) or
/// a_1 a_{i+1} a_1^-1 (x_i = 1); images indexed by state.
std::vector<Word> phi_kv_images(const KneadingGroup& group);
Word phi_kv(const Word& g, const KneadingGroup& group);
/// rho_n: a_n^{exponent sum of a_n in g}.
Word rho_kv(const Word& g, const KneadingGroup& group);

/// Checks that every generator of K_v is conjugated by α = <α,α>σ to the
/// corresponding generator of the mirror group (complemented kneading data;
/// for K_v with first generator <a_n', 1>σ). Runs in a joint automaton.
bool mirror_conjugator_check(const KneadingSpec& kneading);

/// First-level transitivity plus: every generator is a section of one of
/// the first-level-stabilizing words g (inactive generators), g^a (a the first
/// active generator), a^2 and products of two active generators.
bool recurrence_check(const AutomatonSpec& spec);

/// [a_i, a_{i+l n/d}] = 1 for all i and 0 < l < d. K_{w,v} only.
bool commutation_check(const KneadingGroup& group);

}  // namespace img

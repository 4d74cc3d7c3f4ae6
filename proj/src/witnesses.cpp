#include "img/witnesses.hpp"

#include "img/endomorphism.hpp"
#include "img/order.hpp"
#include "img/selfsimilar.hpp"

namespace img {

bool WitnessReport::all_pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

namespace {

WitnessLine order_line(const KneadingGroup& group, const std::string& text, std::uint64_t expected) {
  const Word g = group.parse(text);
  const OrderResult r = order_probe(g, group.spec(), group.tau_table(), group.order_options());
  const auto* f = std::get_if<FiniteOrder>(&r);
  return {"order(" + text + ") = " + std::to_string(expected), f && f->order == expected,
          "found " + describe(r)};
}

// φ(g) = <g, expected1> with no swap.
WitnessLine phi_line(const KneadingGroup& group, const std::string& label, const Word& g,
                     const Word& image, const Word& expected1, const std::string& second) {
  const WreathPair p = wreath_decompose(image, group.spec());
  const bool ok = !p.swap && equal(p.section0, g, group.spec()) && equal(p.section1, expected1, group.spec());
  return {"phi(" + label + ") = <" + label + ", " + second + ">", ok,
          "sections " + group.format(p.section0) + " | " + group.format(p.section1)};
}

}  // namespace

WitnessReport branch_witnesses(const KneadingGroup& group) {
  WitnessReport rep;
  const AutomatonSpec& spec = group.spec();
  const unsigned n = group.n(), k = group.k();

  if (group.periodic()) {
    if (n == 1) {
      rep.summary = "infinite cyclic; abelian; no witnesses";
      return rep;
    }
    rep.summary = "weakly branch on the commutator subgroup (ingredients below)";
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j) {
        const Word g = commutator(group.ga(i), group.ga(j), spec);
        const std::string label = "[a" + std::to_string(i) + ",a" + std::to_string(j) + "]";
        rep.lines.push_back(phi_line(group, label, g, phi_kv(g, group), Word{}, "1"));
      }
    const bool nontrivial = !is_trivial(commutator(group.ga(1), group.ga(2), spec), spec);
    rep.lines.push_back({"[a1,a2] != 1", nontrivial, ""});
    return rep;
  }

  if (k == 1 && n == 1) {
    rep.summary = "dihedral; not weakly branch; no witnesses";
    return rep;
  }
  if (k >= 2 && n >= 2)
    rep.summary = "branch on the commutator subgroup (ingredients below)";
  else if (k >= 3)
    rep.summary = "branch on the commutator subgroup (ingredients below)";
  else if (k == 2)
    rep.summary = "branch on L = <[b1,b2 a1]>^G (ingredients below)";
  else
    rep.summary = "branch on L = <[a_i,a_j], [a_i,b1]>^G (ingredients below)";

  const EndomorphismData data = derive_endomorphism_parameters(group);
  std::vector<std::pair<std::string, std::uint32_t>> gens;
  for (unsigned j = 1; j <= k; ++j) gens.push_back({"b" + std::to_string(j), group.b(j)});
  for (unsigned i = 1; i <= n; ++i) gens.push_back({"a" + std::to_string(i), group.a(i)});
  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = p + 1; q < gens.size(); ++q) {
      const Word g = commutator(gen(spec, gens[p].second), gen(spec, gens[q].second), spec);
      const std::string label = "[" + gens[p].first + "," + gens[q].first + "]";
      rep.lines.push_back(
          phi_line(group, label, g, phi_kwv(g, group, data), rho_kwv(g, group, data), "rho(" + label + ")"));
    }
  if (n >= 2) {
    const bool nontrivial = !is_trivial(commutator(group.ga(1), group.ga(2), spec), spec);
    rep.lines.push_back({"[a1,a2] != 1", nontrivial, ""});
  }
  if (k >= 2 && n >= 2) rep.lines.push_back(order_line(group, "[b1,b2]", 2));
  if (k == 2 && n == 1) rep.lines.push_back(order_line(group, "(b1 a1)^4", 2));
  if (k == 1 && n >= 2) rep.lines.push_back(order_line(group, "[b1,a1]", 4));
  return rep;
}

}  // namespace img

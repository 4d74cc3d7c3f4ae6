#include "img/endomorphism.hpp"

#include <functional>
#include <optional>

#include "img/nucleus.hpp"
#include "img/selfsimilar.hpp"

namespace img {

const char* const kUGeneratorText[4] = {"b^t", "b^(t b)", "b^(t^2)", "b^(t^2 b)"};

std::vector<SubgroupElement> enumerate_subgroup(const std::vector<Word>& generators,
                                                const AutomatonSpec& spec, std::size_t max_size,
                                                std::size_t max_length) {
  ElementTable table(spec);
  std::vector<SubgroupElement> out{{{}, Word{}}};
  table.intern(Word{});
  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t len = 1; len <= max_length && level_begin < level_end; ++len) {
    for (std::size_t e = level_begin; e < level_end; ++e)
      for (unsigned g = 0; g < generators.size(); ++g) {
        Word w = multiply(out[e].word, generators[g], spec);
        const std::size_t before = table.size();
        table.intern(w);
        if (table.size() == before) continue;
        auto spelling = out[e].spelling;
        spelling.push_back(g);
        out.push_back({std::move(spelling), std::move(w)});
        if (out.size() >= max_size) return out;
      }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

namespace {

bool sections_are(const Word& g, const Word& s0, const Word& s1, const AutomatonSpec& spec) {
  const WreathPair p = wreath_decompose(g, spec);
  return !p.swap && equal(p.section0, s0, spec) && equal(p.section1, s1, spec);
}

bool has_order(const Word& g, std::uint64_t order, const AutomatonSpec& spec) {
  return is_trivial_power(g, order, spec) && (order == 1 || !is_trivial_power(g, order / 2, spec));
}

const SubgroupElement& first_where(const std::vector<SubgroupElement>& elements,
                                   const std::function<bool(const Word&)>& pred,
                                   const std::string& what) {
  for (const auto& e : elements)
    if (pred(e.word)) return e;
  throw DomainError("endomorphism parameter search found no " + what);
}

// b_1 conjugation kept as a free-group conjugate b_1^-1 x b_1.
Word conj_b1(const Word& x, std::uint32_t b1) {
  return Word::generator(b1, true).concat(x).concat(Word::generator(b1));
}

}  // namespace

EndomorphismData derive_endomorphism_parameters(const KneadingGroup& group) {
  if (group.periodic()) throw DomainError("endomorphism parameters are defined for K_{w,v}");
  const unsigned k = group.k(), n = group.n();
  if (k == 1 && n == 1) throw DomainError("(k,n) = (1,1): the group is infinite dihedral; no endomorphism");
  const AutomatonSpec& spec = group.spec();
  auto sub = [&](std::vector<Word> gens) { return enumerate_subgroup(gens, spec); };
  const Word b1 = group.gb(1), bk = group.gb(k), a1 = group.ga(1), an = group.ga(n);

  EndomorphismData data;
  const std::uint32_t ib1 = group.b(1);
  // φ on b_1..b_{k-1}; enough for every candidate s.
  std::vector<Word> early(spec.size(), Word{});
  for (unsigned j = 1; j < k; ++j) {
    const Word next = Word::generator(group.b(j + 1));
    early[group.b(j)] = group.y(j) == 0 ? next : conj_b1(next, ib1);
  }
  auto phi_s_ok = [&](const Word& s, const Word& t) {
    const Word ps = reduce(substitute(s, early), spec);
    return equal(ps, t, spec) || equal(ps, multiply(b1, t, spec), spec);
  };

  // Candidates are tried s first, then t, in enumeration order. A pair with
  // φ(s) in {t, b_1 t} is preferred; otherwise the first admissible pair is
  // kept and the check is reported as failed.
  struct Choice {
    Word r, s, t;
  };
  std::optional<Choice> first, best;
  auto consider = [&](const Word& r, const Word& s, const std::vector<SubgroupElement>& ts,
                      const std::function<bool(const Word&)>& t_ok) {
    for (const auto& t : ts) {
      if (!t_ok(t.word)) continue;
      if (!first) first = Choice{r, s, t.word};
      if (!best && phi_s_ok(s, t.word)) best = Choice{r, s, t.word};
      if (best) return;
    }
  };

  if (k >= 2 && n >= 2) {
    const auto ts = sub({b1, group.gb(2)});
    for (const auto& s : sub({b1})) {
      if (best) break;
      if (!is_trivial(commutator(conjugate(an, s.word, spec), bk, spec), spec)) continue;
      consider(Word{}, s.word, ts, [&](const Word& t) {
        return sections_are(conjugate(a1, t, spec), bk, conjugate(an, s.word, spec), spec);
      });
    }
    data.m = 1;
  } else if (k >= 3) {
    data.r = first_where(sub({b1}), [&](const Word& r) {
      return is_trivial(commutator(conjugate(bk, r, spec), group.gb(k - 1), spec), spec);
    }, "r").word;
    const auto ts = sub({b1, group.gb(2), group.gb(3)});
    for (const auto& s : sub({b1, group.gb(2)})) {
      if (best) break;
      if (!is_trivial(commutator(conjugate(a1, s.word, spec), bk, spec), spec)) continue;
      consider(data.r, s.word, ts, [&](const Word& t) {
        return sections_are(conjugate(a1, t, spec), bk, conjugate(a1, s.word, spec), spec);
      });
    }
    data.m = 1;
  } else if (k == 2) {
    const auto cyclic = sub({b1});
    const auto ts = sub({b1, group.gb(2)});
    for (const auto& r : cyclic) {
      if (best) break;
      if (!sections_are(conjugate(group.gb(2), r.word, spec), b1, Word{}, spec)) continue;
      for (const auto& s : cyclic) {
        if (best) break;
        if (!sections_are(conjugate(a1, multiply(r.word, s.word, spec), spec), group.gb(2), a1, spec)) continue;
        consider(r.word, s.word, ts, [&](const Word& t) {
          return sections_are(conjugate(a1, t, spec), group.gb(2), conjugate(a1, s.word, spec), spec);
        });
      }
    }
    data.m = 2;
  } else {
    consider(Word{}, Word{}, sub({b1}), [&](const Word& t) {
      return sections_are(conjugate(a1, t, spec), b1, an, spec);
    });
    data.m = 2;
  }
  if (!first) throw DomainError("endomorphism parameter search found no admissible (s, t)");
  const Choice& chosen = best ? *best : *first;
  data.r = chosen.r;
  data.s = chosen.s;
  data.t = chosen.t;

  // The substitution.
  data.images = early;
  data.images[group.b(k)] = data.t.formal_inverse().concat(Word::generator(group.a(1))).concat(data.t);
  for (unsigned i = 1; i < n; ++i) {
    const Word next = Word::generator(group.a(i + 1));
    data.images[group.a(i)] = group.x(i) == 0 ? next : conj_b1(next, ib1);
  }
  {
    const Word first = Word::generator(group.a(1));
    data.images[group.a(n)] = group.x(n) == 0 ? first : conj_b1(first, ib1);
  }

  auto phi = [&](const Word& g) { return reduce(substitute(g, data.images), spec); };
  const Word ans = conjugate(an, data.s, spec);
  data.sections_ok = true;
  for (unsigned j = 1; j < k; ++j)
    data.sections_ok = data.sections_ok && sections_are(phi(group.gb(j)), group.gb(j), Word{}, spec);
  data.sections_ok = data.sections_ok && sections_are(phi(bk), bk, ans, spec);
  for (unsigned i = 1; i < n; ++i)
    data.sections_ok = data.sections_ok && sections_are(phi(group.ga(i)), group.ga(i), Word{}, spec);
  data.sections_ok = data.sections_ok && sections_are(phi(an), an, bk, spec);

  const std::uint64_t two_m = std::uint64_t{1} << data.m;
  data.small_dihedral_ok = has_order(multiply(ans, bk, spec), two_m, spec);
  data.large_dihedral_ok = has_order(multiply(conjugate(a1, data.t, spec), b1, spec), 2 * two_m, spec);
  const Word phis = phi(data.s);
  data.phi_s_ok = equal(phis, data.t, spec) || equal(phis, multiply(b1, data.t, spec), spec);

  // u in <b^t, b^{tb}, b^{t^2}, b^{t^2 b}> where b = b_1 and x^t = φ(x).
  const Word bt = phi(b1), btt = phi(bt);
  const std::vector<Word> ugens{bt, conjugate(bt, b1, spec), btt, conjugate(btt, b1, spec)};
  const Word target = phi(bk);
  const Word tail = group.y(k) == 1 ? b1 : Word{};
  const auto candidates = enumerate_subgroup(ugens, spec, 1024, 8);
  const auto& u = first_where(candidates, [&](const Word& u) {
    return equal(conjugate(a1, multiply(u, tail, spec), spec), target, spec);
  }, "u");
  data.u = u.word;
  data.u_spelling = u.spelling;
  return data;
}

Word phi_kwv(const Word& g, const KneadingGroup& group, const EndomorphismData& data) {
  return reduce(substitute(g, data.images), group.spec());
}

Word rho_kwv(const Word& g, const KneadingGroup& group, const EndomorphismData& data) {
  std::vector<Word> image(group.spec().size());
  image[group.b(group.k())] = conjugate(group.ga(group.n()), data.s, group.spec());
  image[group.a(group.n())] = group.gb(group.k());
  return reduce(substitute(g, image), group.spec());
}

Word phi_free(const Word& g, const std::vector<Word>& images, unsigned level) {
  Word out = g;
  for (unsigned l = 0; l < level; ++l) out = substitute(out, images);
  return out;
}

}  // namespace img

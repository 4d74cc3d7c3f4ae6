#include "img/presentations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "img/nucleus.hpp"
#include "img/parse.hpp"
#include "img/selfsimilar.hpp"

namespace img {

namespace {

Word fgen(std::uint32_t s, bool inv = false) { return Word::generator(s, inv); }

Word fconj(const Word& g, const Word& h) { return free_reduce(h.formal_inverse().concat(g).concat(h).letters()); }

Word fcomm(const Word& g, const Word& h) {
  return free_reduce(g.formal_inverse().concat(h.formal_inverse()).concat(g).concat(h).letters());
}

Word fpow(const Word& g, unsigned e) {
  Word out;
  for (unsigned i = 0; i < e; ++i) out = out.concat(g);
  return free_reduce(out.letters());
}

}  // namespace

RelatorFamily relators_kv(const KneadingGroup& group, unsigned r) {
  RelatorFamily fam;
  fam.levels = 0;
  const unsigned n = group.n();
  const std::uint32_t a1 = group.a(1);
  for (unsigned i = 2; i <= n; ++i)
    for (unsigned j = 2; j <= n; ++j) {
      const bool same = group.x(i - 1) == group.x(j - 1);
      for (unsigned e = 0; e <= r; ++e) {
        if ((e % 2 == 1) != same) continue;
        const Word conj = fpow(fgen(a1), e);
        fam.base.push_back(fcomm(fgen(group.a(i)), fconj(fgen(group.a(j)), conj)));
      }
    }
  return fam;
}

DihedralSplit dihedral_split(const KneadingGroup& group, const EndomorphismData& data) {
  const AutomatonSpec& spec = group.spec();
  const Word A = fconj(fgen(group.a(1)), data.t);
  const Word B = fgen(group.b(1));
  const std::size_t order = std::size_t{1} << (data.m + 2);

  DihedralSplit out;
  ElementTable table(spec);
  std::vector<int> parity;  // by class id
  auto offer = [&](const Word& w, int b_count) {
    const std::size_t id = table.intern(w);
    if (id < parity.size()) {
      if (parity[id] != b_count % 2) out.parity_consistent = false;
      return;
    }
    parity.push_back(b_count % 2);
    (b_count % 2 ? out.odd : out.even).push_back(w);
  };
  offer(Word{}, 0);
  for (std::size_t len = 1; len < order; ++len)
    for (int start = 0; start < 2; ++start) {
      Word w;
      int b_count = 0;
      for (std::size_t i = 0; i < len; ++i) {
        const bool is_b = ((i + static_cast<std::size_t>(start)) % 2) == 1;
        w = w.concat(is_b ? B : A);
        b_count += is_b;
      }
      offer(free_reduce(w.letters()), b_count);
    }
  return out;
}

RelatorFamily relators_kwv(const KneadingGroup& group, const EndomorphismData& data) {
  RelatorFamily fam;
  const DihedralSplit split = dihedral_split(group, data);
  const unsigned n = group.n(), k = group.k();
  auto emit = [&](std::uint32_t g, std::uint32_t h, bool same) {
    for (const Word& w : same ? split.odd : split.even) fam.base.push_back(fcomm(fgen(g), fconj(fgen(h), w)));
  };
  for (unsigned i = 2; i <= k; ++i)
    for (unsigned j = 2; j <= k; ++j) emit(group.b(i), group.b(j), group.y(i - 1) == group.y(j - 1));
  for (unsigned i = 2; i <= n; ++i)
    for (unsigned j = 2; j <= k; ++j) emit(group.a(i), group.b(j), group.x(i - 1) == group.y(j - 1));
  for (unsigned i = 2; i <= n; ++i)
    for (unsigned j = 2; j <= n; ++j) emit(group.a(i), group.a(j), group.x(i - 1) == group.x(j - 1));
  return fam;
}

RelatorFamily fbar_relators(const KneadingGroup& group, const EndomorphismData& data, unsigned levels) {
  RelatorFamily fam;
  fam.levels = levels;
  const unsigned n = group.n(), k = group.k(), d = group.period().d, step = n / d;
  for (unsigned j = 1; j <= k; ++j) fam.base.push_back(fpow(fgen(group.b(j)), 2));
  for (unsigned i = 1; i <= n; ++i) fam.base.push_back(fpow(fgen(group.a(i)), 2));
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned l = 1; l < d; ++l)
      fam.base.push_back(fcomm(fgen(group.a(i)), fgen(group.a((i - 1 + l * step) % n + 1))));
  const Word base = fpow(free_reduce(fconj(fgen(group.a(n)), data.s).concat(fgen(group.b(k))).letters()),
                         1u << data.m);
  for (unsigned l = 0; l <= levels; ++l) fam.base.push_back(phi_free(base, data.images, l));
  return fam;
}

std::vector<Word> phi_expand(const std::vector<Word>& base, const std::vector<Word>& images,
                             unsigned levels) {
  std::vector<Word> out;
  std::vector<Word> cur = base;
  for (unsigned l = 0; l <= levels; ++l) {
    out.insert(out.end(), cur.begin(), cur.end());
    if (l == levels) break;
    for (Word& w : cur) w = substitute(w, images);
  }
  return out;
}

std::vector<Word> presentation_relators(const KneadingGroup& group, unsigned levels) {
  if (group.periodic()) return phi_expand(relators_kv(group, 2).base, phi_kv_images(group), levels);
  const EndomorphismData data = derive_endomorphism_parameters(group);
  std::vector<Word> out = fbar_relators(group, data, levels).base;
  const auto rest = phi_expand(relators_kwv(group, data).base, data.images, levels);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

RelatorReport verify_relators(const std::vector<Word>& words, const AutomatonSpec& spec, unsigned threads) {
  RelatorReport rep;
  rep.total = words.size();
  std::set<std::vector<Symbol>> distinct;
  for (const Word& w : words) distinct.emplace(w.begin(), w.end());
  rep.distinct = distinct.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, words.size())));
  std::vector<char> ok(words.size(), 0);
  auto work = [&](unsigned id) {
    for (std::size_t i = id; i < words.size(); i += threads) ok[i] = is_trivial(words[i], spec);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!ok[i]) rep.failures.push_back(i);
  return rep;
}

std::string PresentationDoc::text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : generators) os << ' ' << g;
  os << "\nrelators:\n";
  for (const auto& r : relators) os << r << '\n';
  return os.str();
}

namespace {

std::string tpow(unsigned i) { return i == 1 ? "t" : "t^" + std::to_string(i); }

// x^(t^i), or x for i = 0.
std::string at_t(const std::string& x, unsigned i) { return i == 0 ? x : x + "^(" + tpow(i) + ")"; }

std::string polynomial(const std::vector<int>& coeff) {
  std::string out;
  for (unsigned i = 0; i < coeff.size(); ++i) {
    if (!coeff[i]) continue;
    if (!out.empty()) out += " + ";
    out += i == 0 ? "1" : tpow(i);
  }
  return out.empty() ? "0" : out;
}

// x^{c(t)} for 0/1 coefficients: the product of x^(t^i) in ascending i.
std::string power_product(const std::string& x, const std::vector<int>& coeff) {
  std::string out;
  for (unsigned i = 0; i < coeff.size(); ++i) {
    if (!coeff[i]) continue;
    if (!out.empty()) out += ' ';
    out += at_t(x, i);
  }
  return out;
}

std::string conj_text(const std::string& x, const std::string& by) {
  return by.empty() ? x : x + "^(" + by + ")";
}

}  // namespace

PresentationDoc emit_hnn(const KneadingGroup& group, const EndomorphismData* data) {
  PresentationDoc doc;
  const unsigned n = group.n();
  if (group.periodic()) {
    doc.generators = {"a", "t"};
    std::vector<int> p(n, 0);
    for (unsigned i = 1; i < n; ++i) p[i] = group.x(n - i);
    doc.p = polynomial(p);
    const std::string P = power_product("a", p);
    doc.relators.push_back(at_t("a", n) + " " + conj_text("a^-2", P));
    for (unsigned i = 1; i < n; ++i)
      for (unsigned j = 1; j < n; ++j) {
        doc.relators.push_back("[" + at_t("a", i) + ", a^(" + tpow(j) + " a)]");
        doc.relators.push_back("[" + at_t("a", i) + ", a^(" + tpow(j) + " a^3)]");
      }
    doc.identification.push_back("a1 = a^-1");
    for (unsigned i = 1; i < n; ++i) {
      const std::string ai = "a" + std::to_string(i);
      doc.identification.push_back("a" + std::to_string(i + 1) + " = " +
                                   (group.x(i) ? "a " + ai + "^t a^-1" : ai + "^t"));
    }
    return doc;
  }

  if (!data) throw DomainError("emit_hnn for K_{w,v} needs the endomorphism parameters");
  const unsigned k = group.k(), d = group.period().d;
  doc.generators = {"a", "b", "t"};
  std::vector<int> p(n, 0), q(k, 0);
  for (unsigned i = 0; i < n; ++i) p[i] = group.x(n - i);
  for (unsigned i = 0; i < k; ++i) q[i] = group.y(k - i);
  doc.p = polynomial(p);
  doc.q = polynomial(q);

  std::string U;
  for (unsigned g : data->u_spelling) U += std::string(U.empty() ? "" : " ") + kUGeneratorText[g];
  const std::string a1 = U.empty() ? "a" : "a^((" + U + ")^-1)";

  doc.relators.push_back("a^2");
  doc.relators.push_back("b^2");
  doc.relators.push_back("(a b)^" + std::to_string(1u << (data->m + 1)));
  doc.relators.push_back(at_t("b", k) + " " + conj_text("a", power_product("b", q)));
  doc.relators.push_back("(" + a1 + ")^(" + tpow(n) + ") (" + conj_text("(" + a1 + ")", power_product("b", p)) +
                         ")^-1");
  for (unsigned j = 1; j < d; ++j) doc.relators.push_back("[a, " + at_t("a", j * n / d) + "]");
  auto conjugator = [&](unsigned j, unsigned l) {
    std::string c = tpow(j) + " b";
    if (l > 0) c += " (a b)^" + std::to_string(2 * l);
    return c;
  };
  const unsigned top = 1u << data->m;
  for (unsigned i = 1; i < k; ++i)
    for (unsigned j = 1; j < k; ++j)
      for (unsigned l = 0; l <= top; ++l)
        doc.relators.push_back("[" + at_t("b", i) + ", b^(" + conjugator(j, l) + ")]");
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = 1; j < k; ++j)
      for (unsigned l = 0; l <= top; ++l)
        doc.relators.push_back("[" + at_t("a", i) + ", b^(" + conjugator(j, l) + ")]");
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = 1; j < n; ++j)
      for (unsigned l = 0; l <= top; ++l)
        doc.relators.push_back("[" + at_t("a", i) + ", a^(" + conjugator(j, l) + ")]");

  doc.identification.push_back("b1 = b");
  doc.identification.push_back("a1 = " + a1);
  doc.identification.push_back("u = " + (U.empty() ? std::string("1") : U));
  for (unsigned j = 1; j < k; ++j)
    doc.identification.push_back("b" + std::to_string(j + 1) + " = " +
                                 (group.y(j) ? "(b" + std::to_string(j) + "^t)^b" : "b" + std::to_string(j) + "^t"));
  for (unsigned i = 1; i < n; ++i)
    doc.identification.push_back("a" + std::to_string(i + 1) + " = " +
                                 (group.x(i) ? "(a" + std::to_string(i) + "^t)^b" : "a" + std::to_string(i) + "^t"));
  return doc;
}

Word evaluate_hnn(const std::string& relator, const KneadingGroup& group, const EndomorphismData* data) {
  const AutomatonSpec& spec = group.spec();
  const bool kv = group.periodic();
  if (!kv && !data) throw DomainError("evaluate_hnn for K_{w,v} needs the endomorphism parameters");
  const std::vector<std::string> names = kv ? std::vector<std::string>{"a", "t"}
                                            : std::vector<std::string>{"a", "b", "t"};
  const std::uint32_t t = static_cast<std::uint32_t>(names.size() - 1);
  const Word w = parse_free_word(relator, names);

  // Letter y after a prefix of t-height h is t^h y t^-h = φ^{-h}(y); shift all
  // heights by the maximum so that only forward powers of φ are needed.
  long long h = 0, top = 0;
  for (Symbol s : w)
    if (s.state == t) {
      h += s.inverse ? -1 : 1;
      top = std::max(top, h);
    } else {
      top = std::max(top, h);
    }
  if (h != 0) throw DomainError("relator has nonzero total t-exponent: " + relator);

  auto phi = [&](const Word& g) { return kv ? phi_kv(g, group) : phi_kwv(g, group, *data); };
  const Word image_a = kv ? group.ga(1, true) : conjugate(group.ga(1), data->u, spec);
  const Word image_b = kv ? Word{} : group.gb(1);

  Word out;
  h = 0;
  for (Symbol s : w) {
    if (s.state == t) {
      h += s.inverse ? -1 : 1;
      continue;
    }
    Word y = s.state == 0 ? image_a : image_b;
    if (s.inverse) y = inverse(y, spec);
    for (long long i = 0; i < top - h; ++i) y = phi(y);
    out = multiply(out, y, spec);
  }
  return out;
}

}  // namespace img

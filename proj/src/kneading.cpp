#include "img/kneading.hpp"

#include <sstream>

#include "img/parse.hpp"
#include "img/selfsimilar.hpp"

namespace img {

void check_bits(std::string_view bits) {
  for (char c : bits)
    if (c != '0' && c != '1') throw DomainError("not a bit word: '" + std::string(bits) + "'");
}

std::pair<std::string, unsigned> primitive_root(std::string_view word) {
  const std::size_t len = word.size();
  for (std::size_t p = 1; p < len; ++p) {
    if (len % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < len && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return {std::string(word.substr(0, p)), static_cast<unsigned>(len / p)};
  }
  return {std::string(word), 1};
}

KneadingSpec KneadingSpec::periodic(std::string v) {
  check_bits(v);
  KneadingSpec s;
  s.kind_ = Kind::periodic;
  s.v_ = std::move(v);
  return s;
}

KneadingSpec KneadingSpec::preperiodic(std::string w, std::string v) {
  check_bits(w);
  check_bits(v);
  if (w.empty() || v.empty()) throw DomainError("preperiodic kneading data needs nonempty w and v");
  if (w.back() == v.back())
    throw DomainError("w and v must end in different letters (got '" + w + "', '" + v + "')");
  KneadingSpec s;
  s.kind_ = Kind::preperiodic;
  s.non_primitive_ = primitive_root(v).second > 1;
  s.w_ = std::move(w);
  s.v_ = std::move(v);
  return s;
}

std::string KneadingSpec::str() const {
  if (is_periodic()) return "Periodic(" + v_ + ")";
  return "Preperiodic(" + w_ + "," + v_ + ")";
}

PeriodParameter period_parameter(const KneadingSpec& kneading) {
  PeriodParameter p;
  if (!kneading.is_periodic()) {
    auto [u, d] = primitive_root(kneading.v());
    p.u = std::move(u);
    p.d = d;
    return p;
  }
  for (int x = 0; x < 2; ++x) {
    auto [u, d] = primitive_root(kneading.v() + static_cast<char>('0' + x));
    if (d > p.d) {
      p.d = d;
      p.u = std::move(u);
      p.x = x;
      p.epsilon = x == 0 ? 1 : -1;
    }
  }
  return p;
}

namespace {

std::string indexed(char letter, unsigned i) { return std::string(1, letter) + std::to_string(i); }

}  // namespace

AutomatonSpec build_kv(std::string_view v) {
  check_bits(v);
  const unsigned n = static_cast<unsigned>(v.size()) + 1;
  std::vector<State> states(n);
  for (unsigned i = 1; i <= n; ++i) states[i - 1].name = indexed('a', i);
  states[0].active = true;
  states[0].sections = {kIdentity, static_cast<std::int32_t>(n - 1)};
  for (unsigned i = 1; i < n; ++i) {
    const unsigned x = v[i - 1] == '1';
    states[i].sections[x] = static_cast<std::int32_t>(i - 1);
  }
  return AutomatonSpec(std::move(states));
}

AutomatonSpec build_kwv(std::string_view w, std::string_view v) {
  // Validates the pair.
  KneadingSpec::preperiodic(std::string(w), std::string(v));
  const unsigned k = static_cast<unsigned>(w.size()), n = static_cast<unsigned>(v.size());
  std::vector<State> states(k + n);
  auto bi = [](unsigned j) { return static_cast<std::int32_t>(j - 1); };
  auto ai = [k](unsigned i) { return static_cast<std::int32_t>(k + i - 1); };
  for (unsigned j = 1; j <= k; ++j) states[bi(j)].name = indexed('b', j);
  for (unsigned i = 1; i <= n; ++i) states[ai(i)].name = indexed('a', i);
  for (State& s : states) s.involution = true;

  states[0].active = true;
  for (unsigned j = 1; j < k; ++j) states[bi(j + 1)].sections[w[j - 1] == '1'] = bi(j);
  if (v[n - 1] == '1')
    states[ai(1)].sections = {bi(k), ai(n)};
  else
    states[ai(1)].sections = {ai(n), bi(k)};
  for (unsigned i = 1; i < n; ++i) states[ai(i + 1)].sections[v[i - 1] == '1'] = ai(i);
  return AutomatonSpec(std::move(states));
}

bool AbelianImage::is_zero() const {
  for (long long c : coords)
    if (c != 0) return false;
  return true;
}

std::string AbelianImage::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
  os << ')';
  return os.str();
}

KneadingGroup::KneadingGroup(KneadingSpec kneading) : kneading_(std::move(kneading)) {
  if (kneading_.is_periodic()) {
    spec_ = build_kv(kneading_.v());
    n_ = static_cast<unsigned>(kneading_.v().size()) + 1;
  } else {
    spec_ = build_kwv(kneading_.w(), kneading_.v());
    k_ = static_cast<unsigned>(kneading_.w().size());
    n_ = static_cast<unsigned>(kneading_.v().size());
  }
  period_ = period_parameter(kneading_);
  tau_ = generator_tau(spec_);
}

std::uint32_t KneadingGroup::a(unsigned i) const {
  if (i < 1 || i > n_ + 1) throw DomainError("generator index a" + std::to_string(i) + " out of range");
  if (i == n_ + 1) i = 1;
  return k_ + i - 1;
}

std::uint32_t KneadingGroup::b(unsigned j) const {
  if (j < 1 || j > k_ + 1) throw DomainError("generator index b" + std::to_string(j) + " out of range");
  if (j == k_ + 1) return a(1);
  return j - 1;
}

OrderOptions KneadingGroup::order_options() const {
  OrderOptions o;
  if (periodic()) {
    o.torsion_free = true;
    const std::size_t n = n_;
    o.free_abelian_nonzero = [n](const Word& g) {
      std::vector<long long> sums(n, 0);
      for (Symbol s : g) sums[s.state] += s.inverse ? -1 : 1;
      for (long long c : sums)
        if (c != 0) return true;
      return false;
    };
  }
  return o;
}

std::string KneadingGroup::name() const {
  if (periodic()) {
    const std::string& v = kneading_.v();
    return v.size() == 1 ? "K_" + v : "K_{" + v + "}";
  }
  return "K_{" + kneading_.w() + "," + kneading_.v() + "}";
}

Word KneadingGroup::parse(std::string_view text) const { return parse_word(text, spec_); }

std::string KneadingGroup::format(const Word& w) const { return format_word(w, spec_); }

std::vector<Word> nucleus_closed_form(const KneadingGroup& group) {
  const AutomatonSpec& spec = group.spec();
  const unsigned n = group.n(), d = group.period().d, step = n / d;
  std::vector<Word> out{Word{}};
  if (group.periodic()) {
    const bool neg = group.period().epsilon < 0;
    for (unsigned i = 1; i <= n; ++i) {
      out.push_back(group.ga(i));
      out.push_back(group.ga(i, true));
      for (unsigned j = 1; j < d; ++j) {
        const unsigned other = (i - 1 + j * step) % n + 1;
        out.push_back(multiply(group.ga(i, neg), group.ga(other, !neg), spec));
      }
    }
  } else {
    for (unsigned j = 1; j <= group.k(); ++j) out.push_back(group.gb(j));
    for (unsigned i = 1; i <= step; ++i)
      for (unsigned mask = 1; mask < (1u << d); ++mask) {
        Word g;
        for (unsigned l = 0; l < d; ++l)
          if (mask & (1u << l)) g = multiply(g, group.ga(i + l * step), spec);
        out.push_back(g);
      }
  }
  return out;
}

AbelianImage abelianize(const Word& g, const KneadingGroup& group) {
  AbelianImage img;
  img.mod2 = !group.periodic();
  img.coords.assign(group.spec().size(), 0);
  for (Symbol s : g) {
    if (img.mod2)
      img.coords[s.state] ^= 1;
    else
      img.coords[s.state] += s.inverse ? -1 : 1;
  }
  return img;
}

std::vector<Word> phi_kv_images(const KneadingGroup& group) {
  if (!group.periodic()) throw DomainError("phi_kv is defined for K_v only");
  const unsigned n = group.n();
  std::vector<Word> image(n);
  const Word a1 = group.ga(1), a1inv = group.ga(1, true);
  for (unsigned i = 1; i < n; ++i) {
    const Word next = group.ga(i + 1);
    image[group.a(i)] = group.x(i) == 0 ? next : a1.concat(next).concat(a1inv);
  }
  image[group.a(n)] = a1.concat(a1);
  return image;
}

Word phi_kv(const Word& g, const KneadingGroup& group) {
  return reduce(substitute(g, phi_kv_images(group)), group.spec());
}

Word rho_kv(const Word& g, const KneadingGroup& group) {
  const std::uint32_t an = group.a(group.n());
  long long e = 0;
  for (Symbol s : g)
    if (s.state == an) e += s.inverse ? -1 : 1;
  return power(group.ga(group.n()), e, group.spec());
}

namespace {

std::string complement(std::string bits) {
  for (char& c : bits) c = c == '0' ? '1' : '0';
  return bits;
}

// K_{v'} with the mirrored first generator a_1' = <a_n', 1>σ.
AutomatonSpec build_kv_mirror(std::string_view v) {
  std::vector<State> states = build_kv(v).states();
  std::swap(states[0].sections[0], states[0].sections[1]);
  return AutomatonSpec(std::move(states));
}

}  // namespace

bool mirror_conjugator_check(const KneadingSpec& kneading) {
  AutomatonSpec joint;
  std::uint32_t count = 0;
  if (kneading.is_periodic()) {
    joint = build_kv(kneading.v());
    count = static_cast<std::uint32_t>(joint.size());
    joint.append(build_kv_mirror(complement(kneading.v())), "'");
  } else {
    joint = build_kwv(kneading.w(), kneading.v());
    count = static_cast<std::uint32_t>(joint.size());
    joint.append(build_kwv(complement(kneading.w()), complement(kneading.v())), "'");
  }
  State alpha;
  alpha.name = "alpha";
  alpha.active = true;
  alpha.sections = {0, 0};
  const std::uint32_t at = joint.append(AutomatonSpec({alpha}), "");
  const Word al = gen(joint, at);
  for (std::uint32_t s = 0; s < count; ++s)
    if (!equal(conjugate(gen(joint, s), al, joint), gen(joint, count + s), joint)) return false;
  return true;
}

bool recurrence_check(const AutomatonSpec& spec) {
  std::vector<std::uint32_t> active, inactive;
  for (std::uint32_t s = 0; s < spec.size(); ++s) (spec.state(s).active ? active : inactive).push_back(s);
  if (active.empty()) return false;

  const Word a = gen(spec, active.front());
  std::vector<Word> stabilizing;
  for (std::uint32_t s : inactive) {
    stabilizing.push_back(gen(spec, s));
    stabilizing.push_back(conjugate(gen(spec, s), a, spec));
  }
  for (std::uint32_t s : active)
    for (std::uint32_t t : active) stabilizing.push_back(multiply(gen(spec, s), gen(spec, t), spec));

  std::vector<Word> sections;
  for (const Word& g : stabilizing) {
    const WreathPair p = wreath_decompose(g, spec);
    sections.push_back(p.section0);
    sections.push_back(p.section1);
  }
  for (std::uint32_t s = 0; s < spec.size(); ++s) {
    bool found = false;
    for (const Word& h : sections)
      if ((found = equal(h, gen(spec, s), spec))) break;
    if (!found) return false;
  }
  return true;
}

bool commutation_check(const KneadingGroup& group) {
  if (group.periodic()) throw DomainError("commutation relations are stated for K_{w,v}");
  const unsigned n = group.n(), d = group.period().d, step = n / d;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned l = 1; l < d; ++l) {
      const unsigned j = (i - 1 + l * step) % n + 1;
      if (!is_trivial(commutator(group.ga(i), group.ga(j), group.spec()), group.spec())) return false;
    }
  return true;
}

}  // namespace img

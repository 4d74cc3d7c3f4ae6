// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "img/angles.hpp"
#include "img/endomorphism.hpp"
#include "img/kneading.hpp"
#include "img/nucleus.hpp"
#include "img/order.hpp"
#include "img/presentations.hpp"
#include "img/selfsimilar.hpp"
#include "img/tau.hpp"
#include "unit/test_util.hpp"

using namespace img;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::ostringstream failures;
  int failure_count = 0;

  void fail(const std::string& what) {
    pass = false;
    if (failure_count++ < 5) failures << (failure_count > 1 ? "; " : "") << what;
  }
};

std::vector<std::string> words_up_to(unsigned len, bool with_empty) {
  std::vector<std::string> out;
  if (with_empty) out.push_back("");
  for (unsigned l = 1; l <= len; ++l)
    for (auto& w : test::bit_words(l)) out.push_back(w);
  return out;
}

// Valid (w, v) with |w| <= wl, |v| <= vl.
std::vector<std::pair<std::string, std::string>> pairs_up_to(unsigned wl, unsigned vl) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& w : words_up_to(wl, false))
    for (const auto& v : words_up_to(vl, false))
      if (w.back() != v.back()) out.emplace_back(w, v);
  return out;
}

std::string name(const std::string& w, const std::string& v) { return "K_{" + w + "," + v + "}"; }

bool same_set(const std::vector<Word>& a, const std::vector<Word>& b, const AutomatonSpec& spec) {
  if (a.size() != b.size()) return false;
  for (const Word& g : a)
    if (!test::contains_element(b, g, spec)) return false;
  return true;
}

bool finite_order(const OrderResult& r, std::uint64_t n) {
  const auto* f = std::get_if<FiniteOrder>(&r);
  return f && f->order == n;
}

void ac1(Outcome& o) {
  unsigned kv_count = 0, kwv_count = 0;
  for (const auto& v : words_up_to(6, true)) {
    const auto g = KneadingGroup::kv(v);
    const auto generic = nucleus_closure(g.spec(), standard_seed(g.spec()));
    const auto closed = nucleus_closed_form(g);
    const std::size_t expect = 1 + g.n() * (g.period().d + 1);
    if (generic.size() != expect || !same_set(generic, closed, g.spec()))
      o.fail("K_" + v + " size " + std::to_string(generic.size()) + " expected " + std::to_string(expect));
    ++kv_count;
  }
  for (const auto& [w, v] : pairs_up_to(3, 3)) {
    const auto g = KneadingGroup::kwv(w, v);
    const auto generic = nucleus_closure(g.spec(), standard_seed(g.spec()));
    const unsigned d = g.period().d;
    const std::size_t expect = g.k() + 1 + (g.n() / d) * ((std::size_t{1} << d) - 1);
    if (generic.size() != expect || !same_set(generic, nucleus_closed_form(g), g.spec()))
      o.fail(name(w, v) + " size " + std::to_string(generic.size()) + " expected " + std::to_string(expect));
    ++kwv_count;
  }
  o.detail << kv_count << " K_v (|v|<=6), " << kwv_count << " K_{w,v} (|w|,|v|<=3)";
}

void ac2(Outcome& o) {
  const auto z = KneadingGroup::kv("");
  for (unsigned depth = 1; depth <= 12; ++depth)
    if (orbit_on_level(z.ga(1), depth, z.spec()).size() != 1) o.fail("K_{} a1 not transitive at depth " + std::to_string(depth));
  if (!std::holds_alternative<InfiniteOrder>(order_probe(z.ga(1), z.spec(), z.tau_table(), z.order_options())))
    o.fail("K_{} a1 not infinite");

  for (auto [w, v] : {std::pair{"0", "1"}, {"1", "0"}}) {
    const auto g = KneadingGroup::kwv(w, v);
    for (const char* x : {"b1", "a1"})
      if (!finite_order(order_probe(g.parse(x), g.spec(), g.tau_table(), g.order_options()), 2))
        o.fail(name(w, v) + " " + x + " not of order 2");
    const auto r = order_probe(g.parse("b1 a1"), g.spec(), g.tau_table(), g.order_options());
    const auto* inf = std::get_if<InfiniteOrder>(&r);
    if (!inf || inf->witness != InfiniteWitness::level_transitive) o.fail(name(w, v) + " b1 a1 lacks the tau witness");
    if (!mirror_conjugator_check(KneadingSpec::preperiodic(w, v))) o.fail(name(w, v) + " mirror");
  }
  const auto k0 = KneadingGroup::kv("0");
  const auto n0 = nucleus_closure(k0.spec(), standard_seed(k0.spec()));
  if (n0.size() != 7) o.fail("K_0 nucleus " + std::to_string(n0.size()));
  o.detail << "K_{} transitive to depth 12 and infinite; K_{0,1}, K_{1,0} dihedral and conjugate; |N(K_0)| = "
           << n0.size();
}

void ac3(Outcome& o) {
  std::mt19937 rng(20240601);
  unsigned trivial = 0, total = 0;
  const std::vector<KneadingGroup> groups{KneadingGroup::kv("0"), KneadingGroup::kv("11"),
                                          KneadingGroup::kwv("1", "10"), KneadingGroup::kwv("110", "1")};
  for (const auto& g : groups) {
    for (int i = 0; i < 200; ++i) {
      // Half the samples are commutator-heavy so that trivial words actually occur.
      Word x = test::random_word(g, 8, rng);
      if (i % 2) {
        const Word y = test::random_word(g, 2, rng), z = test::random_word(g, 2, rng);
        x = commutator(y, z, g.spec());
        if (x.size() > 8) x = test::random_word(g, 8, rng);
      }
      const bool fast = is_trivial(x, g.spec());
      const bool brute = test::fixes_levels(x, 8, g.spec());
      trivial += fast;
      ++total;
      if (fast != brute) o.fail(g.name() + " " + g.format(x));
    }
  }
  o.detail << total << " words, " << trivial << " trivial";
}

void ac4(Outcome& o) {
  std::mt19937 rng(4242);
  unsigned checked = 0;
  for (const char* v : {"0", "1", "11", "01", "110", "0010"}) {
    const auto g = KneadingGroup::kv(v);
    for (int i = 0; i < 100; ++i) {
      const Word x = test::random_word(g, 12, rng);
      const auto p = wreath_decompose(phi_kv(x, g), g.spec());
      if (p.swap || !equal(p.section0, x, g.spec()) || !equal(p.section1, rho_kv(x, g), g.spec()))
        o.fail(g.name() + " " + g.format(x));
      ++checked;
    }
  }
  for (auto [w, v] : {std::pair{"1", "10"}, {"110", "1"}, {"10", "1"}, {"01", "0"}, {"01", "110"}, {"0", "111"}}) {
    const auto g = KneadingGroup::kwv(w, v);
    const auto data = derive_endomorphism_parameters(g);
    for (int i = 0; i < 100; ++i) {
      const Word x = test::random_word(g, 12, rng);
      const auto p = wreath_decompose(phi_kwv(x, g, data), g.spec());
      if (p.swap || !equal(p.section0, x, g.spec()) || !equal(p.section1, rho_kwv(x, g, data), g.spec()))
        o.fail(g.name() + " " + g.format(x));
      ++checked;
    }
  }
  o.detail << checked << " words over 12 groups";
}

void ac5(Outcome& o) {
  std::size_t relators = 0;
  unsigned groups = 0;
  for (const auto& v : words_up_to(4, true)) {
    const auto g = KneadingGroup::kv(v);
    const auto words = presentation_relators(g, 3);
    const auto rep = verify_relators(words, g.spec());
    relators += rep.total;
    ++groups;
    if (!rep.failures.empty()) o.fail(g.name() + ": " + std::to_string(rep.failures.size()) + " failures");
  }
  for (const auto& [w, v] : pairs_up_to(3, 3)) {
    if (w.size() == 1 && v.size() == 1) continue;
    const auto g = KneadingGroup::kwv(w, v);
    const auto words = presentation_relators(g, 2);
    const auto rep = verify_relators(words, g.spec());
    relators += rep.total;
    ++groups;
    if (!rep.failures.empty()) o.fail(g.name() + ": " + std::to_string(rep.failures.size()) + " failures");
  }
  o.detail << relators << " relators in " << groups << " groups";
}

void ac6(Outcome& o) {
  unsigned rows = 0;
  for (const auto& [w, v] : pairs_up_to(3, 3)) {
    const auto g = KneadingGroup::kwv(w, v);
    const auto opts = g.order_options();
    auto expect = [&](const char* word, std::uint64_t n) {
      const Word x = g.parse(word);
      if (!finite_order(order_probe(x, g.spec(), g.tau_table(), opts), n)) {
        // The level action bounds the order from below.
        std::size_t longest = 0;
        for (const auto& c : orbit_on_level(x, 12, g.spec())) longest = std::max(longest, c.size());
        o.fail(g.name() + " order(" + word + ") != " + std::to_string(n) + ", has a " + std::to_string(longest) +
               "-cycle on level 12");
      }
      ++rows;
    };
    if (g.k() >= 2 && g.n() >= 2) expect("[b1,b2]", 2);
    if (g.k() == 1 && g.n() >= 2) expect("[b1,a1]", 4);
    if (g.k() == 2 && g.n() == 1) expect("(b1 a1)^4", 2);
  }
  std::mt19937 rng(66);
  unsigned sampled = 0;
  for (const auto& v : words_up_to(3, true)) {
    const auto g = KneadingGroup::kv(v);
    for (int i = 0; i < 20; ++i) {
      const Word x = test::random_word(g, 8, rng);
      if (is_trivial(x, g.spec())) continue;
      if (!std::holds_alternative<InfiniteOrder>(order_probe(x, g.spec(), g.tau_table(), g.order_options())))
        o.fail(g.name() + " " + g.format(x) + " not infinite");
      ++sampled;
    }
  }
  o.detail << rows << " K_{w,v} torsion rows, " << sampled << " K_v elements infinite";
}

void ac7(Outcome& o) {
  std::mt19937 rng(77);
  unsigned compared = 0, products = 0;
  const std::vector<KneadingGroup> groups{KneadingGroup::kv(""),         KneadingGroup::kv("0"),
                                          KneadingGroup::kv("11"),       KneadingGroup::kwv("0", "1"),
                                          KneadingGroup::kwv("1", "10"), KneadingGroup::kwv("110", "1")};
  for (const auto& g : groups)
    for (int i = 0; i < 50; ++i) {
      const Word x = test::random_word(g, 8, rng);
      const bool by_tau = is_level_transitive_element(x, g.tau_table());
      bool brute = true;
      for (unsigned d = 1; d <= 10 && brute; ++d) brute = orbit_on_level(x, d, g.spec()).size() == 1;
      if (by_tau != brute) o.fail(g.name() + " " + g.format(x));
      ++compared;
    }
  for (const auto& [w, v] : pairs_up_to(3, 3)) {
    const auto g = KneadingGroup::kwv(w, v);
    std::vector<std::uint32_t> order(g.spec().size());
    std::iota(order.begin(), order.end(), 0u);
    // Natural order and its reverse.
    for (int pass = 0; pass < 2; ++pass) {
      Word x;
      for (auto s : order) x = multiply(x, gen(g.spec(), s), g.spec());
      bool brute = orbit_on_level(x, 10, g.spec()).size() == 1;
      if (!is_level_transitive_element(x, g.tau_table()) || !brute) o.fail(g.name() + " product " + g.format(x));
      ++products;
      std::reverse(order.begin(), order.end());
    }
  }
  o.detail << compared << " random elements vs depth-10 orbits, " << products << " generator products transitive";
}

void ac8(Outcome& o) {
  const auto k = kneading_sequence(Angle(9, 56));
  std::string orbit;
  for (const auto& a : k.orbit.orbit) orbit += (orbit.empty() ? "" : " -> ") + a.str();
  if (orbit != "9/56 -> 9/28 -> 9/14 -> 2/7 -> 4/7 -> 1/7") o.fail("orbit " + orbit);
  if (k.orbit.orbit.back().doubled() != Angle(2, 7)) o.fail("cycle does not close at 2/7");
  if (k.orbit.preperiod != 3 || k.orbit.period != 3 || k.kneading_period != 1) o.fail("9/56 periods");
  if (kneading_sequence(Angle(1, 2)).canonical != KneadingSpec::preperiodic("1", "0")) o.fail("1/2");
  if (kneading_sequence(Angle(1, 7)).canonical != KneadingSpec::periodic("11") ||
      kneading_sequence(Angle(2, 7)).canonical != KneadingSpec::periodic("11"))
    o.fail("1/7, 2/7");

  unsigned angles = 0;
  for (std::int64_t q = 1; q <= 63; ++q)
    for (std::int64_t p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++angles;
      const Angle theta(p, q);
      const auto r = kneading_sequence(theta);
      const auto& c = r.canonical;
      const std::string id = theta.str();
      if (q % 2 == 1) {
        if (!c.is_periodic()) o.fail(id + " not periodic");
        const std::size_t n = r.kneading_period;
        if (c.v().size() + 1 != n) o.fail(id + " period");
        const std::string raw = r.raw_prefix + r.raw_period + r.raw_period;
        for (std::size_t i = 0; i < raw.size(); ++i)
          if ((raw[i] == '*') != (i % n == n - 1)) o.fail(id + " star positions");
      } else {
        if (c.is_periodic() || c.w().back() == c.v().back() || primitive_root(c.v()).second != 1 ||
            r.kneading_period != c.v().size())
          o.fail(id + " canonical form");
      }
      if (r.orbit.period % r.kneading_period != 0) o.fail(id + " kneading period does not divide");
      if (kneading_sequence(Angle(q - p, q)).canonical != c) o.fail(id + " differs from its conjugate");
    }
  o.detail << "9/56 orbit verbatim; " << angles << " angles with q <= 63";
}

void ac9(Outcome& o) {
  unsigned groups = 0;
  for (const auto& [w, v] : pairs_up_to(3, 4)) {
    if (!commutation_check(KneadingGroup::kwv(w, v))) o.fail(name(w, v));
    ++groups;
  }
  o.detail << groups << " K_{w,v} (|w|<=3, |v|<=4)";
}

void ac10(Outcome& o) {
  unsigned groups = 0;
  for (const auto& v : words_up_to(5, true)) {
    if (!mirror_conjugator_check(KneadingSpec::periodic(v))) o.fail("K_" + v);
    ++groups;
  }
  for (const auto& [w, v] : pairs_up_to(3, 3)) {
    if (!mirror_conjugator_check(KneadingSpec::preperiodic(w, v))) o.fail(name(w, v));
    ++groups;
  }
  o.detail << groups << " groups";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"nucleus sizes", ac1},
      {"known-group oracles", ac2},
      {"word problem vs brute force", ac3},
      {"endomorphism identity", ac4},
      {"presentation soundness", ac5},
      {"torsion table", ac6},
      {"level-transitivity criterion", ac7},
      {"angle pipeline", ac8},
      {"commutation relations", ac9},
      {"mirror conjugation", ac10},
  };
  int failed = 0, index = 0;
  for (const auto& [title, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s AC%d %s: %s", o.pass ? "PASS" : "FAIL", ++index, title, o.detail.str().c_str());
    if (!o.pass) std::printf(" [%d failures: %s]", o.failure_count, o.failures.str().c_str());
    std::printf(" (%.1fs)\n", secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

#include <doctest.h>

#include <random>

#include "img/classify.hpp"
#include "img/endomorphism.hpp"
#include "img/kneading.hpp"
#include "img/nucleus.hpp"
#include "img/order.hpp"
#include "img/parse.hpp"
#include "img/selfsimilar.hpp"
#include "img/witnesses.hpp"
#include "test_util.hpp"

using namespace img;

namespace {

std::string section_name(const AutomatonSpec& spec, std::int32_t sec) {
  return sec == kIdentity ? "1" : spec.state(static_cast<std::uint32_t>(sec)).name;
}

// "name=<s0,s1>" plus "σ" when active.
std::string recursion(const AutomatonSpec& spec, std::uint32_t s) {
  const State& st = spec.state(s);
  return st.name + "=<" + section_name(spec, st.sections[0]) + "," + section_name(spec, st.sections[1]) + ">" +
         (st.active ? "σ" : "");
}

}  // namespace

TEST_SUITE("kneading") {

TEST_CASE("build K_v") {
  auto spec = build_kv("");
  REQUIRE(spec.size() == 1);
  CHECK(recursion(spec, 0) == "a1=<1,a1>σ");

  spec = build_kv("0");
  REQUIRE(spec.size() == 2);
  CHECK(recursion(spec, 0) == "a1=<1,a2>σ");
  CHECK(recursion(spec, 1) == "a2=<a1,1>");

  spec = build_kv("11");
  REQUIRE(spec.size() == 3);
  CHECK(recursion(spec, 0) == "a1=<1,a3>σ");
  CHECK(recursion(spec, 1) == "a2=<1,a1>");
  CHECK(recursion(spec, 2) == "a3=<1,a2>");
}

TEST_CASE("build K_{w,v}") {
  auto spec = build_kwv("0", "1");
  REQUIRE(spec.size() == 2);
  CHECK(recursion(spec, 0) == "b1=<1,1>σ");
  CHECK(recursion(spec, 1) == "a1=<b1,a1>");

  spec = build_kwv("1", "10");
  REQUIRE(spec.size() == 3);
  CHECK(recursion(spec, 0) == "b1=<1,1>σ");
  CHECK(recursion(spec, 1) == "a1=<a2,b1>");
  CHECK(recursion(spec, 2) == "a2=<1,a1>");

  spec = build_kwv("0", "111");
  CHECK(spec.size() == 4);
  for (const State& s : spec.states()) CHECK(s.involution);

  CHECK_THROWS_AS(build_kwv("01", "1"), DomainError);
  CHECK_THROWS_AS(KneadingSpec::preperiodic("", "1"), DomainError);
  CHECK_THROWS_AS(KneadingSpec::periodic("012"), DomainError);
  CHECK(KneadingSpec::preperiodic("0", "11").non_primitive());
}

TEST_CASE("period parameter") {
  auto p = period_parameter(KneadingSpec::periodic("0"));
  CHECK(p.d == 2);
  CHECK(p.u == "0");
  REQUIRE(p.x);
  CHECK(*p.x == 0);
  CHECK(p.epsilon == 1);

  p = period_parameter(KneadingSpec::periodic("11"));
  CHECK(p.d == 3);
  CHECK(p.u == "1");
  REQUIRE(p.x);
  CHECK(*p.x == 1);
  CHECK(p.epsilon == -1);

  p = period_parameter(KneadingSpec::preperiodic("1", "10"));
  CHECK(p.d == 1);
  CHECK_FALSE(p.x);
}

TEST_CASE("closed-form nucleus") {
  const auto k0 = KneadingGroup::kv("0");
  CHECK(nucleus_closed_form(k0).size() == 7);

  const auto k01 = KneadingGroup::kwv("0", "1");
  const auto n01 = nucleus_closed_form(k01);
  CHECK(n01.size() == 3);
  for (const char* text : {"1", "b1", "a1"}) CHECK(test::contains_element(n01, k01.parse(text), k01.spec()));

  // k = 1, n = d = 3: {1, b1} and A_1 = (Z/2)^3 share the identity.
  const auto k0111 = KneadingGroup::kwv("0", "111");
  const auto closed = nucleus_closed_form(k0111);
  CHECK(closed.size() == 1 + 1 + (3 / 3) * ((1u << 3) - 1));
  const auto generic = nucleus_closure(k0111.spec(), standard_seed(k0111.spec()));
  CHECK(generic.size() == closed.size());
  for (const Word& g : closed) CHECK(test::contains_element(generic, g, k0111.spec()));
}

TEST_CASE("abelianization") {
  const auto k0 = KneadingGroup::kv("0");
  auto img = abelianize(k0.parse("a1 a2^-1"), k0);
  CHECK_FALSE(img.mod2);
  CHECK(img.coords == std::vector<long long>{1, -1});

  const auto k110 = KneadingGroup::kwv("1", "10");
  img = abelianize(k110.parse("b1 a1 a1"), k110);
  CHECK(img.mod2);
  CHECK(img.coords == std::vector<long long>{1, 0, 0});

  img = abelianize(k0.parse("[a1,a2]"), k0);
  CHECK(img.is_zero());
  CHECK_FALSE(is_trivial(k0.parse("[a1,a2]"), k0.spec()));
}

TEST_CASE("abelianization is a homomorphism and kills the trivial words") {
  std::mt19937 rng(5);
  for (const auto& group : {KneadingGroup::kv("0"), KneadingGroup::kv("101"), KneadingGroup::kwv("110", "1")}) {
    for (int i = 0; i < 50; ++i) {
      const Word g = test::random_word(group, 8, rng), h = test::random_word(group, 8, rng);
      const auto ag = abelianize(g, group), ah = abelianize(h, group);
      const auto agh = abelianize(multiply(g, h, group.spec()), group);
      for (std::size_t c = 0; c < agh.coords.size(); ++c) {
        long long expect = ag.coords[c] + ah.coords[c];
        if (agh.mod2) expect = ((expect % 2) + 2) % 2;
        CHECK(agh.coords[c] == expect);
      }
      if (is_trivial(g, group.spec())) CHECK(ag.is_zero());
    }
  }
}

TEST_CASE("generator tau") {
  const auto k0 = KneadingGroup::kv("0");
  CHECK(to_string(k0.tau_table()[k0.a(1)]) == "(10)");
  CHECK(to_string(k0.tau_table()[k0.a(2)]) == "(01)");
  const auto k01 = KneadingGroup::kwv("0", "1");
  CHECK(to_string(k01.tau_table()[k01.b(1)]) == "1(0)");
  CHECK(to_string(k01.tau_table()[k01.a(1)]) == "0(1)");

  // τ(a_i) is the indicator of positions i-1 mod n.
  for (const char* v : {"0", "11", "010", "1101"}) {
    const auto g = KneadingGroup::kv(v);
    for (unsigned i = 1; i <= g.n(); ++i) {
      const auto& t = g.tau_table()[g.a(i)];
      for (unsigned m = 0; m < 3 * g.n(); ++m) CHECK(t.at(m) == (m % g.n() == i - 1 ? 1 : 0));
    }
  }
}

TEST_CASE("phi on K_v") {
  const auto k0 = KneadingGroup::kv("0");
  const auto images = phi_kv_images(k0);
  CHECK(images[k0.a(1)] == k0.ga(2));
  CHECK(images[k0.a(2)] == k0.parse("a1 a1"));
  CHECK(phi_kv(Word{}, k0).empty());
  const auto p = wreath_decompose(phi_kv(k0.ga(2), k0), k0.spec());
  CHECK_FALSE(p.swap);
  CHECK(p.section0 == k0.ga(2));
  CHECK(p.section1 == k0.ga(2));
}

TEST_CASE("phi identity on K_v") {
  std::mt19937 rng(17);
  for (const char* v : {"0", "1", "01", "110", "0010"}) {
    const auto g = KneadingGroup::kv(v);
    for (int i = 0; i < 30; ++i) {
      const Word w = test::random_word(g, 10, rng);
      const auto p = wreath_decompose(phi_kv(w, g), g.spec());
      CHECK_FALSE(p.swap);
      CHECK(equal(p.section0, w, g.spec()));
      CHECK(equal(p.section1, rho_kv(w, g), g.spec()));
    }
  }
}

TEST_CASE("endomorphism parameters") {
  const auto k110 = KneadingGroup::kwv("1", "10");
  const auto data = derive_endomorphism_parameters(k110);
  CHECK(data.m == 2);
  CHECK(data.s.empty());
  CHECK(data.t == k110.gb(1));
  CHECK(data.all_ok());

  const auto k3 = KneadingGroup::kwv("110", "1");
  const auto d3 = derive_endomorphism_parameters(k3);
  CHECK(d3.m == 1);
  CHECK(d3.all_ok());

  CHECK_THROWS_AS(derive_endomorphism_parameters(KneadingGroup::kwv("0", "1")), DomainError);
  CHECK_THROWS_AS(derive_endomorphism_parameters(KneadingGroup::kv("0")), DomainError);
}

TEST_CASE("phi on K_{w,v}") {
  const auto g = KneadingGroup::kwv("1", "10");
  const auto data = derive_endomorphism_parameters(g);
  CHECK(phi_kwv(Word{}, g, data).empty());
  const auto p = wreath_decompose(phi_kwv(g.ga(2), g, data), g.spec());
  CHECK_FALSE(p.swap);
  CHECK(equal(p.section0, g.ga(2), g.spec()));
  CHECK(equal(p.section1, g.gb(1), g.spec()));

  // φ(b_j) = b_{j+1} when y_j = 0, b_{j+1}^{b_1} when y_j = 1.
  const auto k = KneadingGroup::kwv("01", "110");
  const auto dk = derive_endomorphism_parameters(k);
  CHECK(equal(phi_kwv(k.gb(1), k, dk), k.gb(2), k.spec()));
  const auto k2 = KneadingGroup::kwv("110", "1");
  const auto d2 = derive_endomorphism_parameters(k2);
  CHECK(equal(phi_kwv(k2.gb(1), k2, d2), conjugate(k2.gb(2), k2.gb(1), k2.spec()), k2.spec()));
}

TEST_CASE("phi identity on K_{w,v}") {
  std::mt19937 rng(23);
  for (auto [w, v] : {std::pair{"1", "10"}, {"110", "1"}, {"10", "1"}, {"01", "110"}, {"0", "111"}}) {
    const auto g = KneadingGroup::kwv(w, v);
    const auto data = derive_endomorphism_parameters(g);
    REQUIRE(data.all_ok());
    for (int i = 0; i < 30; ++i) {
      const Word x = test::random_word(g, 10, rng);
      const auto p = wreath_decompose(phi_kwv(x, g, data), g.spec());
      CHECK_FALSE(p.swap);
      CHECK(equal(p.section0, x, g.spec()));
      CHECK(equal(p.section1, rho_kwv(x, g, data), g.spec()));
    }
  }
}

TEST_CASE("mirror conjugator") {
  CHECK(mirror_conjugator_check(KneadingSpec::periodic("0")));
  CHECK(mirror_conjugator_check(KneadingSpec::periodic("")));
  CHECK(mirror_conjugator_check(KneadingSpec::preperiodic("0", "1")));
}

TEST_CASE("recurrence") {
  CHECK(recurrence_check(KneadingGroup::kv("0").spec()));
  CHECK(recurrence_check(KneadingGroup::kwv("1", "10").spec()));
  CHECK_FALSE(recurrence_check(AutomatonSpec({State{"e", {kIdentity, kIdentity}, false}})));
}

TEST_CASE("commutation") {
  CHECK(commutation_check(KneadingGroup::kwv("0", "111")));
  CHECK(commutation_check(KneadingGroup::kwv("0", "0101")));
  CHECK_THROWS_AS(commutation_check(KneadingGroup::kv("0")), DomainError);
}

TEST_CASE("branch witnesses") {
  auto r = branch_witnesses(KneadingGroup::kv("0"));
  CHECK(r.all_pass());
  bool found = false;
  for (const auto& line : r.lines) found |= line.name == "[a1,a2] != 1" && line.pass;
  CHECK(found);

  r = branch_witnesses(KneadingGroup::kwv("1", "10"));
  CHECK(r.all_pass());
  found = false;
  for (const auto& line : r.lines) found |= line.name.find("[b1,a1]") != std::string::npos && line.pass;
  CHECK(found);

  r = branch_witnesses(KneadingGroup::kwv("0", "1"));
  CHECK(r.summary == "dihedral; not weakly branch; no witnesses");
  CHECK(r.lines.empty());
}

TEST_CASE("generators are bounded with the stated rays") {
  // The ray of a_i in K_v is (x_{i-1}..x_1 1 x_{n-1}..x_i)^ω.
  for (const char* v : {"0", "11", "010", "0110"}) {
    const auto g = KneadingGroup::kv(v);
    const unsigned n = g.n();
    for (unsigned i = 1; i <= n; ++i) {
      const auto c = classify_state(g.a(i), g.spec());
      REQUIRE(std::holds_alternative<Directed>(c));
      std::string expect;
      for (unsigned j = i - 1; j >= 1; --j) expect += static_cast<char>('0' + g.x(j));
      expect += '1';
      for (unsigned j = n - 1; j >= i; --j) expect += static_cast<char>('0' + g.x(j));
      CHECK(std::get<Directed>(c).cycle == expect);
    }
  }
  for (auto [w, v] : {std::pair{"1", "10"}, {"110", "1"}, {"0", "111"}}) {
    const auto g = KneadingGroup::kwv(w, v);
    for (std::uint32_t s = 0; s < g.spec().size(); ++s) {
      const auto c = classify_state(s, g.spec());
      CHECK((std::holds_alternative<Finitary>(c) || std::holds_alternative<Directed>(c)));
    }
  }
}

TEST_CASE("involutions") {
  for (auto [w, v] : {std::pair{"1", "10"}, {"110", "1"}, {"0", "111"}, {"01", "0"}}) {
    const auto g = KneadingGroup::kwv(w, v);
    for (std::uint32_t s = 0; s < g.spec().size(); ++s) {
      const Word x = gen(g.spec(), s);
      CHECK(is_trivial(Word(x).concat(x), g.spec()));
    }
  }
}

}  // TEST_SUITE

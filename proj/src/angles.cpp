#include "img/angles.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "img/periodic.hpp"

namespace img {

Angle::Angle(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw DomainError("angle denominator must be positive");
  p %= q;
  if (p < 0) p += q;
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

Angle Angle::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw DomainError("malformed angle '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(number(text), 1);
  return Angle(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

std::string Angle::str() const {
  if (p_ == 0) return "0";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

bool operator<(const Angle& a, const Angle& b) {
  return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
}

DoublingOrbit doubling_orbit(const Angle& theta) {
  DoublingOrbit out;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  Angle cur = theta;
  while (true) {
    auto [it, fresh] = seen.emplace(std::pair{cur.num(), cur.den()}, out.orbit.size());
    if (!fresh) {
      out.preperiod = it->second;
      out.period = out.orbit.size() - it->second;
      return out;
    }
    out.orbit.push_back(cur);
    cur = cur.doubled();
  }
}

namespace {

// Sign of x - y for x = a/b and y = c/d, exactly.
int compare(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 l = static_cast<__int128>(a) * d, r = static_cast<__int128>(c) * b;
  return l < r ? -1 : (l > r ? 1 : 0);
}

}  // namespace

ItinerarySymbol itinerary_symbol(const Angle& theta, const Angle& alpha, bool literal) {
  // Boundary points θ/2 and (1+θ)/2.
  const std::int64_t lo_n = theta.num(), lo_d = 2 * theta.den();
  const std::int64_t hi_n = theta.num() + theta.den(), hi_d = 2 * theta.den();
  const int c_lo = compare(alpha.num(), alpha.den(), lo_n, lo_d);
  const int c_hi = compare(alpha.num(), alpha.den(), hi_n, hi_d);
  if (c_lo == 0 || c_hi == 0) return '*';
  const bool inside = c_lo > 0 && c_hi < 0;
  return (inside != literal) ? '1' : '0';
}

std::string itinerary(const Angle& theta, const Angle& alpha, std::size_t length, bool literal) {
  std::string out;
  Angle cur = alpha;
  for (std::size_t i = 0; i < length; ++i) {
    out += itinerary_symbol(theta, cur, literal);
    cur = cur.doubled();
  }
  return out;
}

KneadingResult kneading_sequence(const Angle& theta, bool literal) {
  KneadingResult r;
  r.orbit = doubling_orbit(theta);
  for (std::size_t i = 0; i < r.orbit.orbit.size(); ++i) {
    const char c = itinerary_symbol(theta, r.orbit.orbit[i], literal);
    (i < r.orbit.preperiod ? r.raw_prefix : r.raw_period) += c;
  }

  if (r.orbit.preperiod == 0) {
    // Periodic: (x_1 ... x_{n-1} *)^ω.
    std::string v = r.raw_period.substr(0, r.raw_period.size() - 1);
    r.canonical = KneadingSpec::periodic(std::move(v));
    r.kneading_period = r.raw_period.size();
    r.period_reduced = false;
    return r;
  }

  if (r.raw().find('*') != std::string::npos)
    throw DomainError("itinerary of preperiodic " + theta.str() + " meets the diameter: " + r.raw());
  auto bits = [](const std::string& s) {
    std::vector<std::uint8_t> out;
    for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
    return out;
  };
  const EventuallyPeriodicBits seq(bits(r.raw_prefix), bits(r.raw_period));
  std::string w, v;
  for (auto b : seq.preperiod()) w += static_cast<char>('0' + b);
  for (auto b : seq.period()) v += static_cast<char>('0' + b);
  if (w.empty())
    throw DomainError("kneading sequence of " + theta.str() + " is purely periodic: " + r.raw());
  r.canonical = KneadingSpec::preperiodic(std::move(w), std::move(v));
  r.kneading_period = r.canonical.v().size();
  r.period_reduced = r.kneading_period < r.orbit.period;
  return r;
}

KneadingGroup group_from_angle(const Angle& theta) { return KneadingGroup(kneading_sequence(theta).canonical); }

}  // namespace img

#include "img/automaton.hpp"

#include <json.hpp>

namespace img {

AutomatonSpec::AutomatonSpec(std::vector<State> states) : states_(std::move(states)) {
  for (std::uint32_t i = 0; i < states_.size(); ++i) {
    if (!by_name_.emplace(states_[i].name, i).second)
      throw DomainError("duplicate state name '" + states_[i].name + "'");
    has_involutions_ = has_involutions_ || states_[i].involution;
  }
  validate();
}

void AutomatonSpec::validate() const {
  const auto n = static_cast<std::int32_t>(states_.size());
  for (const State& s : states_) {
    if (s.name.empty() || s.name == "1")
      throw DomainError("invalid state name '" + s.name + "'");
    for (std::int32_t sec : s.sections)
      if (sec != kIdentity && (sec < 0 || sec >= n))
        throw DomainError("state '" + s.name + "' has an undeclared section");
  }
}

std::optional<std::uint32_t> AutomatonSpec::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t AutomatonSpec::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

std::vector<std::string> AutomatonSpec::names() const {
  std::vector<std::string> out;
  out.reserve(states_.size());
  for (const State& s : states_) out.push_back(s.name);
  return out;
}

std::uint32_t AutomatonSpec::append(const AutomatonSpec& other, std::string_view suffix) {
  const auto offset = static_cast<std::uint32_t>(states_.size());
  std::vector<State> merged = states_;
  for (State s : other.states_) {
    s.name += suffix;
    for (auto& sec : s.sections)
      if (sec != kIdentity) sec += static_cast<std::int32_t>(offset);
    merged.push_back(std::move(s));
  }
  *this = AutomatonSpec(std::move(merged));
  return offset;
}

Word reduce(std::span<const Symbol> raw, const AutomatonSpec& spec) {
  if (!spec.has_involutions()) return free_reduce(raw);
  return free_reduce(raw, [&spec](std::uint32_t s) { return spec.state(s).involution; });
}

Word multiply(const Word& g, const Word& h, const AutomatonSpec& spec) {
  return reduce(g.concat(h), spec);
}

Word inverse(const Word& g, const AutomatonSpec& spec) {
  return reduce(g.formal_inverse(), spec);
}

Word power(const Word& g, long long e, const AutomatonSpec& spec) {
  Word base = e < 0 ? inverse(g, spec) : g;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Word result;
  while (k > 0) {
    if (k & 1u) result = multiply(result, base, spec);
    k >>= 1u;
    if (k > 0) base = multiply(base, base, spec);
  }
  return result;
}

Word conjugate(const Word& g, const Word& h, const AutomatonSpec& spec) {
  return reduce(h.formal_inverse().concat(g).concat(h), spec);
}

Word commutator(const Word& g, const Word& h, const AutomatonSpec& spec) {
  return reduce(g.formal_inverse().concat(h.formal_inverse()).concat(g).concat(h), spec);
}

Word cyclic_reduce(const Word& g, const AutomatonSpec& spec) {
  Word r = reduce(g, spec);
  std::size_t lo = 0, hi = r.size();
  auto cancels = [&spec](Symbol a, Symbol b) {
    if (a == b.inverted()) return true;
    return a == b && spec.state(a.state).involution;
  };
  while (hi - lo >= 2 && cancels(r[lo], r[hi - 1])) {
    ++lo;
    --hi;
  }
  if (lo == 0) return r;
  return Word(std::vector<Symbol>(r.begin() + static_cast<std::ptrdiff_t>(lo),
                                  r.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word gen(const AutomatonSpec& spec, std::uint32_t state, bool inverse) {
  if (spec.state(state).involution) inverse = false;
  return Word::generator(state, inverse);
}

AutomatonSpec spec_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("automaton JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("states") || !doc["states"].is_array())
    throw DomainError("automaton JSON: expected an object with a \"states\" array");

  std::unordered_map<std::string, std::int32_t> index;
  const auto& arr = doc["states"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].contains("name") || !arr[i]["name"].is_string())
      throw DomainError("automaton JSON: state without a name");
    index[arr[i]["name"].get<std::string>()] = static_cast<std::int32_t>(i);
  }
  auto section = [&index](const nlohmann::json& v) -> std::int32_t {
    if (!v.is_string()) throw DomainError("automaton JSON: section must be a string");
    auto name = v.get<std::string>();
    if (name == "1") return kIdentity;
    auto it = index.find(name);
    if (it == index.end()) throw DomainError("automaton JSON: unknown section '" + name + "'");
    return it->second;
  };

  std::vector<State> states;
  for (const auto& s : arr) {
    State st;
    st.name = s["name"].get<std::string>();
    st.sections = {section(s.value("sec0", nlohmann::json("1"))),
                   section(s.value("sec1", nlohmann::json("1")))};
    st.active = s.value("active", false);
    st.involution = s.value("involution", false);
    states.push_back(std::move(st));
  }
  return AutomatonSpec(std::move(states));
}

std::string spec_to_json(const AutomatonSpec& spec, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  auto name = [&spec](std::int32_t sec) {
    return sec == kIdentity ? std::string("1") : spec.state(static_cast<std::uint32_t>(sec)).name;
  };
  for (const State& s : spec.states()) {
    nlohmann::json j{{"name", s.name},
                     {"sec0", name(s.sections[0])},
                     {"sec1", name(s.sections[1])},
                     {"active", s.active}};
    if (s.involution) j["involution"] = true;
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"states", arr}}.dump(indent);
}

}  // namespace img

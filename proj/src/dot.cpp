#include "img/dot.hpp"

#include <sstream>

namespace img {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string moore_dot(const AutomatonSpec& spec, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << quoted(graph_name) << " {\n";
  os << "  node [shape=circle, style=filled, fixedsize=true, width=0.45];\n";
  for (const State& s : spec.states()) {
    os << "  " << quoted(s.name);
    if (s.active) {
      std::string label = quoted(s.name);
      label.insert(label.size() - 1, "\\nσ");  // DOT line break, not escaped
      os << " [fillcolor=black, fontcolor=white, label=" << label << "]";
    } else {
      os << " [fillcolor=white, fontcolor=black, label=" << quoted(s.name) << "]";
    }
    os << ";\n";
  }
  for (const State& s : spec.states())
    for (unsigned x = 0; x < 2; ++x) {
      if (s.sections[x] == kIdentity) continue;
      const std::string& target = spec.state(static_cast<std::uint32_t>(s.sections[x])).name;
      os << "  " << quoted(s.name) << " -> " << quoted(target) << " [label=\"" << x << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace img

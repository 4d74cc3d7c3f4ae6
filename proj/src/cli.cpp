#include "img/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "img/angles.hpp"
#include "img/classify.hpp"
#include "img/dot.hpp"
#include "img/endomorphism.hpp"
#include "img/kneading.hpp"
#include "img/nucleus.hpp"
#include "img/order.hpp"
#include "img/parse.hpp"
#include "img/presentations.hpp"
#include "img/selfsimilar.hpp"
#include "img/tau.hpp"
#include "img/witnesses.hpp"

namespace img::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string bits, w, v, angle, file;
  bool literal = false;
  std::string word, word2, vertex;
  unsigned depth = 3;
  unsigned cap = kDefaultOrbitDepthCap;
  unsigned max_exp = 20;
  unsigned small_scan = 64;
  unsigned levels = 1;
  unsigned threads = 0;
  bool dot = false;
  std::string out_file;
};

struct Context {
  AutomatonSpec spec;
  std::optional<KneadingGroup> group;
  std::optional<KneadingResult> angle;
  std::string name;
  TauTable tau;
  OrderOptions order;
};

std::string dash_empty(const std::string& s) { return s == "-" ? std::string() : s; }

Word word_arg(const std::string& text, const Context& ctx) {
  const std::string t = dash_empty(text);
  if (t.empty()) return Word{};
  return parse_word(t, ctx.spec);
}

const KneadingGroup& family(const Context& ctx, const std::string& op) {
  if (!ctx.group) throw DomainError("'" + op + "' needs a K_v or K_{w,v} group, not a generic automaton");
  return *ctx.group;
}

Json header(const Context& ctx, const std::string& op) {
  Json j;
  j["group"] = ctx.name;
  j["kneading"] = ctx.group ? Json(ctx.group->kneading().str()) : Json(nullptr);
  j["command"] = op;
  return j;
}

Json order_json(const OrderResult& r) {
  Json j;
  if (const auto* f = std::get_if<FiniteOrder>(&r)) {
    j["finite"] = true;
    j["order"] = f->order;
  } else if (const auto* i = std::get_if<InfiniteOrder>(&r)) {
    j["finite"] = false;
    j["order"] = nullptr;
    j["witness"] = to_string(i->witness);
  } else {
    j["finite"] = nullptr;
    j["order"] = nullptr;
    j["unknown_bound"] = std::get<UnknownOrder>(r).bound;
  }
  j["description"] = describe(r);
  return j;
}

std::string bits_text(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (auto b : bits) s += static_cast<char>('0' + b);
  return s;
}

int cmd_nucleus(const Context& ctx, const Options&, std::ostream& out, Json* json) {
  const auto nucleus = nucleus_closure(ctx.spec, standard_seed(ctx.spec));
  std::optional<bool> agrees;
  std::size_t closed_size = 0;
  if (ctx.group) {
    const auto closed = nucleus_closed_form(*ctx.group);
    closed_size = closed.size();
    bool ok = closed.size() == nucleus.size();
    for (const Word& c : closed) {
      if (!ok) break;
      ok = std::any_of(nucleus.begin(), nucleus.end(), [&](const Word& g) { return equal(g, c, ctx.spec); });
    }
    agrees = ok;
  }
  if (json) {
    (*json)["size"] = nucleus.size();
    Json elems = Json::array();
    for (const Word& g : nucleus) elems.push_back(format_word(g, ctx.spec));
    (*json)["elements"] = elems;
    if (agrees) {
      (*json)["closed_form_size"] = closed_size;
      (*json)["closed_form_agrees"] = *agrees;
    }
    return kOk;
  }
  out << "nucleus of " << ctx.name << ": " << nucleus.size() << " elements\n";
  for (const Word& g : nucleus) out << "  " << format_word(g, ctx.spec) << '\n';
  if (agrees)
    out << "closed form: " << closed_size << " elements, " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  return kOk;
}

int cmd_order(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const Word g = word_arg(o.word, ctx);
  OrderOptions opts = ctx.order;
  opts.max_exp = o.max_exp;
  opts.small_scan = o.small_scan;
  const OrderResult r = order_probe(g, ctx.spec, ctx.tau, opts);
  if (json) {
    (*json)["word"] = format_word(g, ctx.spec);
    json->update(order_json(r));
    return kOk;
  }
  out << describe(r) << '\n';
  return kOk;
}

int cmd_bool(bool value, std::ostream& out, Json* json) {
  if (json)
    (*json)["result"] = value;
  else
    out << (value ? "true" : "false") << '\n';
  return kOk;
}

int cmd_act(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const Word g = word_arg(o.word, ctx);
  const Vertex v = Vertex::parse(dash_empty(o.vertex));
  const Vertex image = act(g, v, ctx.spec);
  if (json) {
    (*json)["word"] = format_word(g, ctx.spec);
    (*json)["vertex"] = v.str();
    (*json)["image"] = image.str();
    return kOk;
  }
  out << (image.level() ? image.str() : "-") << '\n';
  return kOk;
}

int cmd_orbit(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const Word g = word_arg(o.word, ctx);
  const auto cycles = orbit_on_level(g, o.depth, ctx.spec, o.cap);
  if (json) {
    (*json)["word"] = format_word(g, ctx.spec);
    (*json)["depth"] = o.depth;
    Json cs = Json::array();
    for (const auto& c : cycles) {
      Json one = Json::array();
      for (const Vertex& v : c) one.push_back(v.str());
      cs.push_back(one);
    }
    (*json)["cycles"] = cs;
    return kOk;
  }
  out << cycles.size() << " cycles on level " << o.depth << '\n';
  for (const auto& c : cycles) {
    out << "  (";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << (c[i].level() ? c[i].str() : "-");
    out << ")\n";
  }
  return kOk;
}

int cmd_abelianize(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const KneadingGroup& group = family(ctx, "abelianize");
  const Word g = word_arg(o.word, ctx);
  const AbelianImage a = abelianize(g, group);
  if (json) {
    (*json)["word"] = format_word(g, ctx.spec);
    (*json)["modulus"] = a.mod2 ? 2 : 0;
    (*json)["coords"] = a.coords;
    return kOk;
  }
  out << a.str() << (a.mod2 ? " mod 2" : "") << '\n';
  return kOk;
}

int cmd_tau(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const Word g = word_arg(o.word, ctx);
  const EventuallyPeriodicBits t = tau(g, ctx.tau);
  if (json) {
    (*json)["word"] = format_word(g, ctx.spec);
    (*json)["preperiod"] = bits_text(t.preperiod());
    (*json)["period"] = bits_text(t.period());
    (*json)["result"] = to_string(t);
    return kOk;
  }
  out << to_string(t) << '\n';
  return kOk;
}

int cmd_relators(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const KneadingGroup& group = family(ctx, "relators");
  const auto words = presentation_relators(group, o.levels);
  if (json) {
    (*json)["levels"] = o.levels;
    (*json)["count"] = words.size();
    Json list = Json::array();
    for (const Word& w : words) list.push_back(format_word(w, ctx.spec));
    (*json)["relators"] = list;
    return kOk;
  }
  out << words.size() << " relators up to level " << o.levels << '\n';
  for (const Word& w : words) out << format_word(w, ctx.spec) << '\n';
  return kOk;
}

int cmd_check_presentation(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const KneadingGroup& group = family(ctx, "check-presentation");
  const auto words = presentation_relators(group, o.levels);
  const RelatorReport rep = verify_relators(words, ctx.spec, o.threads);

  std::optional<EndomorphismData> data;
  if (!group.periodic()) data = derive_endomorphism_parameters(group);
  const PresentationDoc doc = emit_hnn(group, data ? &*data : nullptr);
  std::vector<std::string> hnn_failures;
  for (const auto& r : doc.relators)
    if (!is_trivial(evaluate_hnn(r, group, data ? &*data : nullptr), ctx.spec)) hnn_failures.push_back(r);

  const bool ok = rep.failures.empty() && hnn_failures.empty();
  if (json) {
    (*json)["levels"] = o.levels;
    (*json)["total"] = rep.total;
    (*json)["distinct"] = rep.distinct;
    Json f = Json::array();
    for (std::size_t i : rep.failures) f.push_back(format_word(words[i], ctx.spec));
    (*json)["failures"] = f;
    (*json)["hnn_total"] = doc.relators.size();
    (*json)["hnn_failures"] = hnn_failures;
    (*json)["result"] = ok;
  } else {
    out << "relators: " << rep.total << " (distinct " << rep.distinct << "), failures: " << rep.failures.size()
        << '\n';
    for (std::size_t i : rep.failures) out << "  not trivial: " << format_word(words[i], ctx.spec) << '\n';
    out << "hnn relators: " << doc.relators.size() << ", failures: " << hnn_failures.size() << '\n';
    for (const auto& r : hnn_failures) out << "  not trivial: " << r << '\n';
  }
  return ok ? kOk : kDomainError;
}

int cmd_hnn(const Context& ctx, const Options&, std::ostream& out, Json* json) {
  const KneadingGroup& group = family(ctx, "hnn");
  std::optional<EndomorphismData> data;
  if (!group.periodic()) data = derive_endomorphism_parameters(group);
  const PresentationDoc doc = emit_hnn(group, data ? &*data : nullptr);
  if (json) {
    (*json)["generators"] = doc.generators;
    (*json)["relators"] = doc.relators;
    (*json)["identification"] = doc.identification;
    (*json)["p"] = doc.p;
    (*json)["q"] = doc.q.empty() ? Json(nullptr) : Json(doc.q);
    return kOk;
  }
  out << "p(t) = " << doc.p << '\n';
  if (!doc.q.empty()) out << "q(t) = " << doc.q << '\n';
  for (const auto& line : doc.identification) out << "# " << line << '\n';
  out << doc.text();
  return kOk;
}

int cmd_moore(const Context& ctx, const Options& o, std::ostream& out, Json* json) {
  const std::string dot = moore_dot(ctx.spec, ctx.name);
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw DomainError("cannot write '" + o.out_file + "'");
    f << dot;
    if (json)
      (*json)["out"] = o.out_file;
    else
      out << "wrote " << o.out_file << '\n';
    return kOk;
  }
  if (json)
    (*json)["dot"] = dot;
  else
    out << dot;
  return kOk;
}

int cmd_classify(const Context& ctx, const Options&, std::ostream& out, Json* json) {
  Json list = Json::array();
  for (std::uint32_t s = 0; s < ctx.spec.size(); ++s) {
    const std::string d = describe(classify_state(s, ctx.spec));
    if (json)
      list.push_back({{"state", ctx.spec.state(s).name}, {"class", d}});
    else
      out << ctx.spec.state(s).name << ": " << d << '\n';
  }
  if (json) (*json)["states"] = list;
  return kOk;
}

int cmd_witnesses(const Context& ctx, const Options&, std::ostream& out, Json* json) {
  const WitnessReport rep = branch_witnesses(family(ctx, "witnesses"));
  if (json) {
    (*json)["summary"] = rep.summary;
    Json lines = Json::array();
    for (const auto& l : rep.lines) lines.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    (*json)["witnesses"] = lines;
    (*json)["result"] = rep.all_pass();
  } else {
    out << rep.summary << '\n';
    for (const auto& l : rep.lines)
      out << (l.pass ? "pass  " : "FAIL  ") << l.name << (l.detail.empty() ? "" : "  [" + l.detail + "]") << '\n';
  }
  return rep.all_pass() ? kOk : kDomainError;
}

int cmd_endo(const Context& ctx, const Options&, std::ostream& out, Json* json) {
  const KneadingGroup& group = family(ctx, "endo-params");
  const EndomorphismData data = derive_endomorphism_parameters(group);
  auto fmt = [&](const Word& w) { return format_word(w, ctx.spec); };
  std::string u_spelled;
  for (unsigned g : data.u_spelling) u_spelled += std::string(u_spelled.empty() ? "" : " ") + kUGeneratorText[g];
  if (u_spelled.empty()) u_spelled = "1";
  if (json) {
    (*json)["m"] = data.m;
    (*json)["r"] = fmt(data.r);
    (*json)["s"] = fmt(data.s);
    (*json)["t"] = fmt(data.t);
    (*json)["u"] = fmt(data.u);
    (*json)["u_spelled"] = u_spelled;
    Json phi;
    for (std::uint32_t s = 0; s < ctx.spec.size(); ++s) phi[ctx.spec.state(s).name] = fmt(data.images[s]);
    (*json)["phi"] = phi;
    (*json)["checks"] = {{"sections", data.sections_ok},
                         {"small_dihedral", data.small_dihedral_ok},
                         {"large_dihedral", data.large_dihedral_ok},
                         {"phi_s", data.phi_s_ok}};
    (*json)["result"] = data.all_ok();
  } else {
    out << "m = " << data.m << '\n';
    if (!data.r.empty()) out << "r = " << fmt(data.r) << '\n';
    out << "s = " << fmt(data.s) << '\n';
    out << "t = " << fmt(data.t) << '\n';
    out << "u = " << fmt(data.u) << "  (" << u_spelled << ")\n";
    for (std::uint32_t s = 0; s < ctx.spec.size(); ++s)
      out << "phi(" << ctx.spec.state(s).name << ") = " << fmt(data.images[s]) << '\n';
    out << "section table: " << (data.sections_ok ? "ok" : "FAILED") << '\n';
    out << "order(a_n^s b_k) = 2^m: " << (data.small_dihedral_ok ? "ok" : "FAILED") << '\n';
    out << "order(a_1^t b_1) = 2^(m+1): " << (data.large_dihedral_ok ? "ok" : "FAILED") << '\n';
    out << "phi(s) in {t, b1 t}: " << (data.phi_s_ok ? "yes" : "no (informational)") << '\n';
  }
  return data.all_ok() ? kOk : kDomainError;
}

int cmd_angle_report(const Context& ctx, std::ostream& out, Json* json) {
  const KneadingResult& k = *ctx.angle;
  if (json) {
    Json orbit = Json::array();
    for (const Angle& a : k.orbit.orbit) orbit.push_back(a.str());
    (*json)["orbit"] = orbit;
    (*json)["preperiod"] = k.orbit.preperiod;
    (*json)["period"] = k.orbit.period;
    (*json)["raw"] = k.raw();
    Json canon;
    canon["kind"] = k.canonical.is_periodic() ? "periodic" : "preperiodic";
    canon["w"] = k.canonical.is_periodic() ? Json(nullptr) : Json(k.canonical.w());
    canon["v"] = k.canonical.v();
    (*json)["canonical"] = canon;
    (*json)["kneading_period"] = k.kneading_period;
    (*json)["period_reduced"] = k.period_reduced;
    return kOk;
  }
  out << "orbit: ";
  for (const Angle& a : k.orbit.orbit) out << a.str() << " -> ";
  out << k.orbit.orbit[k.orbit.preperiod].str() << '\n';
  out << "preperiod: " << k.orbit.preperiod << '\n';
  out << "period: " << k.orbit.period << '\n';
  out << "raw: " << k.raw() << '\n';
  out << "canonical: " << k.canonical.str() << '\n';
  out << "kneading period: " << k.kneading_period << (k.period_reduced ? " (divides the angle period)" : "")
      << '\n';
  out << "group: " << ctx.name << '\n';
  return kOk;
}

void add_ops(CLI::App* parent, Options& o) {
  parent->require_subcommand(0, 1);
  auto word = [&](CLI::App* sub, std::string* target, const char* name = "word") {
    sub->add_option(name, *target, "group word, e.g. \"[a1,a2]\" or \"a2^a1\"")->required();
  };
  auto* sub = parent->add_subcommand("nucleus", "nucleus of the wreath recursion");
  sub = parent->add_subcommand("order", "order of an element");
  word(sub, &o.word);
  sub->add_option("--max-exp", o.max_exp, "try g^(2^j) up to this j")->capture_default_str();
  sub->add_option("--small-scan", o.small_scan, "try g^m for m up to this")->capture_default_str();
  sub = parent->add_subcommand("trivial", "is the word the identity");
  word(sub, &o.word);
  sub = parent->add_subcommand("equal", "do two words define the same element");
  word(sub, &o.word, "word1");
  word(sub, &o.word2, "word2");
  sub = parent->add_subcommand("act", "image of a vertex (bitstring, '-' for the root)");
  word(sub, &o.word);
  sub->add_option("vertex", o.vertex, "vertex")->required();
  sub = parent->add_subcommand("orbit", "cycles on a level");
  word(sub, &o.word);
  sub->add_option("--depth", o.depth, "level")->capture_default_str();
  sub->add_option("--cap", o.cap, "largest allowed level")->capture_default_str();
  sub = parent->add_subcommand("abelianize", "image in the abelianization");
  word(sub, &o.word);
  sub = parent->add_subcommand("tau", "parity sequence of active sections");
  word(sub, &o.word);
  sub = parent->add_subcommand("transitive", "is the element level-transitive");
  word(sub, &o.word);
  sub = parent->add_subcommand("relators", "relators of the L-presentation");
  sub->add_option("--levels", o.levels, "phi-iterates")->capture_default_str();
  sub = parent->add_subcommand("check-presentation", "verify relators with the word problem");
  sub->add_option("--levels", o.levels, "phi-iterates")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads (0: all cores)")->capture_default_str();
  parent->add_subcommand("hnn", "finitely presented HNN overgroup");
  sub = parent->add_subcommand("moore", "Moore diagram");
  sub->add_flag("--dot", o.dot, "DOT output (the only format)");
  sub->add_option("--out", o.out_file, "write to a file instead of stdout");
  parent->add_subcommand("classify", "finitary/directed/bounded classification of the states");
  parent->add_subcommand("witnesses", "branchness proof ingredients");
  parent->add_subcommand("endo-params", "endomorphism parameters s, t, m, u");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Automaton groups K_v and K_{w,v}: word problem, nuclei, presentations"};
  app.name("img");
  app.add_flag("--json", o.json, "JSON output");
  app.require_subcommand(1);

  auto* kv = app.add_subcommand("kv", "K_v from a periodic kneading word ('-' for the empty word)");
  kv->add_option("bits", o.bits, "v = x_1...x_{n-1}")->required();
  auto* kwv = app.add_subcommand("kwv", "K_{w,v} from a preperiodic kneading pair");
  kwv->add_option("w", o.w, "w = y_1...y_k")->required();
  kwv->add_option("v", o.v, "v = x_1...x_n")->required();
  auto* angle = app.add_subcommand("angle", "the group of a rational external angle p/q");
  angle->add_option("angle", o.angle, "p/q")->required();
  angle->add_flag("--literal", o.literal, "label the arc containing the angle 0");
  auto* file = app.add_subcommand("automaton", "an automaton given as JSON");
  file->add_option("file", o.file, "JSON file")->required();
  for (CLI::App* parent : {kv, kwv, angle, file}) {
    parent->fallthrough();
    add_ops(parent, o);
    for (CLI::App* sub : parent->get_subcommands({})) sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "img: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  CLI::App* ctor = app.get_subcommands().front();
  std::vector<CLI::App*> ops = ctor->get_subcommands();
  const std::string op = ops.empty() ? "" : ops.front()->get_name();

  try {
    Context ctx;
    if (ctor == kv) {
      ctx.group.emplace(KneadingGroup::kv(dash_empty(o.bits)));
    } else if (ctor == kwv) {
      ctx.group.emplace(KneadingGroup::kwv(o.w, o.v));
    } else if (ctor == angle) {
      const Angle theta = Angle::parse(o.angle);
      ctx.angle = kneading_sequence(theta, o.literal);
      ctx.group.emplace(ctx.angle->canonical);
    } else {
      std::ifstream in(o.file);
      if (!in) throw DomainError("cannot read '" + o.file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      ctx.spec = spec_from_json(buf.str());
      ctx.name = o.file;
    }
    if (ctx.group) {
      ctx.spec = ctx.group->spec();
      ctx.name = ctx.group->name();
      ctx.order = ctx.group->order_options();
    }
    ctx.tau = generator_tau(ctx.spec);

    if (op.empty() && !ctx.angle) {
      err << "img: missing operation\n\n" << ctor->help();
      return kUsageError;
    }

    Json json = header(ctx, op.empty() ? "angle" : op);
    Json* jp = o.json ? &json : nullptr;
    int code = kOk;
    if (op.empty())
      code = cmd_angle_report(ctx, out, jp);
    else if (op == "nucleus")
      code = cmd_nucleus(ctx, o, out, jp);
    else if (op == "order")
      code = cmd_order(ctx, o, out, jp);
    else if (op == "trivial")
      code = cmd_bool(is_trivial(word_arg(o.word, ctx), ctx.spec), out, jp);
    else if (op == "equal")
      code = cmd_bool(equal(word_arg(o.word, ctx), word_arg(o.word2, ctx), ctx.spec), out, jp);
    else if (op == "act")
      code = cmd_act(ctx, o, out, jp);
    else if (op == "orbit")
      code = cmd_orbit(ctx, o, out, jp);
    else if (op == "abelianize")
      code = cmd_abelianize(ctx, o, out, jp);
    else if (op == "tau")
      code = cmd_tau(ctx, o, out, jp);
    else if (op == "transitive")
      code = cmd_bool(is_level_transitive_element(word_arg(o.word, ctx), ctx.tau), out, jp);
    else if (op == "relators")
      code = cmd_relators(ctx, o, out, jp);
    else if (op == "check-presentation")
      code = cmd_check_presentation(ctx, o, out, jp);
    else if (op == "hnn")
      code = cmd_hnn(ctx, o, out, jp);
    else if (op == "moore")
      code = cmd_moore(ctx, o, out, jp);
    else if (op == "classify")
      code = cmd_classify(ctx, o, out, jp);
    else if (op == "witnesses")
      code = cmd_witnesses(ctx, o, out, jp);
    else if (op == "endo-params")
      code = cmd_endo(ctx, o, out, jp);
    if (o.json) out << json.dump(2) << '\n';
    return code;
  } catch (const DomainError& e) {
    err << "img: " << e.what() << '\n';
    return kDomainError;
  } catch (const NonContractingError& e) {
    err << "img: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace img::cli

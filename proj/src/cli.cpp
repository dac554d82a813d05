#include "cabling/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "cabling/cable.hpp"
#include "cabling/errors.hpp"
#include "cabling/jn.hpp"
#include "cabling/oracle.hpp"

namespace cabling::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::string& need(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing --") + flag);
  return *value;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

ExtRational rational(const std::string& text) { return ExtRational::parse(text); }

Integer integer(const std::string& text, const char* flag) {
  const ExtRational x = rational(text);
  if (!x.is_integer()) throw UsageError(std::string("--") + flag + " must be an integer");
  return x.numerator();
}

std::vector<ExtRational> rationals(const std::optional<std::string>& text) {
  std::vector<ExtRational> out;
  if (text) {
    for (const auto& item : split(*text)) out.push_back(rational(item));
  }
  return out;
}

// --J is 1-based on the command line.
std::set<std::size_t> indices(const std::optional<std::string>& text) {
  std::set<std::size_t> out;
  if (!text) return out;
  for (const auto& item : split(*text)) {
    const Integer k = integer(item, "J");
    if (k < 1) throw UsageError("--J indices start at 1");
    out.insert(k.get_ui() - 1);
  }
  return out;
}

CableParams params_from(const CommandArgs& a) { return bezout(integer(need(a.p, "p"), "p"), integer(need(a.q, "q"), "q")); }

bool cable_strict(const CommandArgs& a) {
  const auto J = indices(a.J);
  if (J.size() > 1 || (J.size() == 1 && *J.begin() != 0)) throw UsageError("cable commands accept --J \"\" or --J 1");
  return !J.empty();
}

void echo(CommandResult& r, const CommandArgs& a) {
  auto add = [&](const char* name, const std::optional<std::string>& v) {
    if (v) r.inputs.emplace_back(name, *v);
  };
  add("p", a.p);
  add("q", a.q);
  add("b", a.b);
  add("J", a.J);
  add("gamma", a.gamma);
  add("tau", a.tau);
  add("input", a.input);
  add("mode", a.mode);
  add("direction", a.direction);
}

CommandResult start(const char* command, const CommandArgs& a) {
  CommandResult r;
  r.command = command;
  echo(r, a);
  return r;
}

WitnessRecord record(const JNWitness& w) {
  WitnessRecord out{w.A.get_str(), w.N.get_str(), {}};
  for (const auto& x : w.assignment) out.assignment.push_back(x.to_string());
  return out;
}

CommandResult cmd_jn(const CommandArgs& a) {
  CommandResult r = start("jn", a);
  SeifertTuple t{rationals(a.gamma), rationals(a.tau), indices(a.J), integer(need(a.b, "b"), "b")};
  for (auto j : t.strict) {
    if (j >= t.taus.size()) throw UsageError("--J index beyond the tau list");
  }
  const JNDecision d = jn_realizable(t);
  r.flag = d.realizable;
  if (d.witness) r.witness = record(*d.witness);
  r.refs.push_back(to_string(d.rule));
  return r;
}

CommandResult cmd_interval(const CommandArgs& a) {
  CommandResult r = start("interval", a);
  const auto ci = cable_interval(params_from(a), cable_strict(a), rational(need(a.tau, "tau")));
  r.set = {ci.result.t.to_string(), ci.result.t_strict.to_string()};
  r.labels = {"T", "T~"};
  r.values = {{"m0", ci.result.quantities.m0.get_str()}, {"m1", ci.result.quantities.m1.get_str()}};
  r.refs.push_back(to_string(ci.branch));
  if (ci.result.degenerate) r.refs.push_back("degenerate singleton");
  return r;
}

CommandResult cmd_ray_union(const CommandArgs& a) {
  CommandResult r = start("ray-union", a);
  const std::string& dir = need(a.direction, "direction");
  if (dir != "geq" && dir != "leq") throw UsageError("--direction must be geq or leq");
  const auto set =
      ray_union(params_from(a), dir == "geq" ? RayDirection::Geq : RayDirection::Leq, rational(need(a.tau, "tau")));
  r.set = {set.to_string()};
  r.refs.push_back("monotone ray union");
  return r;
}

CommandResult cmd_cable(const CommandArgs& a) {
  CommandResult r = start("cable", a);
  const DetectionMode mode = parse_mode(a.mode.value_or("regular"));
  const auto out = cable_detected_set(params_from(a), SlopeSet::parse(need(a.input, "input")), mode);
  r.set = {out.set.to_string()};
  r.exactness = to_string(out.exactness);
  r.refs = {"basis change f", "union of cable intervals", "basis change g", "fiber slope passes through"};
  return r;
}

CommandResult cmd_torus(const CommandArgs& a) {
  CommandResult r = start("torus", a);
  const auto sets = torus_knot_detected(integer(need(a.p, "p"), "p"), integer(need(a.q, "q"), "q"));
  r.set = {sets.regular.to_string(), sets.strong.to_string()};
  r.labels = {"regular", "strong"};
  r.refs = {"cable of the unknot", "strict interval at tau = r/p"};
  return r;
}

CommandResult cmd_oracle(const CommandArgs& a) {
  CommandResult r = start("oracle", a);
  r.inputs.emplace_back("max-denominator", std::to_string(a.max_denominator));
  const auto params = params_from(a);
  const bool strict = cable_strict(a);
  const ExtRational tau = rational(need(a.tau, "tau"));
  const auto ci = cable_interval(params, strict, tau);
  const auto report = grid_scan_interval(params, tau, ci.result.t_set(), {strict, false, a.max_denominator});
  if (report.hull_low) {
    r.set = {Arc::closed(*report.hull_low, *report.hull_high).to_string()};
  } else {
    r.set = {SlopeSet{}.to_string()};
  }
  r.labels = {"hull"};
  r.flag = report.passed();
  r.values = {{"expected", ci.result.t.to_string()},
              {"tested_points", std::to_string(report.tested_points)},
              {"mismatches", std::to_string(report.mismatches.size())},
              {"conflicts", std::to_string(report.conflicts.size())}};
  r.refs = {"independent grid decision", "jn cross-check"};
  return r;
}

CommandResult cmd_bezout(const CommandArgs& a) {
  CommandResult r = start("bezout", a);
  const auto c = params_from(a);
  r.values = {{"r", c.r.get_str()}, {"s", c.s.get_str()}, {"gamma", c.gamma().to_string()}};
  r.refs = {"ps + qr = 1 with -q < s < 0 < r <= p"};
  return r;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string value_of(const CommandResult& r, const std::string& key) {
  for (const auto& [k, v] : r.values) {
    if (k == key) return v;
  }
  return "";
}

}  // namespace

std::string to_json(const CommandResult& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = Json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  Json res = Json::object();
  res["set"] = r.set;
  if (!r.labels.empty()) res["labels"] = r.labels;
  if (r.exactness) res["exactness"] = *r.exactness;
  if (r.flag) res["flag"] = *r.flag;
  if (r.witness) res["witness"] = {{"A", r.witness->A}, {"N", r.witness->N}, {"assignment", r.witness->assignment}};
  if (!r.values.empty()) {
    res["values"] = Json::object();
    for (const auto& [k, v] : r.values) res["values"][k] = v;
  }
  j["result"] = res;
  j["refs"] = r.refs;
  return j.dump(2);
}

CommandResult from_json(const std::string& text) {
  const Json j = Json::parse(text);
  CommandResult r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  const Json& res = j.at("result");
  r.set = res.at("set").get<std::vector<std::string>>();
  if (res.contains("labels")) r.labels = res["labels"].get<std::vector<std::string>>();
  if (res.contains("exactness")) r.exactness = res["exactness"].get<std::string>();
  if (res.contains("flag")) r.flag = res["flag"].get<bool>();
  if (res.contains("witness")) {
    const Json& w = res["witness"];
    r.witness = WitnessRecord{w.at("A").get<std::string>(), w.at("N").get<std::string>(),
                              w.at("assignment").get<std::vector<std::string>>()};
  }
  if (res.contains("values")) {
    for (const auto& [k, v] : res["values"].items()) r.values.emplace_back(k, v.get<std::string>());
  }
  r.refs = j.at("refs").get<std::vector<std::string>>();
  return r;
}

std::string to_text(const CommandResult& r) {
  if (r.command == "jn") {
    std::string out = std::string(r.flag.value_or(false) ? "true" : "false") + " (" + joined(r.refs, "; ") + ")";
    if (r.witness) out += " witness A=" + r.witness->A + " N=" + r.witness->N + " [" + joined(r.witness->assignment, ",") + "]";
    return out;
  }
  if (r.command == "interval") return r.set.at(0) + " (T), " + r.set.at(1) + " (T~)";
  if (r.command == "torus") return r.set.at(0) + " regular; " + r.set.at(1) + " strong";
  if (r.command == "cable") return r.set.at(0) + " (" + r.exactness.value_or("?") + ")";
  if (r.command == "oracle") {
    return "hull " + r.set.at(0) + " expected " + value_of(r, "expected") + ", " + value_of(r, "tested_points") +
           " points, " + value_of(r, "mismatches") + " mismatches, " + value_of(r, "conflicts") + " conflicts";
  }
  if (r.command == "bezout") return "r=" + value_of(r, "r") + ", s=" + value_of(r, "s");
  return joined(r.set, "; ");
}

CommandResult run_command(const std::string& name, const CommandArgs& args) {
  if (name == "jn") return cmd_jn(args);
  if (name == "interval") return cmd_interval(args);
  if (name == "ray-union") return cmd_ray_union(args);
  if (name == "cable") return cmd_cable(args);
  if (name == "torus") return cmd_torus(args);
  if (name == "oracle") return cmd_oracle(args);
  if (name == "bezout") return cmd_bezout(args);
  throw UsageError("unknown command '" + name + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slope intervals for cable spaces and cabled knots"};
  app.require_subcommand(1);
  CommandArgs args;
  std::string format = "text";

  struct Flags {
    std::string p, q, b, J, gamma, tau, input, mode, direction;
  };
  Flags flags;
  auto sub = [&](const char* name, const char* help, std::initializer_list<const char*> used) {
    CLI::App* s = app.add_subcommand(name, help);
    for (const char* f : used) {
      const std::string flag = f;
      std::string* slot = flag == "p"         ? &flags.p
                          : flag == "q"       ? &flags.q
                          : flag == "b"       ? &flags.b
                          : flag == "J"       ? &flags.J
                          : flag == "gamma"   ? &flags.gamma
                          : flag == "tau"     ? &flags.tau
                          : flag == "input"   ? &flags.input
                          : flag == "mode"    ? &flags.mode
                                              : &flags.direction;
      s->add_option("--" + flag, *slot);
    }
    s->add_option("--max-denominator", args.max_denominator)->check(CLI::Range(2L, 1000L));
    s->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    return s;
  };
  sub("jn", "JN-realisability of (J; b; gamma; tau)", {"J", "b", "gamma", "tau"});
  sub("interval", "cable interval T and strict set T~ at tau", {"p", "q", "J", "tau"});
  sub("ray-union", "union of cable intervals over a ray of tau", {"p", "q", "tau", "direction"});
  sub("cable", "detected slopes of the (p,q)-cable from the companion's set", {"p", "q", "input", "mode"});
  sub("torus", "detected slopes of the (p,q) torus knot", {"p", "q"});
  sub("oracle", "grid check of the cable interval at tau", {"p", "q", "J", "tau"});
  sub("bezout", "the Bezout pair (r, s)", {"p", "q"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  auto grab = [&](const char* name, const std::string& value, std::optional<std::string>& slot) {
    if (chosen->get_option_no_throw(std::string("--") + name) && chosen->count(std::string("--") + name) > 0) {
      slot = value;
    }
  };
  grab("p", flags.p, args.p);
  grab("q", flags.q, args.q);
  grab("b", flags.b, args.b);
  grab("J", flags.J, args.J);
  grab("gamma", flags.gamma, args.gamma);
  grab("tau", flags.tau, args.tau);
  grab("input", flags.input, args.input);
  grab("mode", flags.mode, args.mode);
  grab("direction", flags.direction, args.direction);

  try {
    const CommandResult result = run_command(chosen->get_name(), args);
    out << (format == "json" ? to_json(result) : to_text(result)) << '\n';
    if (result.command == "oracle" && !result.flag.value_or(false)) return kOracleMismatch;
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error (" << e.source() << "): " << e.what() << '\n';
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::overflow_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace cabling::cli

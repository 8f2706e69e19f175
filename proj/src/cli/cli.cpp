#include "prn/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "prn/algebra.hpp"
#include "prn/criteria.hpp"
#include "prn/error.hpp"
#include "prn/matgrp.hpp"
#include "prn/oracle.hpp"
#include "prn/wreath.hpp"

namespace prn {

namespace {

using Clock = std::chrono::steady_clock;

struct Ambient {
  std::string name;
  GroupPtr group;
  std::shared_ptr<const WreathProduct> wreath;
  std::shared_ptr<const GenericWreath> generic;
};

using Builder = std::function<Ambient(std::size_t)>;

Ambient from_group(std::string name, GroupPtr g) { return Ambient{std::move(name), std::move(g), {}, {}}; }

Ambient from_wreath(std::string name, WreathGroupSpec spec, std::size_t cap) {
  Ambient a;
  a.name = std::move(name);
  a.wreath = std::make_shared<const WreathProduct>(std::move(spec), cap);
  a.group = a.wreath->group();
  return a;
}

Ambient from_generic(std::string name, GroupPtr base, std::uint32_t n, std::size_t cap) {
  Ambient a;
  a.name = std::move(name);
  a.generic = std::make_shared<const GenericWreath>(std::move(base), n, cap);
  a.group = a.generic->group();
  return a;
}

const std::map<std::string, Builder>& builtins() {
  static const std::map<std::string, Builder> table = {
      {"alt4", [](std::size_t) { return from_group("alt4", build_alternating(4)); }},
      {"alt5", [](std::size_t) { return from_group("alt5", build_alternating(5)); }},
      {"psl2_7", [](std::size_t) { return from_group("psl2_7", build_psl2_7()); }},
      {"sp2_3", [](std::size_t cap) { return from_group("sp2_3", build_sp2(3, cap)); }},
      {"sp2_3_wr_sym2",
       [](std::size_t cap) { return from_generic("sp2_3_wr_sym2", build_sp2(3, cap), 2, cap); }},
      {"sp2_3_wr_sym3",
       [](std::size_t cap) { return from_generic("sp2_3_wr_sym3", build_sp2(3, cap), 3, cap); }},
      {"sym3", [](std::size_t) { return from_group("sym3", build_symmetric(3)); }},
      {"sym4", [](std::size_t) { return from_group("sym4", build_symmetric(4)); }},
      {"sym5", [](std::size_t) { return from_group("sym5", build_symmetric(5)); }},
      {"z3_wr_sym2", [](std::size_t cap) { return from_wreath("z3_wr_sym2", {{{3, 2}}}, cap); }},
      {"z3_wr_sym3", [](std::size_t cap) { return from_wreath("z3_wr_sym3", {{{3, 3}}}, cap); }},
  };
  return table;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

std::uint32_t small_uint(const Json& j, const char* what) {
  const bool non_negative =
      j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
  if (!non_negative || j.get<std::uint64_t>() > 0xFFFFFFFFu)
    parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint32_t>();
}

Ambient resolve_ambient(const Json& input, std::size_t cap, const char* fallback = nullptr) {
  if (!input.contains("ambient")) {
    if (fallback) return builtins().at(fallback)(cap);
    parse_error("missing \"ambient\"");
  }
  const Json& a = input.at("ambient");
  if (a.is_object() && a.contains("builtin")) {
    if (!a.at("builtin").is_string()) parse_error("\"builtin\" must be a string");
    const std::string name = a.at("builtin").get<std::string>();
    auto it = builtins().find(name);
    if (it == builtins().end()) parse_error("unknown builtin group \"" + name + "\"");
    return it->second(cap);
  }
  if (a.is_object() && a.contains("factors")) {
    const Json& fs = a.at("factors");
    if (!fs.is_array() || fs.empty()) parse_error("\"factors\" must be a non-empty array");
    WreathGroupSpec spec;
    std::string name;
    for (const Json& f : fs) {
      if (!f.is_object() || !f.contains("p") || !f.contains("n"))
        parse_error("each factor needs \"p\" and \"n\"");
      spec.factors.push_back({small_uint(f.at("p"), "p"), small_uint(f.at("n"), "n")});
      if (!name.empty()) name += " x ";
      name += "Z" + std::to_string(spec.factors.back().p) + " wr Sym" +
              std::to_string(spec.factors.back().n);
    }
    try {
      spec.validate();
    } catch (const Error& e) {
      parse_error(e.what());
    }
    return from_wreath(name, std::move(spec), cap);
  }
  parse_error("\"ambient\" needs \"builtin\" or \"factors\"");
}

Subgroup read_subgroup(const Ambient& a, const Json& input, const char* key) {
  if (!input.contains(key)) parse_error(std::string("missing \"") + key + "\"");
  const std::vector<Index> gens = parse_elements(*a.group, input.at(key));
  return Subgroup::generated(a.group, gens);
}

Subgroup read_optional(const Ambient& a, const Json& input, const char* key, Subgroup fallback) {
  return input.contains(key) ? read_subgroup(a, input, key) : std::move(fallback);
}

std::uint64_t read_prime(const Json& input, const char* key, std::uint64_t fallback) {
  if (!input.contains(key)) return fallback;
  const std::uint64_t p = small_uint(input.at(key), key);
  if (!is_prime(p)) parse_error(std::string("\"") + key + "\" must be prime");
  return p;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Pronormal:
      return 0;
    case Verdict::NotPronormal:
      return 1;
    default:
      return 2;
  }
}

void put_decision(Json& r, const Decision& d) {
  const Json j = to_json(d);
  for (const auto& [k, v] : j.items()) r[k] = v;
}

Json subgroup_json(const Subgroup& H) {
  Json o = Json::object();
  o["order"] = H.order();
  Json gens = Json::array();
  for (const Elem& g : H.generator_elems()) gens.push_back(to_json(g));
  o["generators"] = std::move(gens);
  return o;
}

class Stopwatch {
 public:
  explicit Stopwatch(Json* sink) : sink_(sink), start_(Clock::now()) {}
  void lap(const char* name) {
    const auto now = Clock::now();
    (*sink_)[name] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  Json* sink_;
  Clock::time_point start_;
};

Json factor_diagnostics(const WreathProduct& W, const Subgroup& H) {
  Json out = Json::array();
  for (std::size_t i = 0; i < W.factor_count(); ++i) {
    const std::uint32_t n = W.spec().factors[i].n;
    std::vector<Perm> gens{Perm::identity(n)};
    for (Index h : H.generators()) gens.push_back(W.bar(i, h));
    Json f = Json::object();
    f["factor"] = i;
    f["bar_order"] = W.bar_image_order(i, H);
    const bool transitive = is_transitive(gens);
    f["transitive"] = transitive;
    f["primitive"] = transitive && is_primitive(gens);
    f["contains_transposition"] = contains_transposition(gens);
    out.push_back(std::move(f));
  }
  return out;
}

const WreathProduct& require_wreath(const Ambient& a, const std::string& command) {
  if (!a.wreath)
    throw Error(Errc::InvalidArgument,
                command + " needs a Z_p wr Sym_n product ambient (\"factors\" or a z*_wr_* builtin)");
  return *a.wreath;
}

Report run_command(const std::string& command, const Json& input, const JobOptions& opt,
                   Json& timings) {
  Report rep;
  Json& r = rep.json;
  Stopwatch clock(&timings);

  if (command == "classify") {
    if (!input.contains("factors") || !input.at("factors").is_array())
      parse_error("classify needs \"factors\": [{\"n\": n, \"q\": q}, ...]");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    Json details = Json::array();
    for (const Json& f : input.at("factors")) {
      std::uint64_t n = 0, q = 0;
      if (f.is_object() && f.contains("n") && f.contains("q")) {
        n = small_uint(f.at("n"), "n");
        q = small_uint(f.at("q"), "q");
      } else if (f.is_array() && f.size() == 2) {
        n = small_uint(f[0], "n");
        q = small_uint(f[1], "q");
      } else {
        parse_error("each factor is {\"n\": n, \"q\": q} or [n, q]");
      }
      if (n == 0) parse_error("n must be positive");
      factors.emplace_back(n, q);
      Json d = Json::object();
      d["n"] = n;
      d["q"] = q;
      d["q_mod_8"] = q % 8;
      d["special_form"] = special_form(n);
      details.push_back(std::move(d));
    }
    const bool value = symplectic_product_odd_index_pronormal(factors);
    clock.lap("compute_ms");
    r["value"] = value;
    r["result"] = Json::object({{"factors", details}});
    rep.exit_code = value ? 0 : 1;
    return rep;
  }

  const Ambient a = resolve_ambient(input, opt.budget, command == "example1" ? "sp2_3_wr_sym3" : nullptr);
  clock.lap("ambient_ms");
  r["ambient"] = Json::object({{"name", a.name}, {"order", a.group->order()}});
  const Subgroup whole = Subgroup::whole(a.group);

  if (command == "enumerate") {
    const Subgroup K = read_optional(a, input, "K", whole);
    const std::uint64_t p = read_prime(input, "p", 2);
    const std::size_t limit = input.contains("limit") ? small_uint(input.at("limit"), "limit") : 4096;
    const Subgroup S = sylow_p(K, p);
    const std::vector<Subgroup> overs = overgroups_of(S, K, limit);
    clock.lap("compute_ms");
    Json list = Json::array();
    for (const Subgroup& H : overs) {
      Json o = subgroup_json(H);
      o["index"] = K.order() / H.order();
      list.push_back(std::move(o));
    }
    r["result"] = Json::object({{"sylow", subgroup_json(S)}, {"count", overs.size()}, {"overgroups", list}});
    rep.exit_code = 0;
    return rep;
  }

  const Subgroup H = read_subgroup(a, input, "subgroup");

  if (command == "decide" || command == "crosscheck") {
    const WreathProduct& W = require_wreath(a, command);
    const Subgroup K = read_optional(a, input, "K", whole);
    const Decision d = decide_wreath_product(W, K, H);
    clock.lap("criterion_ms");
    put_decision(r, d);
    Json result = Json::object();
    result["H"] = subgroup_json(H);
    result["K_order"] = K.order();
    result["diagnostics"] = factor_diagnostics(W, H);
    rep.exit_code = exit_for(d.verdict);
    if (command == "crosscheck") {
      if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "H is not a subgroup of K");
      const Decision o = pronormal_by_definition(H, K);
      clock.lap("oracle_ms");
      result["oracle"] = to_json(o);
      const bool applicable = d.verdict != Verdict::NotApplicable;
      const bool agree = applicable && d.verdict == o.verdict;
      result["agree"] = applicable ? Json(agree) : Json(nullptr);
      rep.exit_code = !applicable ? 2 : agree ? 0 : 1;
    }
    r["result"] = std::move(result);
    return rep;
  }

  if (command == "oracle") {
    const Subgroup K = read_optional(a, input, "K", whole);
    if (!H.is_subgroup_of(K)) throw Error(Errc::InvalidArgument, "H is not a subgroup of K");
    const Decision d = pronormal_by_definition(H, K);
    clock.lap("oracle_ms");
    put_decision(r, d);
    r["result"] = Json::object({{"H", subgroup_json(H)}, {"K_order", K.order()}});
    rep.exit_code = exit_for(d.verdict);
    return rep;
  }

  if (command == "reduce") {
    const Subgroup K = read_optional(a, input, "K", whole);
    Subgroup A;
    if (input.contains("A")) A = read_subgroup(a, input, "A");
    else if (a.generic) A = a.generic->base_subgroup();
    else if (a.wreath) A = a.wreath->base();
    else parse_error("reduce needs \"A\" for this ambient");
    const std::uint64_t p = read_prime(input, "p", 2);
    const ReducedInstance ri = sylow_section_reduce(K, A, H, p);
    clock.lap("reduce_ms");
    const Decision d = pronormal_by_definition(ri.H_star, ri.K_star);
    clock.lap("oracle_ms");
    put_decision(r, d);
    for (const Reason& note : ri.notes)
      r["reasons"].push_back(Json::object({{"criterion", note.criterion}, {"detail", note.detail}}));
    Json result = Json::object();
    result["S_order"] = ri.S.order();
    result["T_order"] = ri.T.order();
    result["Y_order"] = ri.Y.order();
    result["Z_order"] = ri.Z.order();
    result["H_star"] = subgroup_json(ri.H_star);
    result["N_Y_T_order"] = ri.N_Y_T.order();
    result["K_star"] = subgroup_json(ri.K_star);
    result["a_condition_verified"] = ri.a_condition_verified;
    result["strict"] = ri.strict;
    result["z_normal"] = ri.z_normal;
    if (input.value("verify", false)) {
      const Decision full = pronormal_by_definition(H, K);
      clock.lap("verify_ms");
      result["unreduced"] = to_json(full);
      result["agree"] = full.verdict == d.verdict;
    }
    r["result"] = std::move(result);
    rep.exit_code = exit_for(d.verdict);
    return rep;
  }

  if (command == "example1") {
    if (!a.generic || a.generic->base()->order() != 24)
      throw Error(Errc::InvalidArgument, "example1 runs on Sp2(3) wr Sym_n (builtin sp2_3_wr_sym3)");
    const CoreQuotient E = o2_epimorphism(a.generic);
    clock.lap("quotient_ms");
    const Decision d = symplectic_wreath_pipeline(E, H);
    clock.lap("pipeline_ms");
    put_decision(r, d);
    Json result = Json::object();
    result["H"] = subgroup_json(H);
    result["core_order"] = E.core.order();
    result["quotient_order"] = E.quotient.group->order();
    if (input.value("verify", false)) {
      const Decision full = pronormal_by_definition(H, whole);
      clock.lap("verify_ms");
      result["oracle"] = to_json(full);
      result["agree"] = full.verdict == d.verdict;
    }
    r["result"] = std::move(result);
    rep.exit_code = exit_for(d.verdict);
    return rep;
  }

  throw Error(Errc::InvalidArgument, "unknown command \"" + command + "\"");
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : builtins()) names.push_back(name);
  return names;
}

Report dispatch(const std::string& command, const Json& input, const JobOptions& options) {
  Report rep;
  Json timings = Json::object();
  try {
    rep = run_command(command, input, options, timings);
  } catch (const Error& e) {
    rep.exit_code = 2;
    rep.json = Json::object();
    rep.json["error"] = Json::object({{"code", std::string(errc_name(e.code()))}, {"message", e.what()}});
  } catch (const nlohmann::json::exception& e) {
    rep.exit_code = 2;
    rep.json = Json::object();
    rep.json["error"] = Json::object({{"code", std::string(errc_name(Errc::ParseError))}, {"message", e.what()}});
  }
  Json out = Json::object();
  out["command"] = command;
  out["input"] = input;
  for (auto& [k, v] : rep.json.items()) out[k] = v;
  if (options.timings) out["timings"] = timings;
  out["exit_code"] = rep.exit_code;
  rep.json = std::move(out);
  return rep;
}

std::string render_text(const Report& report) {
  const Json& j = report.json;
  std::ostringstream os;
  os << "command: " << j.value("command", std::string()) << '\n';
  if (j.contains("ambient"))
    os << "ambient: " << j["ambient"]["name"].get<std::string>() << " (order "
       << j["ambient"]["order"].get<std::uint64_t>() << ")\n";
  if (j.contains("error"))
    os << "error: " << j["error"]["code"].get<std::string>() << ": "
       << j["error"]["message"].get<std::string>() << '\n';
  if (j.contains("verdict")) os << "verdict: " << j["verdict"].get<std::string>() << '\n';
  if (j.contains("value")) os << "value: " << (j["value"].get<bool>() ? "true" : "false") << '\n';
  if (j.contains("reasons"))
    for (const Json& reason : j["reasons"]) {
      os << "  " << reason["criterion"].get<std::string>();
      if (reason.contains("factor")) os << " [factor " << reason["factor"].get<std::size_t>() << "]";
      os << ": " << reason["detail"].get<std::string>() << '\n';
    }
  if (j.contains("witnesses"))
    for (const Json& w : j["witnesses"]) os << "  witness: " << w.dump() << '\n';
  if (j.contains("result"))
    for (const auto& [k, v] : j["result"].items()) {
      if (k == "overgroups") {
        for (const Json& o : v)
          os << "  overgroup order " << o["order"].get<std::uint64_t>() << " index "
             << o["index"].get<std::uint64_t>() << '\n';
        continue;
      }
      os << k << ": " << v.dump() << '\n';
    }
  if (j.contains("timings"))
    for (const auto& [k, v] : j["timings"].items()) os << k << ": " << v.dump() << '\n';
  os << "exit: " << report.exit_code << '\n';
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Pronormality decisions for subgroups of small finite groups", "prn"};
  std::string command, input_path, json_path;
  JobOptions opt;
  bool quiet = false;
  app.add_option("command", command, "decide | oracle | reduce | enumerate | classify | crosscheck | example1")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands), std::end(kCommands))));
  app.add_option("input", input_path, "JSON job file (standard input when omitted or '-')");
  app.add_option("--budget", opt.budget, "element cap for every group closure")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "write the JSON report to PATH ('-' for standard output)");
  app.add_flag("--quiet", quiet, "print nothing on standard output");
  app.add_flag("--timings", opt.timings, "include wall-clock timings in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  Json input;
  try {
    if (input_path.empty() || input_path == "-") {
      input = Json::parse(in);
    } else {
      std::ifstream f(input_path);
      if (!f) {
        err << "error: cannot open " << input_path << '\n';
        return 2;
      }
      input = Json::parse(f);
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return 2;
  }

  const Report rep = dispatch(command, input, opt);
  if (rep.json.contains("error"))
    err << "error: " << rep.json["error"]["code"].get<std::string>() << ": "
        << rep.json["error"]["message"].get<std::string>() << '\n';
  const std::string json_text = rep.json.dump(2) + "\n";
  if (json_path == "-") {
    if (!quiet) out << json_text;
  } else {
    if (!quiet) out << render_text(rep);
    if (!json_path.empty()) {
      std::ofstream f(json_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << json_path << '\n';
        return 2;
      }
      f << json_text;
    }
  }
  return rep.exit_code;
}

}  // namespace prn

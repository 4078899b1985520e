#include "cli.hpp"

#include "tarski/axioms.hpp"
#include "tarski/builtins.hpp"
#include "tarski/derivation_text.hpp"
#include "tarski/finite_model.hpp"
#include "tarski/parser.hpp"
#include "tarski/plane_models.hpp"
#include "tarski/report.hpp"
#include "tarski/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tarski::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string format = "text";
  bool timing = false;

  std::string name;
  bool all = false;
  bool print = false;
  std::string file;

  std::string model = "standard";
  std::string system;
  std::vector<std::string> axioms;
  std::vector<std::string> except;
  std::size_t samples = 10000;
  std::uint64_t seed = 7;
  long coord_bound = 10;
  long denominator_bound = 8;
  std::string epsilon = "1/1000000000";
  std::size_t instance_samples = 200;
  std::string formula;
  std::vector<std::string> assign;
  std::string finite;

  std::string require;
  std::string forbid;
  int max_size = 2;
  std::string mode = "exhaustive";
  std::uint64_t search_samples = 1000000;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  bool expect_none = false;
  bool show_models = false;
};

std::vector<std::string> split_csv(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational(const std::string& text) {
  try {
    if (text.find_first_of(".eE") == std::string::npos) {
      Rational r(text);
      r.canonicalize();
      return r;
    }
    std::size_t used = 0;
    double d = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return Rational(d);
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "'");
  }
}

PlaneAssignment parse_assignments(const std::vector<std::string>& items) {
  PlaneAssignment s;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected var=(x,y), got '" + item + "'");
    std::string var = item.substr(0, eq);
    Term t = parse_term(item.substr(eq + 1));
    if (!t.is_point()) throw UsageError("expected a point constant in '" + item + "'");
    s[var] = t.point_value();
  }
  return s;
}

class Commands {
 public:
  explicit Commands(const Options& o) : o_(o) {}

  int records() const { return o_.format == "records"; }
  RecordOptions rec() const { return RecordOptions{o_.timing}; }

  int axioms_list(std::ostream& out) {
    for (const auto& ax : axiom_catalog()) {
      if (records())
        out << nlohmann::ordered_json{{"kind", "axiom"}, {"name", ascii_name(ax.name)}}.dump() << "\n";
      else
        out << ascii_name(ax.name) << "\n";
    }
    for (const auto& s : system_names()) {
      const AxiomSystem& sys = get_system(s);
      std::vector<std::string> members;
      for (const auto& m : sys.member_names()) members.push_back(ascii_name(m));
      if (records()) {
        out << nlohmann::ordered_json{{"kind", "system"}, {"name", ascii_name(s)}, {"members", members}}.dump()
            << "\n";
      } else {
        out << ascii_name(s) << ":";
        for (const auto& m : members) out << " " << m;
        out << "\n";
      }
    }
    return 0;
  }

  void show_one(std::ostream& out, const std::string& name, const std::string& text) {
    if (records())
      out << nlohmann::ordered_json{{"kind", "axiom"}, {"name", name}, {"formula", text}}.dump() << "\n";
    else
      out << name << " := " << text << "\n";
  }

  int axioms_show(std::ostream& out) {
    auto systems = system_names();
    std::string canon = canonical_name(o_.name);
    if (std::find(systems.begin(), systems.end(), canon) != systems.end()) {
      const AxiomSystem& sys = get_system(canon);
      for (const auto& ax : sys.first_order) show_one(out, ascii_name(ax.name), render_formula(ax.sentence));
      for (const auto& s : sys.schemas) show_one(out, s, "(schema)");
      return 0;
    }
    const NamedFormula& ax = get_axiom(o_.name);
    show_one(out, ascii_name(ax.name), render_formula(ax.sentence));
    return 0;
  }

  int prove_check(std::ostream& out) {
    std::string text = read_file(o_.file);
    NamedCheck c;
    try {
      Derivation d = parse_derivation(text);
      c = {d.name, check_derivation(d)};
    } catch (const ParseError& e) {
      c = {o_.file, CheckResult{Verdict::Rejected, static_cast<int>(e.line()), e.what()}};
    }
    out << (records() ? to_record(c) : to_text(c)) << "\n";
    return c.second.accepted() ? 0 : 1;
  }

  int prove_builtin(std::ostream& out) {
    if (o_.all == !o_.name.empty()) throw UsageError("give a builtin name or --all");
    std::vector<std::string> names = o_.all ? builtin_names() : std::vector<std::string>{o_.name};
    std::vector<Derivation> ds;
    for (const auto& n : names) ds.push_back(builtin_derivation(n));
    if (o_.print) {
      for (const auto& n : names) out << builtin_script(n) << "\n";
      return 0;
    }
    int code = 0;
    for (const auto& c : check_derivations(ds)) {
      out << (records() ? to_record(c) : to_text(c)) << "\n";
      if (!c.second.accepted()) code = 1;
    }
    return code;
  }

  BuiltinModel model() const {
    BuiltinModel m = parse_model_id(o_.model);
    m.epsilon = parse_rational(o_.epsilon);
    if (m.epsilon < 0) throw UsageError("epsilon must be nonnegative");
    return m;
  }

  SampleConfig sample_config() const { return {o_.seed, o_.samples, o_.coord_bound, o_.denominator_bound}; }

  void emit(std::ostream& out, const ModelCheckReport& r) {
    out << (records() ? to_record(r, rec()) : to_text(r, rec())) << "\n";
  }

  int model_check(std::ostream& out) {
    BuiltinModel m = model();
    std::vector<std::string> axioms = split_csv(o_.axioms);
    if (o_.system.empty() == axioms.empty()) throw UsageError("give exactly one of --system or --axiom");
    std::vector<ModelCheckReport> reports;
    if (!o_.system.empty()) {
      reports = check_system_sampled(m, get_system(o_.system), split_csv(o_.except), sample_config(),
                                     o_.instance_samples);
    } else {
      for (const auto& a : axioms) {
        if (canonical_name(a) == kContinuitySchema) {
          ModelCheckReport r;
          r.axiom = std::string(kContinuitySchema);
          r.model = model_id(m);
          r.reason = "schema";
          reports.push_back(r);
          continue;
        }
        reports.push_back(eval_axiom_sampled(m, get_axiom(a), sample_config()));
      }
    }
    int code = 0;
    for (const auto& r : reports) {
      emit(out, r);
      bool schema_marker = r.status == CheckStatus::Skipped && r.reason == "schema";
      if (!r.passed() && !schema_marker) code = 1;
    }
    return code;
  }

  int model_refute(std::ostream& out) {
    std::vector<std::string> axioms = split_csv(o_.axioms);
    if (axioms.empty()) throw UsageError("--axiom is required");
    BuiltinModel m = model();
    int code = 0;
    for (const auto& a : axioms) {
      ModelCheckReport r = refute_with_instance(m, a);
      emit(out, r);
      if (r.status != CheckStatus::Refuted) code = 1;
    }
    return code;
  }

  Formula eval_target() const {
    std::vector<std::string> axioms = split_csv(o_.axioms);
    if (o_.formula.empty() == axioms.empty() || axioms.size() > 1)
      throw UsageError("give exactly one of --formula or a single --axiom");
    return o_.formula.empty() ? get_axiom(axioms.front()).sentence : parse_formula(o_.formula);
  }

  int model_eval(std::ostream& out) {
    Formula f = eval_target();
    if (!o_.finite.empty()) {
      FiniteModel fm = parse_finite_model(read_file(o_.finite));
      FiniteEval r = eval_formula_exhaustive(fm, f);
      if (records()) {
        nlohmann::ordered_json j{{"kind", "eval"}, {"model", "finite"}, {"value", r.value ? "true" : "false"}};
        if (r.falsifying) j["falsifying"] = *r.falsifying;
        out << j.dump() << "\n";
      } else {
        out << (r.value ? "true" : "false");
        if (r.falsifying)
          for (const auto& [v, x] : *r.falsifying) out << " " << v << "=" << x;
        out << "\n";
      }
      return r.value ? 0 : 1;
    }
    BuiltinModel m = model();
    Outcome o = evaluate(m, f, parse_assignments(o_.assign));
    std::string value = o.value == Truth::True ? "true" : o.value == Truth::False ? "false" : "unknown";
    if (records()) {
      nlohmann::ordered_json j{{"kind", "eval"}, {"model", model_id(m)}, {"value", value}};
      if (o.approximate) j["approximate"] = true;
      if (o.probed) j["probed"] = true;
      out << j.dump() << "\n";
    } else {
      out << value;
      if (o.approximate) out << " [approximate]";
      if (o.probed) out << " [probed]";
      out << "\n";
    }
    return o.value == Truth::True ? 0 : 1;
  }

  std::optional<NamedFormula> forbidden() const {
    if (o_.forbid.empty()) return std::nullopt;
    try {
      return get_axiom(o_.forbid);
    } catch (const Error&) {
      if (o_.forbid.find(' ') == std::string::npos) throw;
      return NamedFormula{"forbidden", parse_formula(o_.forbid)};
    }
  }

  int search_finite(std::ostream& out) {
    if (o_.require.empty()) throw UsageError("--require is required");
    SearchBudget b;
    if (o_.mode == "exhaustive")
      b.mode = SearchMode::Exhaustive;
    else if (o_.mode == "sampled")
      b.mode = SearchMode::Sampled;
    else
      throw UsageError("unknown mode '" + o_.mode + "' (available: exhaustive, sampled)");
    b.samples = o_.search_samples;
    b.seed = o_.seed;
    b.max_pairs = o_.budget;
    b.workers = o_.workers;
    SearchResult r = search_finite_models(resolve_formulas(o_.require), forbidden(), o_.max_size, b);
    if (o_.show_models) {
      for (const auto& fm : r.models) out << (records() ? model_record(fm) + "\n" : serialize(fm) + "\n");
    }
    out << (records() ? to_record(r.stats, rec()) : to_text(r.stats, rec())) << "\n";
    if (o_.expect_none && (r.stats.models_found > 0 || r.stats.budget_exceeded)) return 1;
    return 0;
  }

 private:
  const Options& o_;
};

}  // namespace

CommandOutcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Workbench for Tarski-style plane geometry axioms", "tarski"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app.add_flag("--timing", o.timing, "Include elapsed times in output");

  auto* axioms = app.add_subcommand("axioms", "Inspect the axiom catalog");
  axioms->require_subcommand(1);
  auto* ax_list = axioms->add_subcommand("list", "List axioms and systems");
  auto* ax_show = axioms->add_subcommand("show", "Print an axiom or a system");
  ax_show->add_option("name", o.name, "Axiom or system name")->required();
  auto* ax_export = axioms->add_subcommand("export", "Print the catalog as name := formula lines");

  auto* prove = app.add_subcommand("prove", "Check derivations");
  prove->require_subcommand(1);
  auto* pr_check = prove->add_subcommand("check", "Check a derivation file");
  pr_check->add_option("file", o.file, "Derivation file")->required();
  auto* pr_builtin = prove->add_subcommand("builtin", "Check builtin derivations");
  pr_builtin->add_option("name", o.name, "Builtin name");
  pr_builtin->add_flag("--all", o.all, "Check every builtin");
  pr_builtin->add_flag("--print", o.print, "Print the script instead of checking it");

  auto* model = app.add_subcommand("model", "Evaluate axioms in builtin or finite models");
  model->require_subcommand(1);
  auto add_model_opts = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "standard or M");
    sub->add_option("--axiom", o.axioms, "Axiom name(s), comma separated");
    sub->add_option("--epsilon", o.epsilon, "Tolerance for approximate witnesses");
  };
  auto* m_check = model->add_subcommand("check", "Sampled check of axioms in a builtin model");
  add_model_opts(m_check);
  m_check->add_option("--system", o.system, "Axiom system");
  m_check->add_option("--except", o.except, "Members to leave out, comma separated");
  m_check->add_option("--samples", o.samples, "Samples per axiom");
  m_check->add_option("--seed", o.seed, "Random seed");
  m_check->add_option("--coord-bound", o.coord_bound, "Bound on |numerator| / denominator");
  m_check->add_option("--denominator-bound", o.denominator_bound, "Largest denominator")
      ->check(CLI::PositiveNumber);
  m_check->add_option("--instance-samples", o.instance_samples, "Samples per continuity instance");
  auto* m_refute = model->add_subcommand("refute", "Print a known counterexample");
  add_model_opts(m_refute);
  auto* m_eval = model->add_subcommand("eval", "Evaluate a formula");
  add_model_opts(m_eval);
  m_eval->add_option("--formula", o.formula, "Formula text");
  m_eval->add_option("--assign", o.assign, "Free variable values, var=(x,y)");
  m_eval->add_option("--finite", o.finite, "Finite model file");

  auto* search = app.add_subcommand("search", "Search for finite models");
  search->require_subcommand(1);
  auto* s_finite = search->add_subcommand("finite", "Enumerate finite models");
  s_finite->add_option("--require", o.require, "Systems or axioms that must hold, comma separated");
  s_finite->add_option("--forbid", o.forbid, "Axiom name or formula that must fail");
  s_finite->add_option("--max-size", o.max_size, "Largest domain size")->check(CLI::PositiveNumber);
  s_finite->add_option("--mode", o.mode, "exhaustive or sampled");
  s_finite->add_option("--samples", o.search_samples, "Table pairs drawn in sampled mode");
  s_finite->add_option("--seed", o.seed, "Random seed");
  s_finite->add_option("--budget", o.budget, "Cap on table pairs checked (0: none)");
  s_finite->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  s_finite->add_flag("--expect-none", o.expect_none, "Exit 1 if any model is found");
  s_finite->add_flag("--show-models", o.show_models, "Print every model found");

  CommandOutcome result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? 0 : 2;
    if (code != 0 && err.str().find("Usage") == std::string::npos) err << app.help();
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  Commands cmd(o);
  try {
    if (ax_list->parsed())
      result.exit_code = cmd.axioms_list(out);
    else if (ax_show->parsed())
      result.exit_code = cmd.axioms_show(out);
    else if (ax_export->parsed())
      out << export_catalog();
    else if (pr_check->parsed())
      result.exit_code = cmd.prove_check(out);
    else if (pr_builtin->parsed())
      result.exit_code = cmd.prove_builtin(out);
    else if (m_check->parsed())
      result.exit_code = cmd.model_check(out);
    else if (m_refute->parsed())
      result.exit_code = cmd.model_refute(out);
    else if (m_eval->parsed())
      result.exit_code = cmd.model_eval(out);
    else if (s_finite->parsed())
      result.exit_code = cmd.search_finite(out);
  } catch (const ParseError& e) {
    err << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace tarski::cli

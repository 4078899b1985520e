#include "tarski/plane_models.hpp"

#include "tarski/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

namespace tarski {

namespace g = geometry;

std::string model_id(const BuiltinModel& m) { return m.kind == ModelKind::DegenerateM ? "M" : "standard"; }

BuiltinModel parse_model_id(std::string_view id) {
  if (id == "M" || id == "m") return BuiltinModel::degenerate();
  if (id == "standard" || id == "plane") return BuiltinModel::standard();
  throw Error("unknown model '" + std::string(id) + "' (available: standard, M)");
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::VerifiedExhaustive: return "verified_exhaustive";
    case CheckStatus::VerifiedOnSamples: return "verified_on_samples";
    case CheckStatus::Refuted: return "refuted";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

namespace {

using Env = std::vector<std::pair<std::string, Point2>>;

const Point2& value_of(const Term& t, const Env& env) {
  if (t.is_point()) return t.point_value();
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == t.name()) return it->second;
  throw Error("unassigned variable '" + t.name() + "'");
}

Env to_env(const PlaneAssignment& s) { return Env(s.begin(), s.end()); }

PlaneAssignment to_map(const Env& env) {
  PlaneAssignment out;
  for (const auto& [k, v] : env) out[k] = v;
  return out;
}

bool exact_atom(const BuiltinModel& m, const Atom& a, const Env& env) {
  const auto& t = a.args;
  switch (a.relation) {
    case Relation::Between: return g::between(value_of(t[0], env), value_of(t[1], env), value_of(t[2], env));
    case Relation::Equal: return value_of(t[0], env) == value_of(t[1], env);
    case Relation::Congruent:
      if (m.kind == ModelKind::DegenerateM) return value_of(t[0], env) == value_of(t[1], env);
      return g::squared_distance(value_of(t[0], env), value_of(t[1], env)) ==
             g::squared_distance(value_of(t[2], env), value_of(t[3], env));
  }
  return false;
}

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool near_equal(const Point2& p, const Point2& q, const Rational& eps) {
  return g::squared_distance(p, q) <= eps * eps;
}

bool tolerant_atom(const BuiltinModel& m, const Atom& a, const Env& env) {
  const auto& t = a.args;
  const Rational& eps = m.epsilon;
  switch (a.relation) {
    case Relation::Equal: return near_equal(value_of(t[0], env), value_of(t[1], env), eps);
    case Relation::Between: {
      const Point2& pa = value_of(t[0], env);
      const Point2& pb = value_of(t[1], env);
      const Point2& pc = value_of(t[2], env);
      Rational len = g::squared_distance(pa, pc);
      if (len <= eps * eps) return near_equal(pa, pb, eps);
      Rational scale = len + 1;
      if (abs_q(g::cross(pa, pc, pb)) > eps * scale) return false;
      Rational along = g::dot(pa, pb, pc);
      return along >= -eps * scale && along <= len + eps * scale;
    }
    case Relation::Congruent: {
      if (m.kind == ModelKind::DegenerateM) return near_equal(value_of(t[0], env), value_of(t[1], env), eps);
      Rational d1 = g::squared_distance(value_of(t[0], env), value_of(t[1], env));
      Rational d2 = g::squared_distance(value_of(t[2], env), value_of(t[3], env));
      return abs_q(Rational(d1 - d2)) <= eps * (d1 + d2 + 1);
    }
  }
  return false;
}

Outcome flip(Outcome o) {
  if (o.value == Truth::True)
    o.value = Truth::False;
  else if (o.value == Truth::False)
    o.value = Truth::True;
  return o;
}

Outcome merge_flags(Truth v, const Outcome& x, const Outcome& y) {
  return {v, x.approximate || y.approximate, x.probed || y.probed};
}

// Kleene conjunction; a certain False on either side decides.
Outcome conj(const Outcome& l, const Outcome& r) {
  if (l.exact_false()) return l;
  if (r.exact_false()) return r;
  if (l.value == Truth::False) return l;
  if (r.value == Truth::False) return r;
  if (l.value == Truth::True && r.value == Truth::True) return merge_flags(Truth::True, l, r);
  return {Truth::Unknown, false, false};
}

Outcome disj(const Outcome& l, const Outcome& r) { return flip(conj(flip(l), flip(r))); }

struct Block {
  std::vector<std::string> vars;
  const Formula* body;
};

Block peel(const Formula& f) {
  Block b{{}, &f};
  Formula::Kind k = f.kind();
  while (b.body->kind() == k) {
    b.vars.push_back(b.body->bound_var());
    b.body = &b.body->body();
  }
  return b;
}

class Evaluator {
 public:
  Evaluator(const BuiltinModel& m, std::string axiom) : m_(m), axiom_(std::move(axiom)) {
    use_hints_ = !axiom_.empty() && has_witness_provider(m_, axiom_);
  }

  Outcome run(const Formula& f, Env& env) {
    hints_pending_ = use_hints_;
    return eval(f, env, false);
  }

 private:
  Outcome eval(const Formula& f, Env& env, bool tolerant) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        if (exact_atom(m_, f.atom_value(), env)) return {Truth::True, false, false};
        if (tolerant && tolerant_atom(m_, f.atom_value(), env)) return {Truth::True, true, false};
        return {Truth::False, false, false};
      }
      case Formula::Kind::Not: return flip(eval(f.body(), env, tolerant));
      case Formula::Kind::And: {
        Outcome l = eval(f.lhs(), env, tolerant);
        if (l.exact_false()) return l;
        return conj(l, eval(f.rhs(), env, tolerant));
      }
      case Formula::Kind::Or: {
        Outcome l = eval(f.lhs(), env, tolerant);
        if (l.exact_true()) return l;
        return disj(l, eval(f.rhs(), env, tolerant));
      }
      case Formula::Kind::Implies: {
        Outcome l = flip(eval(f.lhs(), env, tolerant));
        if (l.exact_true()) return l;
        return disj(l, eval(f.rhs(), env, tolerant));
      }
      case Formula::Kind::Exists: return exists(f, env, tolerant);
      case Formula::Kind::Forall: return forall(f, env, tolerant);
    }
    return {};
  }

  // Tries each tuple; first certain truth wins, otherwise the first
  // uncertain truth is kept.
  template <class Tuples>
  std::optional<Outcome> try_tuples(const Block& b, const Tuples& tuples, Env& env, bool tolerant) {
    std::optional<Outcome> best;
    for (const auto& tuple : tuples) {
      if (tuple.size() != b.vars.size()) continue;
      for (std::size_t i = 0; i < tuple.size(); ++i) env.emplace_back(b.vars[i], tuple[i]);
      Outcome o = eval(*b.body, env, tolerant);
      env.resize(env.size() - tuple.size());
      if (o.value != Truth::True) continue;
      if (o.certain()) return o;
      if (!best) best = o;
    }
    return best;
  }

  std::vector<std::vector<Point2>> product(const std::vector<Point2>& pool, std::size_t k) {
    std::vector<std::vector<Point2>> out{{}};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::vector<Point2>> next;
      next.reserve(out.size() * pool.size());
      for (const auto& prefix : out)
        for (const Point2& p : pool) {
          next.push_back(prefix);
          next.back().push_back(p);
        }
      out = std::move(next);
    }
    return out;
  }

  Outcome exists(const Formula& f, Env& env, bool tolerant) {
    Block b = peel(f);
    if (hints_pending_) {
      hints_pending_ = false;
      WitnessHints h = skolem_witness(m_, axiom_, to_map(env));
      if (auto o = try_tuples(b, h.tuples, env, tolerant || h.approximate)) return *o;
    }
    std::vector<Point2> pool = probe_pool(env, *b.body, b.vars.size() >= 3 ? 10 : 64);
    if (auto o = try_tuples(b, product(pool, b.vars.size()), env, tolerant)) return *o;
    return {Truth::Unknown, false, false};
  }

  Outcome forall(const Formula& f, Env& env, bool tolerant) {
    Block b = peel(f);
    std::vector<Point2> pool = probe_pool(env, *b.body, b.vars.size() >= 3 ? 10 : 64);
    bool unknown = false;
    Outcome agg{Truth::True, false, true};
    for (const auto& tuple : product(pool, b.vars.size())) {
      for (std::size_t i = 0; i < tuple.size(); ++i) env.emplace_back(b.vars[i], tuple[i]);
      Outcome o = eval(*b.body, env, tolerant);
      env.resize(env.size() - tuple.size());
      if (o.exact_false()) return o;
      if (o.value == Truth::True) {
        agg.approximate = agg.approximate || o.approximate;
      } else {
        unknown = true;
      }
    }
    if (unknown) return {Truth::Unknown, false, false};
    return agg;
  }

  static void constants(const Formula& f, std::vector<Point2>& out) {
    if (f.is_atom()) {
      for (const Term& t : f.atom_value().args)
        if (t.is_point()) out.push_back(t.point_value());
    } else if (f.is_quantifier() || f.kind() == Formula::Kind::Not) {
      constants(f.body(), out);
    } else {
      constants(f.lhs(), out);
      constants(f.rhs(), out);
    }
  }

  // Points of the current environment, constants of the body, a few fixed
  // points, midpoints and doublings of environment pairs.
  std::vector<Point2> probe_pool(const Env& env, const Formula& body, std::size_t limit) {
    std::vector<Point2> base;
    std::set<Point2> seen;
    auto add = [&](std::vector<Point2>& out, const Point2& p) {
      if (out.size() < limit && seen.insert(p).second) out.push_back(p);
    };
    std::vector<Point2> named;
    constants(body, named);
    for (const Point2& p : named) add(base, p);
    for (const auto& [name, p] : env) {
      (void)name;
      if (base.size() >= 6) break;
      add(base, p);
    }
    std::vector<Point2> pool = base;
    for (auto [x, y] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) add(pool, Point2{Rational(x), Rational(y)});
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) add(pool, g::affine(base[i], base[j], Rational(1, 2)));
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j)
        if (i != j) add(pool, g::affine(base[i], base[j], Rational(2)));
    return pool;
  }

  const BuiltinModel& m_;
  std::string axiom_;
  bool use_hints_ = false;
  bool hints_pending_ = false;
};

const Point2& need(const PlaneAssignment& s, const char* name) {
  auto it = s.find(name);
  if (it == s.end()) throw Error(std::string("witness provider needs variable '") + name + "'");
  return it->second;
}

Point2 pt(long x, long y) { return Point2{Rational(x), Rational(y)}; }

WitnessHints sc_witness(const BuiltinModel& m, const PlaneAssignment& s) {
  const Point2& a = need(s, "a");
  const Point2& b = need(s, "b");
  const Point2& c = need(s, "c");
  const Point2& q = need(s, "q");
  if (m.kind == ModelKind::DegenerateM || b == c) return {{{a}}, false};
  Rational target = g::squared_distance(b, c);
  if (q == a) {
    auto r = g::exact_sqrt(target);
    Rational len = r ? *r : g::approximate_sqrt(target);
    return {{{Point2{Rational(a.x + len), a.y}}}, !r};
  }
  Rational ratio2 = target / g::squared_distance(q, a);
  auto r = g::exact_sqrt(ratio2);
  Rational ratio = r ? *r : g::approximate_sqrt(ratio2);
  return {{{g::affine(a, q, Rational(-ratio))}}, !r};
}

WitnessHints pa_witness(const PlaneAssignment& s) {
  const Point2& a = need(s, "a");
  const Point2& b = need(s, "b");
  const Point2& p = need(s, "p");
  const Point2& q = need(s, "q");
  WitnessHints h;
  if (auto x = g::line_intersection(p, b, q, a)) h.tuples.push_back({*x});
  for (const Point2* e : {&p, &q, &a, &b}) h.tuples.push_back({*e});
  return h;
}

WitnessHints eu_witness(const PlaneAssignment& s) {
  const Point2& a = need(s, "a");
  const Point2& b = need(s, "b");
  const Point2& c = need(s, "c");
  const Point2& d = need(s, "d");
  const Point2& t = need(s, "t");
  if (a == d) return {};
  Rational k = g::dot(a, t, d) / g::squared_distance(a, d);
  return {{{g::affine(a, b, k), g::affine(a, c, k)}}, false};
}

}  // namespace

bool eval_atom(const BuiltinModel& m, const Atom& a, const PlaneAssignment& s) { return exact_atom(m, a, to_env(s)); }

Outcome evaluate(const BuiltinModel& m, const Formula& f, const PlaneAssignment& s) {
  Env env = to_env(s);
  Evaluator ev(m, "");
  return ev.run(f, env);
}

bool has_witness_provider(const BuiltinModel&, std::string_view axiom) {
  std::string n = canonical_name(axiom);
  return n == "SC" || n == "Pa" || n == "Eu" || n == "Lo₂";
}

WitnessHints skolem_witness(const BuiltinModel& m, std::string_view axiom, const PlaneAssignment& s) {
  std::string n = canonical_name(axiom);
  if (n == "SC") return sc_witness(m, s);
  if (n == "Pa") return pa_witness(s);
  if (n == "Eu") return eu_witness(s);
  if (n == "Lo₂") return {{{pt(0, 0), pt(1, 0), pt(0, 1)}}, false};
  throw Error("no witness provider registered for " + ascii_name(n) + " in model " + model_id(m));
}

std::pair<std::vector<std::string>, Formula> universal_prefix(const Formula& f) {
  std::vector<std::string> vars;
  const Formula* cur = &f;
  while (cur->kind() == Formula::Kind::Forall) {
    vars.push_back(cur->bound_var());
    cur = &cur->body();
  }
  return {vars, *cur};
}

bool verify_refutation(const BuiltinModel& m, const NamedFormula& ax, const ModelCheckReport& r) {
  if (r.status != CheckStatus::Refuted) return false;
  auto [vars, matrix] = universal_prefix(ax.sentence);
  PlaneAssignment s(r.counterexample.begin(), r.counterexample.end());
  for (const auto& v : vars)
    if (!s.count(v)) return false;
  Env env = to_env(s);
  Evaluator ev(m, ax.name);
  return ev.run(matrix, env).exact_false();
}

std::vector<PlaneAssignment> forced_samples(const BuiltinModel& m, std::string_view axiom) {
  if (m.kind != ModelKind::DegenerateM) return {};
  std::string n = canonical_name(axiom);
  if (n == "TE")
    return {{{"a", pt(0, 0)}, {"b", pt(0, 0)}, {"p", pt(0, 0)}, {"q", pt(0, 1)}, {"r", pt(0, 0)}, {"s", pt(0, 1)}}};
  if (n == "RE") return {{{"a", pt(0, 0)}, {"b", pt(0, 1)}}};
  return {};
}

namespace {

class Sampler {
 public:
  explicit Sampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Env draw(const std::vector<std::string>& vars) {
    Env env;
    for (const auto& v : vars) {
      int mode = static_cast<int>(pick(0, 3));
      if (mode == 0 && !env.empty()) {
        env.emplace_back(v, env[pick(0, static_cast<long>(env.size()) - 1)].second);
      } else if (mode == 1 && env.size() >= 2) {
        const Point2& p = env[pick(0, static_cast<long>(env.size()) - 1)].second;
        const Point2& q = env[pick(0, static_cast<long>(env.size()) - 1)].second;
        env.emplace_back(v, g::affine(p, q, Rational(pick(1, 3), 4)));
      } else {
        env.emplace_back(v, Point2{coordinate(), coordinate()});
      }
    }
    return env;
  }

 private:
  long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational coordinate() {
    long q = pick(1, cfg_.denominator_bound);
    long p = pick(-cfg_.coord_bound * q, cfg_.coord_bound * q);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ModelCheckReport eval_axiom_sampled(const BuiltinModel& m, const NamedFormula& ax, const SampleConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ModelCheckReport rep;
  rep.axiom = ax.name;
  rep.model = model_id(m);
  rep.seed = cfg.seed;
  if (ax.name == kContinuitySchema) {
    rep.status = CheckStatus::Skipped;
    rep.reason = "schema";
    return rep;
  }
  if (cfg.coord_bound < 0 || cfg.denominator_bound < 1) throw Error("invalid sample bounds");

  auto [vars, matrix] = universal_prefix(ax.sentence);
  Evaluator ev(m, canonical_name(ax.name));
  Sampler sampler(cfg);
  std::vector<PlaneAssignment> forced = forced_samples(m, ax.name);
  std::size_t inconclusive = 0;
  bool approximate = false;

  for (std::size_t i = 0; i < cfg.count; ++i) {
    Env env;
    if (i < forced.size())
      env = to_env(forced[i]);
    else
      env = sampler.draw(vars);
    Outcome o = ev.run(matrix, env);
    if (o.exact_false()) {
      rep.status = CheckStatus::Refuted;
      rep.samples = i + 1;
      PlaneAssignment s = to_map(env);
      for (const auto& v : vars) rep.counterexample.emplace_back(v, s.at(v));
      rep.elapsed_ms = ms_since(t0);
      return rep;
    }
    if (o.value == Truth::True)
      approximate = approximate || o.approximate;
    else
      ++inconclusive;
  }
  rep.samples = cfg.count;
  rep.approximate = approximate;
  if (inconclusive > 0) {
    rep.status = CheckStatus::Skipped;
    rep.reason = std::to_string(inconclusive) + " of " + std::to_string(cfg.count) +
                 " samples inconclusive (no witness found)";
  } else {
    rep.status = CheckStatus::VerifiedOnSamples;
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

ModelCheckReport refute_with_instance(const BuiltinModel& m, std::string_view axiom) {
  std::string n = canonical_name(axiom);
  if (m.kind != ModelKind::DegenerateM || (n != "TE" && n != "RE"))
    throw Error("no known counterexample for " + ascii_name(n) + " in model " + model_id(m) +
                " (available: TE and RE in M)");
  auto t0 = std::chrono::steady_clock::now();
  const NamedFormula& ax = get_axiom(n);
  std::vector<std::string> vars = universal_prefix(ax.sentence).first;
  PlaneAssignment s = forced_samples(m, n).front();
  ModelCheckReport rep;
  rep.axiom = ax.name;
  rep.model = model_id(m);
  rep.status = CheckStatus::Refuted;
  rep.samples = 1;
  for (const auto& v : vars) rep.counterexample.emplace_back(v, s.at(v));
  if (!verify_refutation(m, ax, rep)) throw Error("stored counterexample for " + ascii_name(n) + " did not re-verify");
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

std::vector<ModelCheckReport> check_system_sampled(const BuiltinModel& m, const AxiomSystem& sys,
                                                   const std::vector<std::string>& except, const SampleConfig& cfg,
                                                   std::size_t instance_samples) {
  std::set<std::string> skip;
  for (const auto& e : except) skip.insert(canonical_name(e));
  std::vector<ModelCheckReport> out;
  for (const auto& ax : sys.first_order) {
    if (skip.count(ax.name)) continue;
    out.push_back(eval_axiom_sampled(m, ax, cfg));
  }
  for (const auto& schema : sys.schemas) {
    if (skip.count(schema)) continue;
    ModelCheckReport marker;
    marker.axiom = schema;
    marker.model = model_id(m);
    marker.status = CheckStatus::Skipped;
    marker.reason = "schema";
    out.push_back(marker);
    if (schema != kContinuitySchema) continue;
    SampleConfig inst = cfg;
    inst.count = std::min(cfg.count, instance_samples);
    for (const auto& ci : continuity_suite()) out.push_back(eval_axiom_sampled(m, ci, inst));
  }
  return out;
}

}  // namespace tarski

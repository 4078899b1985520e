#include "tarski/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tarski {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Term Term::var(std::string name) {
  if (!is_valid_variable_name(name)) throw Error("invalid variable name '" + name + "'");
  return Term(std::move(name));
}

Term Term::point(Point2 p) {
  p.x.canonicalize();
  p.y.canonicalize();
  return Term(std::move(p));
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'')) return false;
  }
  return name != "forall" && name != "exists";
}

Atom Atom::make(Relation r, std::vector<Term> args) {
  if (args.size() != arity(r)) {
    throw Error("arity error: relation expects " + std::to_string(arity(r)) + " terms, got " +
                std::to_string(args.size()));
  }
  return Atom{r, std::move(args)};
}

Atom Atom::between(Term a, Term b, Term c) {
  return Atom{Relation::Between, {std::move(a), std::move(b), std::move(c)}};
}

Atom Atom::congruent(Term a, Term b, Term c, Term d) {
  return Atom{Relation::Congruent, {std::move(a), std::move(b), std::move(c), std::move(d)}};
}

Atom Atom::equal(Term a, Term b) { return Atom{Relation::Equal, {std::move(a), std::move(b)}}; }

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;
  std::string var;
  std::optional<Formula> left;
  std::optional<Formula> right;
};

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(a), {}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, std::move(f), {}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::forall(std::string var, Formula body) {
  if (!is_valid_variable_name(var)) throw Error("invalid variable name '" + var + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, std::move(var), std::move(body), {}}));
}

Formula Formula::exists(std::string var, Formula body) {
  if (!is_valid_variable_name(var)) throw Error("invalid variable name '" + var + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, std::move(var), std::move(body), {}}));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) throw Error("conjunction_of: empty list");
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = conjunction(*it, acc);
  return acc;
}

Formula Formula::forall_of(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, body);
  return body;
}

Formula Formula::exists_of(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, body);
  return body;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Atom& Formula::atom_value() const { return *node_->atom; }
const Formula& Formula::body() const { return *node_->left; }
const Formula& Formula::lhs() const { return *node_->left; }
const Formula& Formula::rhs() const { return *node_->right; }
const std::string& Formula::bound_var() const { return node_->var; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom: return a.atom_value() == b.atom_value();
    case Formula::Kind::Not: return a.body() == b.body();
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return a.bound_var() == b.bound_var() && a.body() == b.body();
  }
  return false;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.atom_value().args) {
        if (t.is_variable() && std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
          out.insert(t.name());
        }
      }
      return;
    case Formula::Kind::Not: collect_free(f.body(), bound, out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.bound_var());
      collect_free(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const Term& t : f.atom_value().args) {
        if (t.is_variable()) out.insert(t.name());
      }
      return;
    case Formula::Kind::Not: collect_all(f.body(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_all(f.lhs(), out);
      collect_all(f.rhs(), out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out.insert(f.bound_var());
      collect_all(f.body(), out);
      return;
  }
}

Formula rebuild_binary(const Formula& f, Formula lhs, Formula rhs) {
  switch (f.kind()) {
    case Formula::Kind::And: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case Formula::Kind::Or: return Formula::disjunction(std::move(lhs), std::move(rhs));
    default: return Formula::implication(std::move(lhs), std::move(rhs));
  }
}

Formula rebuild_quantifier(const Formula& f, std::string var, Formula body) {
  return f.kind() == Formula::Kind::Forall ? Formula::forall(std::move(var), std::move(body))
                                           : Formula::exists(std::move(var), std::move(body));
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (std::size_t k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (!avoid.contains(candidate)) return candidate;
  }
}

Formula substitute(const Formula& f, const std::string& var, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      Atom a = f.atom_value();
      bool changed = false;
      for (Term& arg : a.args) {
        if (arg.is_variable() && arg.name() == var) {
          arg = t;
          changed = true;
        }
      }
      return changed ? Formula::atom(std::move(a)) : f;
    }
    case Formula::Kind::Not: return Formula::negation(substitute(f.body(), var, t));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return rebuild_binary(f, substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const std::string& bound = f.bound_var();
      if (bound == var) return f;
      if (!free_variables(f.body()).contains(var)) return f;
      if (t.is_variable() && t.name() == bound) {
        std::set<std::string> avoid = all_variables(f.body());
        avoid.insert(var);
        avoid.insert(t.name());
        std::string renamed = fresh_name(bound, avoid);
        Formula body = substitute(f.body(), bound, Term::var(renamed));
        return rebuild_quantifier(f, renamed, substitute(body, var, t));
      }
      return rebuild_quantifier(f, bound, substitute(f.body(), var, t));
    }
  }
  return f;
}

namespace {

// Binder stacks hold names innermost-last; a variable resolves to its
// innermost binder depth, or to nullopt when free.
std::optional<std::size_t> binder_depth(const std::vector<std::string>& stack, const std::string& name) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == name) return i;
  }
  return std::nullopt;
}

bool alpha_terms(const Term& s, const Term& t, const std::vector<std::string>& ls,
                 const std::vector<std::string>& rs) {
  if (s.is_point() || t.is_point()) return s == t;
  auto dl = binder_depth(ls, s.name());
  auto dr = binder_depth(rs, t.name());
  if (dl.has_value() != dr.has_value()) return false;
  if (dl) return *dl == *dr;
  return s.name() == t.name();
}

bool alpha_rec(const Formula& f, const Formula& g, std::vector<std::string>& ls,
               std::vector<std::string>& rs) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom_value();
      const Atom& b = g.atom_value();
      if (a.relation != b.relation) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!alpha_terms(a.args[i], b.args[i], ls, rs)) return false;
      }
      return true;
    }
    case Formula::Kind::Not: return alpha_rec(f.body(), g.body(), ls, rs);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha_rec(f.lhs(), g.lhs(), ls, rs) && alpha_rec(f.rhs(), g.rhs(), ls, rs);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      ls.push_back(f.bound_var());
      rs.push_back(g.bound_var());
      bool ok = alpha_rec(f.body(), g.body(), ls, rs);
      ls.pop_back();
      rs.pop_back();
      return ok;
    }
  }
  return false;
}

struct OccurrenceRewriter {
  const Term& target;
  const Term& replacement;
  const std::vector<std::size_t>& positions;
  std::size_t seen = 0;
  bool captured = false;

  bool selected() const { return std::find(positions.begin(), positions.end(), seen) != positions.end(); }

  Formula run(const Formula& f, std::vector<std::string>& bound) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        Atom a = f.atom_value();
        for (Term& arg : a.args) {
          if (!(arg == target)) continue;
          if (arg.is_variable() && binder_depth(bound, arg.name())) continue;
          ++seen;
          if (!selected()) continue;
          if (replacement.is_variable() && binder_depth(bound, replacement.name())) captured = true;
          arg = replacement;
        }
        return Formula::atom(std::move(a));
      }
      case Formula::Kind::Not: return Formula::negation(run(f.body(), bound));
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies: {
        Formula l = run(f.lhs(), bound);
        Formula r = run(f.rhs(), bound);
        return rebuild_binary(f, std::move(l), std::move(r));
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bound.push_back(f.bound_var());
        Formula b = run(f.body(), bound);
        bound.pop_back();
        return rebuild_quantifier(f, f.bound_var(), std::move(b));
      }
    }
    return f;
  }
};

}  // namespace

bool alpha_equal(const Formula& f, const Formula& g) {
  std::vector<std::string> ls, rs;
  return alpha_rec(f, g, ls, rs);
}

namespace {

bool diff_rec(const Formula& f, const Formula& g, std::string& path, std::vector<AtomDifference>& out) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      if (!(f.atom_value() == g.atom_value())) out.push_back({path, f.atom_value(), g.atom_value()});
      return true;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (f.bound_var() != g.bound_var()) return false;
      [[fallthrough]];
    case Formula::Kind::Not: {
      path.push_back('b');
      bool ok = diff_rec(f.body(), g.body(), path, out);
      path.pop_back();
      return ok;
    }
    default: {
      path.push_back('l');
      bool ok = diff_rec(f.lhs(), g.lhs(), path, out);
      path.back() = 'r';
      ok = ok && diff_rec(f.rhs(), g.rhs(), path, out);
      path.pop_back();
      return ok;
    }
  }
}

}  // namespace

std::optional<std::vector<AtomDifference>> diff_atoms(const Formula& f, const Formula& g) {
  std::vector<AtomDifference> out;
  std::string path;
  if (!diff_rec(f, g, path, out)) return std::nullopt;
  return out;
}

std::size_t count_free_occurrences(const Formula& f, const Term& t) {
  std::vector<std::size_t> none;
  OccurrenceRewriter rw{t, t, none};
  std::vector<std::string> bound;
  rw.run(f, bound);
  return rw.seen;
}

std::optional<Formula> replace_occurrences(const Formula& f, const Term& t, const Term& replacement,
                                           const std::vector<std::size_t>& positions) {
  std::size_t total = count_free_occurrences(f, t);
  for (std::size_t p : positions) {
    if (p == 0 || p > total) return std::nullopt;
  }
  OccurrenceRewriter rw{t, replacement, positions};
  std::vector<std::string> bound;
  Formula out = rw.run(f, bound);
  if (rw.captured) return std::nullopt;
  return out;
}

// Rendering ----------------------------------------------------------------

std::string render(const Term& t) { return t.is_variable() ? t.name() : to_string(t.point_value()); }

std::string render(const Atom& a) {
  std::string out;
  switch (a.relation) {
    case Relation::Between: out = "B"; break;
    case Relation::Congruent: out = "D"; break;
    case Relation::Equal: out = "="; break;
  }
  for (const Term& t : a.args) out += " " + render(t);
  return out;
}

namespace {

std::string render_rec(const Formula& f);

std::string wrap(const Formula& f, bool parens) {
  std::string s = render_rec(f);
  return parens ? "(" + s + ")" : s;
}

std::string render_rec(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return render(f.atom_value());
    case K::Not: return "~" + wrap(f.body(), f.body().is_binary() || f.body().is_quantifier());
    case K::And: {
      const Formula& l = f.lhs();
      const Formula& r = f.rhs();
      return wrap(l, l.is_binary() || l.is_quantifier()) + " & " +
             wrap(r, r.kind() == K::Or || r.kind() == K::Implies || r.is_quantifier());
    }
    case K::Or: {
      const Formula& l = f.lhs();
      const Formula& r = f.rhs();
      return wrap(l, l.kind() == K::Or || l.kind() == K::Implies || l.is_quantifier()) + " | " +
             wrap(r, r.kind() == K::Implies || r.is_quantifier());
    }
    case K::Implies: {
      const Formula& l = f.lhs();
      const Formula& r = f.rhs();
      return wrap(l, l.kind() == K::Implies || l.is_quantifier()) + " -> " + wrap(r, r.is_quantifier());
    }
    case K::Forall:
    case K::Exists: {
      std::string out = f.kind() == K::Forall ? "forall" : "exists";
      const Formula* cur = &f;
      while (cur->kind() == f.kind()) {
        out += " " + cur->bound_var();
        cur = &cur->body();
      }
      return out + ". " + wrap(*cur, cur->is_binary());
    }
  }
  return {};
}

}  // namespace

std::string render_formula(const Formula& f) { return render_rec(f); }

}  // namespace tarski

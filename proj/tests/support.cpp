#include "support.hpp"

#include "tarski/builtins.hpp"
#include "tarski/derivation_text.hpp"

namespace tarski::testing {

Derivation delete_step(const Derivation& d, std::size_t i) {
  Derivation out = d;
  out.steps.erase(out.steps.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<std::pair<std::string, Derivation>> deletion_mutants() {
  std::vector<std::pair<std::string, Derivation>> out;
  for (const auto& name : builtin_names()) {
    Derivation d = builtin_derivation(name);
    for (std::size_t i = 0; i < d.steps.size(); ++i)
      out.emplace_back(name + " -step " + std::to_string(i + 1), delete_step(d, i));
  }
  return out;
}

Derivation lemma_re_with_fs() {
  std::string text(builtin_script("lemma_re"));
  auto swap = [&](const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    if (pos == std::string::npos) throw Error("lemma_re script changed: missing '" + from + "'");
    text.replace(pos, from.size(), to);
  };
  swap("premises: A'", "premises: TE, IE, SC, FS, IB, Pa");
  swap("-> D d c c' d') ; premise FS'", "-> D c d c' d') ; premise FS");
  return parse_derivation(text);
}

Derivation goal_mismatch_one_liner() {
  return parse_derivation(
      "name: goal_mismatch\n"
      "premises: RE\n"
      "goal: B a a a\n"
      "1. forall a b. D a b b a ; premise RE\n");
}

namespace {

const std::vector<std::string> kPool{"a", "b", "c", "x", "y", "x1", "p'"};

int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Term random_term(std::mt19937& rng, bool constants) {
  if (constants && uniform(rng, 0, 5) == 0) {
    Rational x(uniform(rng, -9, 9), uniform(rng, 1, 4));
    Rational y(uniform(rng, -9, 9), uniform(rng, 1, 4));
    x.canonicalize();
    y.canonicalize();
    return Term::point({x, y});
  }
  return Term::var(kPool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kPool.size()) - 1))]);
}

Formula random_formula(std::mt19937& rng, int depth, bool constants) {
  int pick = depth <= 0 ? 0 : uniform(rng, 0, 7);
  auto var = [&] { return kPool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kPool.size()) - 1))]; };
  switch (pick) {
    case 0:
    case 1: {
      int r = uniform(rng, 0, 2);
      if (r == 0) return Formula::atom(Atom::between(random_term(rng, constants), random_term(rng, constants),
                                                     random_term(rng, constants)));
      if (r == 1)
        return Formula::atom(Atom::congruent(random_term(rng, constants), random_term(rng, constants),
                                             random_term(rng, constants), random_term(rng, constants)));
      return Formula::atom(Atom::equal(random_term(rng, constants), random_term(rng, constants)));
    }
    case 2: return Formula::negation(random_formula(rng, depth - 1, constants));
    case 3:
      return Formula::conjunction(random_formula(rng, depth - 1, constants), random_formula(rng, depth - 1, constants));
    case 4:
      return Formula::disjunction(random_formula(rng, depth - 1, constants), random_formula(rng, depth - 1, constants));
    case 5:
      return Formula::implication(random_formula(rng, depth - 1, constants), random_formula(rng, depth - 1, constants));
    case 6: return Formula::forall(var(), random_formula(rng, depth - 1, constants));
    default: return Formula::exists(var(), random_formula(rng, depth - 1, constants));
  }
}

bool naive_eval(const FiniteModel& m, const Formula& f, std::map<std::string, int>& s) {
  auto val = [&](const Term& t) { return s.at(t.name()); };
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const Atom& a = f.atom_value();
      if (a.relation == Relation::Between) return m.between(val(a.args[0]), val(a.args[1]), val(a.args[2]));
      if (a.relation == Relation::Congruent)
        return m.congruent(val(a.args[0]), val(a.args[1]), val(a.args[2]), val(a.args[3]));
      return val(a.args[0]) == val(a.args[1]);
    }
    case Formula::Kind::Not: return !naive_eval(m, f.body(), s);
    case Formula::Kind::And: return naive_eval(m, f.lhs(), s) && naive_eval(m, f.rhs(), s);
    case Formula::Kind::Or: return naive_eval(m, f.lhs(), s) || naive_eval(m, f.rhs(), s);
    case Formula::Kind::Implies: return !naive_eval(m, f.lhs(), s) || naive_eval(m, f.rhs(), s);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool universal = f.kind() == Formula::Kind::Forall;
      const std::string& v = f.bound_var();
      auto saved = s.find(v) == s.end() ? std::optional<int>() : std::optional<int>(s[v]);
      bool result = universal;
      for (int x = 0; x < m.size; ++x) {
        s[v] = x;
        bool r = naive_eval(m, f.body(), s);
        if (universal && !r) {
          result = false;
          break;
        }
        if (!universal && r) {
          result = true;
          break;
        }
      }
      if (saved)
        s[v] = *saved;
      else
        s.erase(v);
      return result;
    }
  }
  return false;
}

FiniteModel random_finite_model(std::mt19937& rng, int n) {
  FiniteModel m = FiniteModel::empty(n);
  for (auto& b : m.b_table) b = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  for (auto& d : m.d_table) d = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  return m;
}

}  // namespace tarski::testing

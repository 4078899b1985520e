#pragma once

// First-order language of points with betweenness (B), congruence (D) and
// equality. Formulas are immutable trees with shared structure; every
// operation here is a pure function.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tarski {

using Rational = mpq_class;

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::string to_string(const Rational& r);
std::string to_string(const Point2& p);

/// A variable name or a point constant. Constants only show up in
/// model-checking contexts (counterexamples, hand-written probes).
class Term {
 public:
  static Term var(std::string name);
  static Term point(Point2 p);

  bool is_variable() const { return std::holds_alternative<std::string>(value_); }
  bool is_point() const { return std::holds_alternative<Point2>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }
  const Point2& point_value() const { return std::get<Point2>(value_); }

  friend bool operator==(const Term& a, const Term& b) { return a.value_ == b.value_; }

 private:
  explicit Term(std::variant<std::string, Point2> v) : value_(std::move(v)) {}
  std::variant<std::string, Point2> value_;
};

/// True when `name` matches [a-z][a-zA-Z0-9_']* and is not a keyword.
bool is_valid_variable_name(std::string_view name);

enum class Relation { Between, Congruent, Equal };

constexpr std::size_t arity(Relation r) {
  switch (r) {
    case Relation::Between: return 3;
    case Relation::Congruent: return 4;
    case Relation::Equal: return 2;
  }
  return 0;
}

struct Atom {
  Relation relation;
  std::vector<Term> args;

  static Atom between(Term a, Term b, Term c);
  static Atom congruent(Term a, Term b, Term c, Term d);
  static Atom equal(Term a, Term b);
  /// Throws Error when args.size() does not match the relation's arity.
  static Atom make(Relation r, std::vector<Term> args);

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.relation == b.relation && a.args == b.args;
  }
};

class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, Forall, Exists };

  static Formula atom(Atom a);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  /// Right-nested conjunction of a non-empty list.
  static Formula conjunction_of(const std::vector<Formula>& parts);
  static Formula forall_of(const std::vector<std::string>& vars, Formula body);
  static Formula exists_of(const std::vector<std::string>& vars, Formula body);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }
  bool is_binary() const {
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
  }

  const Atom& atom_value() const;
  /// Operand of Not, body of a quantifier.
  const Formula& body() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const std::string& bound_var() const;

  /// Structural (not alpha) equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const Formula& f);
bool is_sentence(const Formula& f);
/// Every variable name appearing in f, bound or free.
std::set<std::string> all_variables(const Formula& f);

/// Least `stem<k>` (k = 1, 2, ...) not in `avoid`, where stem is `base`
/// with any trailing digits removed.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Capture-avoiding replacement of the free occurrences of `var` by `t`.
Formula substitute(const Formula& f, const std::string& var, const Term& t);

bool alpha_equal(const Formula& f, const Formula& g);

/// Free occurrences of `t` in left-to-right order, replaced at the given
/// 1-based positions by `replacement`. Returns nullopt if a position is out
/// of range or if a replaced occurrence would be captured by a binder.
std::optional<Formula> replace_occurrences(const Formula& f, const Term& t, const Term& replacement,
                                           const std::vector<std::size_t>& positions);
std::size_t count_free_occurrences(const Formula& f, const Term& t);

struct AtomDifference {
  /// Steps from the root: 'b' body, 'l' left operand, 'r' right operand.
  std::string path;
  Atom left;
  Atom right;
};

/// Atoms at matching positions that differ, in left-to-right order.
/// nullopt when the trees differ anywhere other than inside atoms.
std::optional<std::vector<AtomDifference>> diff_atoms(const Formula& f, const Formula& g);

std::string render(const Term& t);
std::string render(const Atom& a);
std::string render_formula(const Formula& f);

}  // namespace tarski

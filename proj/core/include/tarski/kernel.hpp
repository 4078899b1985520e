#pragma once

// Natural-deduction checker for classical first-order logic with equality.
//
// A derivation is a flat list of steps. Numbered lines carry a formula and
// the rule that justifies it; `assume` and `obtain` lines open a frame that
// is closed by a FrameEnd step. Rules that discharge a frame (imp-intro,
// not-intro, cases, exists-elim) cite the frame by the number of its
// opening line and must appear directly after it in the enclosing scope.

#include "tarski/axioms.hpp"
#include "tarski/formula.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tarski {

enum class RuleKind {
  Premise,
  Assume,
  Obtain,
  ForallElim,
  ForallIntro,
  ImpliesElim,
  ImpliesIntro,
  AndIntro,
  AndElimLeft,
  AndElimRight,
  OrIntroLeft,
  OrIntroRight,
  CaseSplit,
  ExcludedMiddle,
  ExistsIntro,
  ExistsElim,
  EqRefl,
  EqSym,
  EqRewrite,
  NotIntro,
  ContradictionElim,
};

/// Keyword used in derivation files ("forall-elim", "cases", ...).
std::string_view rule_keyword(RuleKind k);

struct Rule {
  RuleKind kind;
  /// Cited line or frame numbers, in the order the rule documents.
  std::vector<int> refs;
  /// Instantiation / introduction terms (forall-elim, exists-intro, eq-refl).
  std::vector<Term> terms;
  /// Generalized variables (forall-intro) or the witness name (obtain).
  std::vector<std::string> vars;
  /// 1-based occurrence positions (eq-rewrite).
  std::vector<std::size_t> positions;
  /// Premise name (premise).
  std::string premise;

  static Rule premise_of(std::string name);
  static Rule assume();
  static Rule obtain(std::string witness, int from);
  static Rule forall_elim(int line, std::vector<Term> terms);
  static Rule forall_intro(int line, std::vector<std::string> vars);
  static Rule implies_elim(int implication, int antecedent);
  static Rule implies_intro(int frame);
  static Rule and_intro(int lhs, int rhs);
  static Rule and_elim_left(int line);
  static Rule and_elim_right(int line);
  static Rule or_intro_left(int line);
  static Rule or_intro_right(int line);
  static Rule case_split(int disjunction, int left_frame, int right_frame);
  static Rule excluded_middle();
  static Rule exists_intro(int line, Term witness);
  static Rule exists_elim(int frame);
  static Rule eq_refl(Term t);
  static Rule eq_sym(int line);
  static Rule eq_rewrite(int target, int equality, std::vector<std::size_t> positions);
  static Rule not_intro(int frame, int positive, int negative);
  static Rule contradiction_elim(int positive, int negative);

  /// Lines or frames this application cites.
  const std::vector<int>& depends() const { return refs; }
};

struct ProofLine {
  int index;
  /// Empty only for `obtain` lines, whose hypothesis the checker computes.
  std::optional<Formula> formula;
  Rule rule;
};

struct FrameEnd {};

using Step = std::variant<ProofLine, FrameEnd>;

struct Derivation {
  std::string name;
  /// Names as written (system names allowed), kept for printing.
  std::vector<std::string> premise_labels;
  std::vector<NamedFormula> premises;
  Formula goal;
  std::vector<Step> steps;
};

enum class Verdict { Accepted, Rejected };

struct CheckResult {
  Verdict verdict;
  std::optional<int> failing_line;
  std::string reason;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

/// Pure function of `d`. Rejection names the first invalid line.
CheckResult check_derivation(const Derivation& d);

/// Builds a premise list from names; system names expand to their
/// first-order members.
std::vector<NamedFormula> resolve_premises(const std::vector<std::string>& labels);

}  // namespace tarski

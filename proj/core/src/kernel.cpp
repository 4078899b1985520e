#include "tarski/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tarski {

std::string_view rule_keyword(RuleKind k) {
  switch (k) {
    case RuleKind::Premise: return "premise";
    case RuleKind::Assume: return "assume";
    case RuleKind::Obtain: return "obtain";
    case RuleKind::ForallElim: return "forall-elim";
    case RuleKind::ForallIntro: return "forall-intro";
    case RuleKind::ImpliesElim: return "imp-elim";
    case RuleKind::ImpliesIntro: return "imp-intro";
    case RuleKind::AndIntro: return "and-intro";
    case RuleKind::AndElimLeft: return "and-elim-l";
    case RuleKind::AndElimRight: return "and-elim-r";
    case RuleKind::OrIntroLeft: return "or-intro-l";
    case RuleKind::OrIntroRight: return "or-intro-r";
    case RuleKind::CaseSplit: return "cases";
    case RuleKind::ExcludedMiddle: return "lem";
    case RuleKind::ExistsIntro: return "exists-intro";
    case RuleKind::ExistsElim: return "exists-elim";
    case RuleKind::EqRefl: return "eq-refl";
    case RuleKind::EqSym: return "eq-sym";
    case RuleKind::EqRewrite: return "eq-rewrite";
    case RuleKind::NotIntro: return "not-intro";
    case RuleKind::ContradictionElim: return "contra";
  }
  return "?";
}

Rule Rule::premise_of(std::string name) {
  Rule r{RuleKind::Premise, {}, {}, {}, {}, {}};
  r.premise = std::move(name);
  return r;
}
Rule Rule::assume() { return {RuleKind::Assume, {}, {}, {}, {}, {}}; }
Rule Rule::obtain(std::string witness, int from) { return {RuleKind::Obtain, {from}, {}, {std::move(witness)}, {}, {}}; }
Rule Rule::forall_elim(int line, std::vector<Term> terms) {
  return {RuleKind::ForallElim, {line}, std::move(terms), {}, {}, {}};
}
Rule Rule::forall_intro(int line, std::vector<std::string> vars) {
  return {RuleKind::ForallIntro, {line}, {}, std::move(vars), {}, {}};
}
Rule Rule::implies_elim(int implication, int antecedent) {
  return {RuleKind::ImpliesElim, {implication, antecedent}, {}, {}, {}, {}};
}
Rule Rule::implies_intro(int frame) { return {RuleKind::ImpliesIntro, {frame}, {}, {}, {}, {}}; }
Rule Rule::and_intro(int lhs, int rhs) { return {RuleKind::AndIntro, {lhs, rhs}, {}, {}, {}, {}}; }
Rule Rule::and_elim_left(int line) { return {RuleKind::AndElimLeft, {line}, {}, {}, {}, {}}; }
Rule Rule::and_elim_right(int line) { return {RuleKind::AndElimRight, {line}, {}, {}, {}, {}}; }
Rule Rule::or_intro_left(int line) { return {RuleKind::OrIntroLeft, {line}, {}, {}, {}, {}}; }
Rule Rule::or_intro_right(int line) { return {RuleKind::OrIntroRight, {line}, {}, {}, {}, {}}; }
Rule Rule::case_split(int disjunction, int left_frame, int right_frame) {
  return {RuleKind::CaseSplit, {disjunction, left_frame, right_frame}, {}, {}, {}, {}};
}
Rule Rule::excluded_middle() { return {RuleKind::ExcludedMiddle, {}, {}, {}, {}, {}}; }
Rule Rule::exists_intro(int line, Term witness) { return {RuleKind::ExistsIntro, {line}, {std::move(witness)}, {}, {}, {}}; }
Rule Rule::exists_elim(int frame) { return {RuleKind::ExistsElim, {frame}, {}, {}, {}, {}}; }
Rule Rule::eq_refl(Term t) { return {RuleKind::EqRefl, {}, {std::move(t)}, {}, {}, {}}; }
Rule Rule::eq_sym(int line) { return {RuleKind::EqSym, {line}, {}, {}, {}, {}}; }
Rule Rule::eq_rewrite(int target, int equality, std::vector<std::size_t> positions) {
  return {RuleKind::EqRewrite, {target, equality}, {}, {}, std::move(positions), {}};
}
Rule Rule::not_intro(int frame, int positive, int negative) {
  return {RuleKind::NotIntro, {frame, positive, negative}, {}, {}, {}, {}};
}
Rule Rule::contradiction_elim(int positive, int negative) {
  return {RuleKind::ContradictionElim, {positive, negative}, {}, {}, {}, {}};
}

std::vector<NamedFormula> resolve_premises(const std::vector<std::string>& labels) {
  std::string csv;
  for (const auto& l : labels) csv += (csv.empty() ? "" : ",") + l;
  return resolve_formulas(csv);
}

namespace {

constexpr int kTopLevel = -1;

struct Frame {
  int opener;
  RuleKind kind;  // Assume or Obtain
  Formula hypothesis;
  std::string witness;
  int parent;
  bool closed = false;
  std::optional<int> last_line;
};

struct LineInfo {
  Formula formula;
  int frame;
};

class Rejection {
 public:
  Rejection(int line, std::string reason) : line(line), reason(std::move(reason)) {}
  int line;
  std::string reason;
};

class Checker {
 public:
  explicit Checker(const Derivation& d) : d_(d) {
    for (const auto& p : d.premises) {
      for (const auto& v : free_variables(p.sentence)) premise_vars_.insert(v);
    }
    goal_vars_ = free_variables(d.goal);
  }

  CheckResult run() {
    try {
      int last_index = 0;
      std::optional<int> final_line;
      for (const Step& step : d_.steps) {
        if (std::holds_alternative<FrameEnd>(step)) {
          if (open_.empty()) throw Rejection(last_index + 1, "qed-frame with no open frame");
          Frame& f = frames_.at(open_.back());
          f.closed = true;
          if (f.kind == RuleKind::Obtain) retired_.insert(f.witness);
          open_.pop_back();
          final_line.reset();
          continue;
        }
        const ProofLine& line = std::get<ProofLine>(step);
        if (line.index <= last_index) {
          throw Rejection(line.index, "line numbers must be positive and strictly increasing");
        }
        last_index = line.index;
        Formula f = check_line(line);
        for (const auto& v : free_variables(f)) {
          if (retired_.contains(v)) {
            throw Rejection(line.index, "witness '" + v + "' used outside its obtain frame");
          }
        }
        int frame = current();
        if (line.rule.kind == RuleKind::Assume || line.rule.kind == RuleKind::Obtain) {
          frames_.emplace(line.index, Frame{line.index, line.rule.kind, f,
                                            line.rule.kind == RuleKind::Obtain ? line.rule.vars.front() : "",
                                            frame, false, std::nullopt});
          open_.push_back(line.index);
          frame = line.index;
        }
        if (frame != kTopLevel) frames_.at(frame).last_line = line.index;
        lines_.emplace(line.index, LineInfo{f, frame});
        for (const auto& v : free_variables(f)) seen_vars_.insert(v);
        final_line = frame == kTopLevel ? std::optional<int>(line.index) : std::nullopt;
      }
      if (!open_.empty()) throw Rejection(open_.front(), "frame opened here is never closed");
      if (!final_line) {
        throw Rejection(last_index == 0 ? 1 : last_index, "derivation does not end with a top-level line");
      }
      if (!alpha_equal(lines_.at(*final_line).formula, d_.goal)) {
        throw Rejection(*final_line, "final formula " + render_formula(lines_.at(*final_line).formula) +
                                         " does not match goal " + render_formula(d_.goal));
      }
      return {Verdict::Accepted, std::nullopt, "accepted"};
    } catch (const Rejection& r) {
      return {Verdict::Rejected, r.line, r.reason};
    }
  }

 private:
  int current() const { return open_.empty() ? kTopLevel : open_.back(); }

  bool is_open(int frame) const {
    return frame == kTopLevel || std::find(open_.begin(), open_.end(), frame) != open_.end();
  }

  const Formula& visible(int at, int ref) const {
    auto it = lines_.find(ref);
    if (it == lines_.end()) throw Rejection(at, "reference to unknown line " + std::to_string(ref));
    if (!is_open(it->second.frame)) {
      throw Rejection(at, "line " + std::to_string(ref) + " is inside a closed frame");
    }
    return it->second.formula;
  }

  const Frame& closed_child(int at, int ref, RuleKind kind) const {
    auto it = frames_.find(ref);
    if (it == frames_.end()) throw Rejection(at, "reference to unknown frame " + std::to_string(ref));
    const Frame& f = it->second;
    if (!f.closed) throw Rejection(at, "frame " + std::to_string(ref) + " is still open");
    if (f.parent != current()) throw Rejection(at, "frame " + std::to_string(ref) + " is not in the current scope");
    if (f.kind != kind) {
      throw Rejection(at, "frame " + std::to_string(ref) + " must be opened by " + std::string(rule_keyword(kind)));
    }
    return f;
  }

  const Formula& conclusion(const Frame& f) const { return lines_.at(*f.last_line).formula; }

  static void need(bool ok, int at, const std::string& why) {
    if (!ok) throw Rejection(at, why);
  }

  void arity(const ProofLine& l, std::size_t refs) const {
    need(l.rule.refs.size() == refs, l.index,
         std::string(rule_keyword(l.rule.kind)) + " expects " + std::to_string(refs) + " references");
  }

  Formula stated(const ProofLine& l) const {
    need(l.formula.has_value(), l.index, "line has no formula");
    return *l.formula;
  }

  Formula matches(const ProofLine& l, const Formula& derived) const {
    Formula s = stated(l);
    need(alpha_equal(s, derived), l.index,
         "stated formula " + render_formula(s) + " does not match derived " + render_formula(derived));
    return s;
  }

  Formula check_line(const ProofLine& l) {
    const Rule& r = l.rule;
    const int at = l.index;
    using K = Formula::Kind;
    switch (r.kind) {
      case RuleKind::Premise: {
        std::string canon = canonical_name(r.premise);
        auto it = std::find_if(d_.premises.begin(), d_.premises.end(),
                               [&](const NamedFormula& p) { return p.name == canon; });
        need(it != d_.premises.end(), at, "'" + r.premise + "' is not a premise of this derivation");
        return matches(l, it->sentence);
      }
      case RuleKind::Assume: return stated(l);
      case RuleKind::Obtain: {
        arity(l, 1);
        need(r.vars.size() == 1, at, "obtain names exactly one witness");
        const std::string& w = r.vars.front();
        Formula src = visible(at, r.refs[0]);
        need(src.kind() == K::Exists, at, "obtain needs an existential");
        need(is_valid_variable_name(w), at, "invalid witness name '" + w + "'");
        need(!seen_vars_.contains(w) && !retired_.contains(w), at, "witness '" + w + "' is not fresh");
        need(!goal_vars_.contains(w) && !premise_vars_.contains(w), at, "witness '" + w + "' occurs in goal or premises");
        Formula hyp = substitute(src.body(), src.bound_var(), Term::var(w));
        return l.formula ? matches(l, hyp) : hyp;
      }
      case RuleKind::ForallElim: {
        arity(l, 1);
        need(!r.terms.empty(), at, "forall-elim needs at least one term");
        Formula cur = visible(at, r.refs[0]);
        for (const Term& t : r.terms) {
          need(cur.kind() == K::Forall, at, "forall-elim applied to a non-universal formula");
          cur = substitute(cur.body(), cur.bound_var(), t);
        }
        return matches(l, cur);
      }
      case RuleKind::ForallIntro: {
        arity(l, 1);
        need(!r.vars.empty(), at, "forall-intro needs at least one variable");
        Formula body = visible(at, r.refs[0]);
        for (const std::string& v : r.vars) {
          need(is_valid_variable_name(v), at, "invalid variable '" + v + "'");
          need(!premise_vars_.contains(v), at, "'" + v + "' is free in a premise");
          for (int fid : open_) {
            const Frame& f = frames_.at(fid);
            need(f.witness != v, at, "'" + v + "' is the witness of open frame " + std::to_string(fid));
            need(!free_variables(f.hypothesis).contains(v), at,
                 "'" + v + "' is free in the hypothesis of open frame " + std::to_string(fid));
          }
        }
        return matches(l, Formula::forall_of(r.vars, body));
      }
      case RuleKind::ImpliesElim: {
        arity(l, 2);
        Formula imp = visible(at, r.refs[0]);
        Formula ante = visible(at, r.refs[1]);
        need(imp.kind() == K::Implies, at, "imp-elim: first reference is not an implication");
        need(alpha_equal(imp.lhs(), ante), at, "imp-elim: antecedent does not match");
        return matches(l, imp.rhs());
      }
      case RuleKind::ImpliesIntro: {
        arity(l, 1);
        const Frame& f = closed_child(at, r.refs[0], RuleKind::Assume);
        return matches(l, Formula::implication(f.hypothesis, conclusion(f)));
      }
      case RuleKind::AndIntro: {
        arity(l, 2);
        return matches(l, Formula::conjunction(visible(at, r.refs[0]), visible(at, r.refs[1])));
      }
      case RuleKind::AndElimLeft:
      case RuleKind::AndElimRight: {
        arity(l, 1);
        Formula c = visible(at, r.refs[0]);
        need(c.kind() == K::And, at, "and-elim applied to a non-conjunction");
        return matches(l, r.kind == RuleKind::AndElimLeft ? c.lhs() : c.rhs());
      }
      case RuleKind::OrIntroLeft:
      case RuleKind::OrIntroRight: {
        arity(l, 1);
        Formula src = visible(at, r.refs[0]);
        Formula s = stated(l);
        need(s.kind() == K::Or, at, "or-intro must state a disjunction");
        need(alpha_equal(r.kind == RuleKind::OrIntroLeft ? s.lhs() : s.rhs(), src), at,
             "or-intro: cited line is not the introduced disjunct");
        return s;
      }
      case RuleKind::CaseSplit: {
        arity(l, 3);
        Formula disj = visible(at, r.refs[0]);
        need(disj.kind() == K::Or, at, "cases: first reference is not a disjunction");
        need(r.refs[1] != r.refs[2], at, "cases: the two frames must differ");
        const Frame& left = closed_child(at, r.refs[1], RuleKind::Assume);
        const Frame& right = closed_child(at, r.refs[2], RuleKind::Assume);
        need(alpha_equal(left.hypothesis, disj.lhs()), at, "cases: left frame does not assume the left disjunct");
        need(alpha_equal(right.hypothesis, disj.rhs()), at, "cases: right frame does not assume the right disjunct");
        need(alpha_equal(conclusion(left), conclusion(right)), at, "cases: frames reach different conclusions");
        return matches(l, conclusion(left));
      }
      case RuleKind::ExcludedMiddle: {
        Formula s = stated(l);
        need(s.kind() == K::Or && s.rhs().kind() == K::Not && alpha_equal(s.lhs(), s.rhs().body()), at,
             "lem must state a formula of the shape P | ~P");
        return s;
      }
      case RuleKind::ExistsIntro: {
        arity(l, 1);
        need(r.terms.size() == 1, at, "exists-intro needs one witness term");
        Formula src = visible(at, r.refs[0]);
        Formula s = stated(l);
        need(s.kind() == K::Exists, at, "exists-intro must state an existential");
        need(alpha_equal(substitute(s.body(), s.bound_var(), r.terms[0]), src), at,
             "exists-intro: cited line is not an instance of the stated existential");
        return s;
      }
      case RuleKind::ExistsElim: {
        arity(l, 1);
        const Frame& f = closed_child(at, r.refs[0], RuleKind::Obtain);
        const Formula& c = conclusion(f);
        need(!free_variables(c).contains(f.witness), at, "exists-elim: conclusion mentions the witness");
        return matches(l, c);
      }
      case RuleKind::EqRefl: {
        need(r.terms.size() == 1, at, "eq-refl needs one term");
        return matches(l, Formula::atom(Atom::equal(r.terms[0], r.terms[0])));
      }
      case RuleKind::EqSym: {
        arity(l, 1);
        Formula e = visible(at, r.refs[0]);
        need(e.is_atom() && e.atom_value().relation == Relation::Equal, at, "eq-sym applied to a non-equation");
        const auto& args = e.atom_value().args;
        return matches(l, Formula::atom(Atom::equal(args[1], args[0])));
      }
      case RuleKind::EqRewrite: {
        arity(l, 2);
        need(!r.positions.empty(), at, "eq-rewrite needs occurrence positions");
        Formula target = visible(at, r.refs[0]);
        Formula e = visible(at, r.refs[1]);
        need(e.is_atom() && e.atom_value().relation == Relation::Equal, at, "eq-rewrite: second reference is not an equation");
        const auto& args = e.atom_value().args;
        auto rewritten = replace_occurrences(target, args[0], args[1], r.positions);
        need(rewritten.has_value(), at, "eq-rewrite: occurrence position out of range or capture");
        return matches(l, *rewritten);
      }
      case RuleKind::NotIntro: {
        arity(l, 3);
        const Frame& f = closed_child(at, r.refs[0], RuleKind::Assume);
        auto in_frame = [&](int ref) -> const Formula& {
          auto it = lines_.find(ref);
          need(it != lines_.end(), at, "reference to unknown line " + std::to_string(ref));
          need(it->second.frame == f.opener || is_open(it->second.frame), at,
               "line " + std::to_string(ref) + " is not available inside frame " + std::to_string(f.opener));
          return it->second.formula;
        };
        const Formula& pos = in_frame(r.refs[1]);
        const Formula& neg = in_frame(r.refs[2]);
        need(neg.kind() == K::Not && alpha_equal(neg.body(), pos), at, "not-intro: lines are not contradictory");
        return matches(l, Formula::negation(f.hypothesis));
      }
      case RuleKind::ContradictionElim: {
        arity(l, 2);
        Formula pos = visible(at, r.refs[0]);
        Formula neg = visible(at, r.refs[1]);
        need(neg.kind() == K::Not && alpha_equal(neg.body(), pos), at, "contra: lines are not contradictory");
        return stated(l);
      }
    }
    throw Rejection(at, "unknown rule");
  }

  const Derivation& d_;
  std::map<int, LineInfo> lines_;
  std::map<int, Frame> frames_;
  std::vector<int> open_;
  std::set<std::string> seen_vars_;
  std::set<std::string> retired_;
  std::set<std::string> premise_vars_;
  std::set<std::string> goal_vars_;
};

}  // namespace

CheckResult check_derivation(const Derivation& d) { return Checker(d).run(); }

}  // namespace tarski

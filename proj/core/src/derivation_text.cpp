#include "tarski/derivation_text.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace tarski {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

struct LineReader {
  std::size_t line_no;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, 1, msg); }

  int number(const std::string& word) const {
    int v = 0;
    auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || p != word.data() + word.size() || v <= 0) fail("expected a line number, got '" + word + "'");
    return v;
  }

  Formula formula(std::string_view text) const {
    try {
      return parse_formula(text);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column(), e.what());
    }
  }

  Term term(const std::string& word) const {
    try {
      return parse_term(word);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.column(), e.what());
    }
  }

  Rule rule(std::string_view text) const {
    std::vector<std::string> w = split_words(text);
    if (w.empty()) fail("missing rule after ';'");
    const std::string& kw = w[0];
    auto args = [&](std::size_t n) {
      if (w.size() != n + 1) fail("'" + kw + "' expects " + std::to_string(n) + " arguments");
    };
    auto at_least = [&](std::size_t n) {
      if (w.size() < n + 1) fail("'" + kw + "' expects at least " + std::to_string(n) + " arguments");
    };
    if (kw == "premise") {
      args(1);
      return Rule::premise_of(w[1]);
    }
    if (kw == "forall-elim") {
      at_least(2);
      std::vector<Term> terms;
      for (std::size_t i = 2; i < w.size(); ++i) terms.push_back(term(w[i]));
      return Rule::forall_elim(number(w[1]), std::move(terms));
    }
    if (kw == "forall-intro") {
      at_least(2);
      return Rule::forall_intro(number(w[1]), std::vector<std::string>(w.begin() + 2, w.end()));
    }
    if (kw == "imp-elim") {
      args(2);
      return Rule::implies_elim(number(w[1]), number(w[2]));
    }
    if (kw == "imp-intro") {
      args(1);
      return Rule::implies_intro(number(w[1]));
    }
    if (kw == "and-intro") {
      args(2);
      return Rule::and_intro(number(w[1]), number(w[2]));
    }
    if (kw == "and-elim-l") {
      args(1);
      return Rule::and_elim_left(number(w[1]));
    }
    if (kw == "and-elim-r") {
      args(1);
      return Rule::and_elim_right(number(w[1]));
    }
    if (kw == "or-intro-l") {
      args(1);
      return Rule::or_intro_left(number(w[1]));
    }
    if (kw == "or-intro-r") {
      args(1);
      return Rule::or_intro_right(number(w[1]));
    }
    if (kw == "cases") {
      args(3);
      return Rule::case_split(number(w[1]), number(w[2]), number(w[3]));
    }
    if (kw == "lem") {
      args(0);
      return Rule::excluded_middle();
    }
    if (kw == "exists-intro") {
      args(2);
      return Rule::exists_intro(number(w[1]), term(w[2]));
    }
    if (kw == "exists-elim") {
      args(1);
      return Rule::exists_elim(number(w[1]));
    }
    if (kw == "eq-refl") {
      args(1);
      return Rule::eq_refl(term(w[1]));
    }
    if (kw == "eq-sym") {
      args(1);
      return Rule::eq_sym(number(w[1]));
    }
    if (kw == "eq-rewrite") {
      at_least(3);
      std::vector<std::size_t> pos;
      for (std::size_t i = 3; i < w.size(); ++i) pos.push_back(static_cast<std::size_t>(number(w[i])));
      return Rule::eq_rewrite(number(w[1]), number(w[2]), std::move(pos));
    }
    if (kw == "not-intro") {
      args(3);
      return Rule::not_intro(number(w[1]), number(w[2]), number(w[3]));
    }
    if (kw == "contra") {
      args(2);
      return Rule::contradiction_elim(number(w[1]), number(w[2]));
    }
    fail("unknown rule '" + kw + "'");
  }
};

}  // namespace

Derivation parse_derivation(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> premises;
  std::optional<Formula> goal;
  std::vector<Step> steps;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    LineReader rd{line_no};
    if (raw.empty() || raw.front() == '#') continue;

    if (starts_with(raw, "name:")) {
      name = std::string(trim(raw.substr(5)));
      continue;
    }
    if (starts_with(raw, "premises:")) {
      std::vector<std::string> labels;
      std::string_view rest = raw.substr(9);
      std::size_t s = 0;
      while (s <= rest.size()) {
        std::size_t e = rest.find(',', s);
        if (e == std::string_view::npos) e = rest.size();
        std::string_view item = trim(rest.substr(s, e - s));
        if (!item.empty()) labels.emplace_back(item);
        s = e + 1;
      }
      premises = std::move(labels);
      continue;
    }
    if (starts_with(raw, "goal:")) {
      goal = rd.formula(raw.substr(5));
      continue;
    }
    if (raw == "qed-frame") {
      steps.emplace_back(FrameEnd{});
      continue;
    }

    std::size_t dot = raw.find('.');
    if (dot == std::string_view::npos) rd.fail("expected '<n>. <formula> ; <rule>'");
    int index = rd.number(std::string(trim(raw.substr(0, dot))));
    std::string_view body = trim(raw.substr(dot + 1));

    if (starts_with(body, "assume ")) {
      steps.emplace_back(ProofLine{index, rd.formula(body.substr(7)), Rule::assume()});
      continue;
    }
    if (starts_with(body, "obtain ")) {
      auto w = split_words(body);
      if (w.size() != 4 || w[2] != "from") rd.fail("expected 'obtain <var> from <n>'");
      steps.emplace_back(ProofLine{index, std::nullopt, Rule::obtain(w[1], rd.number(w[3]))});
      continue;
    }
    std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) rd.fail("missing ';' between formula and rule");
    steps.emplace_back(ProofLine{index, rd.formula(body.substr(0, semi)), rd.rule(body.substr(semi + 1))});
  }

  if (!name) throw ParseError(line_no, 1, "missing 'name:' header");
  if (!premises) throw ParseError(line_no, 1, "missing 'premises:' header");
  if (!goal) throw ParseError(line_no, 1, "missing 'goal:' header");
  return Derivation{*name, *premises, resolve_premises(*premises), *goal, std::move(steps)};
}

std::string render_derivation(const Derivation& d) {
  std::ostringstream out;
  out << "name: " << d.name << "\n";
  out << "premises: ";
  for (std::size_t i = 0; i < d.premise_labels.size(); ++i) out << (i ? ", " : "") << ascii_name(d.premise_labels[i]);
  out << "\n";
  out << "goal: " << render_formula(d.goal) << "\n";
  for (const Step& step : d.steps) {
    if (std::holds_alternative<FrameEnd>(step)) {
      out << "qed-frame\n";
      continue;
    }
    const ProofLine& l = std::get<ProofLine>(step);
    out << l.index << ". ";
    const Rule& r = l.rule;
    if (r.kind == RuleKind::Assume) {
      out << "assume " << render_formula(*l.formula) << "\n";
      continue;
    }
    if (r.kind == RuleKind::Obtain) {
      out << "obtain " << r.vars.front() << " from " << r.refs.front() << "\n";
      continue;
    }
    out << (l.formula ? render_formula(*l.formula) : std::string("?")) << " ; " << rule_keyword(r.kind);
    if (r.kind == RuleKind::Premise) out << " " << ascii_name(canonical_name(r.premise));
    for (int ref : r.refs) out << " " << ref;
    for (const Term& t : r.terms) out << " " << render(t);
    for (const auto& v : r.vars) out << " " << v;
    for (std::size_t p : r.positions) out << " " << p;
    out << "\n";
  }
  return out.str();
}

}  // namespace tarski

#include "tarski/parser.hpp"

#include <cctype>
#include <vector>

namespace tarski {

namespace {

std::string describe(const std::set<std::string>& expected, const std::string& found) {
  std::string msg = "expected one of {";
  bool first = true;
  for (const auto& e : expected) {
    msg += (first ? "" : ", ") + e;
    first = false;
  }
  return msg + "} but found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
                       const std::string& found)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + describe(expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Rel, Number, LParen, RParen, Comma, Dot, Not, And, Or, Arrow, Eq, Forall, Exists, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (in[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    std::size_t l = line, cl = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), l, cl});
      advance(1);
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '.': single(Tok::Dot); continue;
      case '~': single(Tok::Not); continue;
      case '&': single(Tok::And); continue;
      case '|': single(Tok::Or); continue;
      case '=': single(Tok::Eq); continue;
      default: break;
    }
    if (c == '-' && i + 1 < in.size() && in[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < in.size() && std::isdigit(static_cast<unsigned char>(in[i + 1])))) {
      std::size_t j = i + 1;
      while (j < in.size() && (std::isdigit(static_cast<unsigned char>(in[j])) || in[j] == '/')) ++j;
      out.push_back({Tok::Number, std::string(in.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[j])) || in[j] == '_' || in[j] == '\'')) {
        ++j;
      }
      std::string word(in.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "forall") {
        k = Tok::Forall;
      } else if (word == "exists") {
        k = Tok::Exists;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        if (word != "B" && word != "D") {
          throw ParseError(l, cl, {"B", "D", "="}, "unknown relation symbol '" + word + "'");
        }
        k = Tok::Rel;
      }
      out.push_back({k, word, l, cl});
      advance(j - i);
      continue;
    }
    throw ParseError(l, cl, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() {
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      bool universal = next().kind == Tok::Forall;
      std::vector<std::string> vars;
      if (peek().kind != Tok::Ident) fail({"variable"});
      while (peek().kind == Tok::Ident) vars.push_back(next().text);
      expect(Tok::Dot, {"variable", "'.'"});
      Formula body = formula();
      return universal ? Formula::forall_of(vars, body) : Formula::exists_of(vars, body);
    }
    return implication();
  }

  Term term() {
    if (peek().kind == Tok::Ident) return Term::var(next().text);
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Number) {
      next();
      Rational x = number();
      expect(Tok::Comma, {"','"});
      Rational y = number();
      expect(Tok::RParen, {"')'"});
      return Term::point({x, y});
    }
    fail({"variable", "point constant"});
  }

  void finish() {
    if (peek().kind != Tok::End) fail({"end of input", "'->'", "'|'", "'&'"});
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), found);
  }

  void expect(Tok k, std::set<std::string> expected) {
    if (peek().kind != k) fail(std::move(expected));
    next();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (peek().kind == Tok::Or) {
      next();
      return Formula::disjunction(lhs, disjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = negation();
    if (peek().kind == Tok::And) {
      next();
      return Formula::conjunction(lhs, conjunction());
    }
    return lhs;
  }

  Formula negation() {
    switch (peek().kind) {
      case Tok::Not: next(); return Formula::negation(negation());
      case Tok::LParen: {
        next();
        Formula inner = formula();
        expect(Tok::RParen, {"')'"});
        return inner;
      }
      case Tok::Rel:
      case Tok::Eq: return atom();
      case Tok::Forall:
      case Tok::Exists: {
        const Token& t = peek();
        throw ParseError(t.line, t.column, "quantifier must be parenthesized in this position");
      }
      default: fail({"'~'", "'('", "B", "D", "'='"});
    }
  }

  bool at_term() const {
    return peek().kind == Tok::Ident || (peek().kind == Tok::LParen && peek(1).kind == Tok::Number);
  }

  Formula atom() {
    const Token head = next();
    Relation rel = head.kind == Tok::Eq ? Relation::Equal
                   : head.text == "B"   ? Relation::Between
                                        : Relation::Congruent;
    std::vector<Term> args;
    while (at_term()) args.push_back(term());
    if (args.size() != arity(rel)) {
      throw ArityError(head.line, head.column,
                       "arity error: '" + head.text + "' expects " + std::to_string(arity(rel)) +
                           " terms, got " + std::to_string(args.size()));
    }
    return Formula::atom(Atom{rel, std::move(args)});
  }

  Rational number() {
    if (peek().kind != Tok::Number) fail({"number"});
    const Token t = next();
    try {
      Rational r(t.text, 10);
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw ParseError(t.line, t.column, "malformed rational '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view input) {
  Parser p(lex(input));
  Formula f = p.formula();
  p.finish();
  return f;
}

Term parse_term(std::string_view input) {
  Parser p(lex(input));
  Term t = p.term();
  p.finish();
  return t;
}

}  // namespace tarski

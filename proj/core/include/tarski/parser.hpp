#pragma once

#include "tarski/formula.hpp"

#include <set>
#include <string>
#include <string_view>

namespace tarski {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found);
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// A relation symbol applied to the wrong number of terms.
class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Grammar:
///   formula := "forall" var+ "." formula | "exists" var+ "." formula | imp
///   imp     := disj ("->" imp)?
///   disj    := conj ("|" disj)?
///   conj    := neg ("&" conj)?
///   neg     := "~" neg | "(" formula ")" | atom
///   atom    := "B" term term term | "D" term term term term | "=" term term
///   term    := var | "(" rational "," rational ")"
/// Binary connectives associate to the right.
Formula parse_formula(std::string_view input);

Term parse_term(std::string_view input);

}  // namespace tarski

#pragma once

// Finite interpretations over {0, ..., n-1} and an exhaustive evaluator.

#include "tarski/formula.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tarski {

struct FiniteModel {
  int size = 1;
  /// Membership flags indexed a*n*n + b*n + c.
  std::vector<std::uint8_t> b_table;
  /// Membership flags indexed ((a*n + b)*n + c)*n + d.
  std::vector<std::uint8_t> d_table;

  static FiniteModel empty(int n);

  bool between(int a, int b, int c) const { return b_table[(a * size + b) * size + c] != 0; }
  bool congruent(int a, int b, int c, int d) const { return d_table[((a * size + b) * size + c) * size + d] != 0; }
  void set_between(int a, int b, int c, bool v = true);
  void set_congruent(int a, int b, int c, int d, bool v = true);

  std::vector<std::array<int, 3>> b_triples() const;
  std::vector<std::array<int, 4>> d_quadruples() const;

  friend bool operator==(const FiniteModel& x, const FiniteModel& y) {
    return x.size == y.size && x.b_table == y.b_table && x.d_table == y.d_table;
  }
  friend bool operator<(const FiniteModel& x, const FiniteModel& y) {
    if (x.size != y.size) return x.size < y.size;
    if (x.b_table != y.b_table) return x.b_table < y.b_table;
    return x.d_table < y.d_table;
  }
};

/// "size n", then one "B: a b c" / "D: a b c d" line per tuple.
std::string serialize(const FiniteModel& m);
/// Throws ParseError on malformed input or out-of-range indices.
FiniteModel parse_finite_model(std::string_view text);

using FiniteAssignment = std::map<std::string, int>;

/// Formula compiled against a fixed list of free-variable slots.
class CompiledFormula {
 public:
  /// Throws Error on point constants or free variables outside `slots`.
  CompiledFormula(const Formula& f, const std::vector<std::string>& slots);

  /// `values` holds at least slot_count() entries; the leading ones are
  /// the free variables in slot order.
  bool eval(const FiniteModel& m, std::vector<int>& values) const;
  std::size_t slot_count() const { return slot_count_; }
  /// Number of quantifiers, a rough cost measure.
  std::size_t binder_count() const { return binders_; }

 private:
  enum class Op : std::uint8_t { B, D, Eq, Not, And, Or, Implies, Forall, Exists };
  struct Node {
    Op op;
    std::array<int, 4> args{};
    int lhs = -1;
    int rhs = -1;
  };
  int build(const Formula& f, std::vector<std::pair<std::string, int>>& scope);
  bool run(int node, const FiniteModel& m, std::vector<int>& values) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t slot_count_ = 0;
  std::size_t binders_ = 0;
};

/// Truth of `f` with its free variables assigned.
bool eval_finite(const FiniteModel& m, const Formula& f, const FiniteAssignment& s);

struct FiniteEval {
  bool value = true;
  /// Falsifying values for the outer universal prefix when value is false.
  std::optional<FiniteAssignment> falsifying;
};

/// Free variables are closed universally (sorted by name) first.
FiniteEval eval_formula_exhaustive(const FiniteModel& m, const Formula& f);

}  // namespace tarski

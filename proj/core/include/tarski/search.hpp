#pragma once

// Finite-model search: all (B, D) table pairs over small domains that make
// a list of sentences true and, optionally, one more sentence false.

#include "tarski/axioms.hpp"
#include "tarski/finite_model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tarski {

enum class SearchMode { Exhaustive, Sampled };

struct SearchBudget {
  SearchMode mode = SearchMode::Exhaustive;
  /// Random table pairs drawn in sampled mode.
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 7;
  /// Cap on table pairs checked across all sizes; 0 means no cap.
  std::uint64_t max_pairs = 0;
  unsigned workers = 1;
  /// Models kept in the result; the count in the statistics is not capped.
  std::size_t max_models = 100000;
};

/// In sampled mode the kept counts are samples whose B (D) table passes
/// the sentences mentioning only that relation.
struct SizeStats {
  int size = 0;
  std::uint64_t b_tables = 0;
  std::uint64_t b_kept = 0;
  std::uint64_t d_tables = 0;
  std::uint64_t d_kept = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t models = 0;
};

struct SearchStats {
  SearchMode mode = SearchMode::Exhaustive;
  std::vector<SizeStats> sizes;
  std::uint64_t models_found = 0;
  bool budget_exceeded = false;
  bool models_truncated = false;
  /// Relations no formula mentions are fixed to the empty table.
  bool b_enumerated = true;
  bool d_enumerated = true;
  double elapsed_ms = 0;
};

struct SearchResult {
  std::vector<FiniteModel> models;
  SearchStats stats;
};

/// Exhaustive mode covers sizes 1..max_size (max_size <= 2); sampled mode
/// draws budget.samples table pairs at size max_size. Throws Error on
/// formulas with point constants or an unsupported size.
SearchResult search_finite_models(const std::vector<NamedFormula>& required,
                                  const std::optional<NamedFormula>& forbidden, int max_size,
                                  const SearchBudget& budget);

}  // namespace tarski

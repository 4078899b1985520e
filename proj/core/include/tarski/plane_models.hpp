#pragma once

// Builtin plane interpretations over Q^2: the standard plane and the model
// whose congruence only asks that the first pair of points coincide.

#include "tarski/axioms.hpp"
#include "tarski/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tarski {

enum class ModelKind { StandardPlane, DegenerateM };

struct BuiltinModel {
  ModelKind kind = ModelKind::StandardPlane;
  /// Tolerance for approximate witnesses; the standard plane only.
  Rational epsilon{1, 1000000000};

  static BuiltinModel standard() { return {ModelKind::StandardPlane, Rational(1, 1000000000)}; }
  static BuiltinModel degenerate() { return {ModelKind::DegenerateM, Rational(1, 1000000000)}; }
};

/// "standard" or "M".
std::string model_id(const BuiltinModel& m);
/// Accepts "standard", "plane", "M", "m". Throws Error otherwise.
BuiltinModel parse_model_id(std::string_view id);

using PlaneAssignment = std::map<std::string, Point2>;

/// Throws Error naming the variable when an argument is unassigned.
bool eval_atom(const BuiltinModel& m, const Atom& a, const PlaneAssignment& s);

enum class Truth { False, True, Unknown };

/// Result of evaluating over an infinite domain. `approximate`: rests on an
/// epsilon-tolerant comparison. `probed`: rests on a universal quantifier
/// that was only checked at finitely many probe points.
struct Outcome {
  Truth value = Truth::Unknown;
  bool approximate = false;
  bool probed = false;

  bool certain() const { return !approximate && !probed; }
  bool exact_true() const { return value == Truth::True && certain(); }
  bool exact_false() const { return value == Truth::False && certain(); }
};

/// Three-valued evaluation: quantifiers that no witness or probe settles
/// come back Unknown. Free variables must be covered by `s`.
Outcome evaluate(const BuiltinModel& m, const Formula& f, const PlaneAssignment& s = {});

struct WitnessHints {
  /// Each tuple assigns the leading existential block in order.
  std::vector<std::vector<Point2>> tuples;
  bool approximate = false;
};

/// Candidate witnesses for the first existential block of a catalog axiom.
/// Hints are untrusted; callers re-check the matrix. Throws Error when no
/// provider is registered for (model, axiom).
WitnessHints skolem_witness(const BuiltinModel& m, std::string_view axiom, const PlaneAssignment& s);
bool has_witness_provider(const BuiltinModel& m, std::string_view axiom);

struct SampleConfig {
  std::uint64_t seed = 7;
  std::size_t count = 10000;
  long coord_bound = 10;
  long denominator_bound = 8;
};

enum class CheckStatus { VerifiedExhaustive, VerifiedOnSamples, Refuted, Skipped };

std::string_view status_name(CheckStatus s);

struct ModelCheckReport {
  std::string axiom;
  std::string model;
  CheckStatus status = CheckStatus::Skipped;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  /// Set for refuted reports, in the order of the universal prefix.
  std::vector<std::pair<std::string, Point2>> counterexample;
  std::string reason;
  bool approximate = false;
  double elapsed_ms = 0;

  bool passed() const { return status == CheckStatus::VerifiedExhaustive || status == CheckStatus::VerifiedOnSamples; }
};

/// Universal prefix variables and the formula under them.
std::pair<std::vector<std::string>, Formula> universal_prefix(const Formula& f);

/// True when the matrix under the universal prefix is exactly false at
/// the report's counterexample.
bool verify_refutation(const BuiltinModel& m, const NamedFormula& ax, const ModelCheckReport& r);

/// Sampled assignments for the universal prefix that the model should
/// refute first. Non-empty only for TE and RE in M.
std::vector<PlaneAssignment> forced_samples(const BuiltinModel& m, std::string_view axiom);

ModelCheckReport eval_axiom_sampled(const BuiltinModel& m, const NamedFormula& ax, const SampleConfig& cfg);

/// Known counterexamples: (M, TE) and (M, RE). Throws Error otherwise.
ModelCheckReport refute_with_instance(const BuiltinModel& m, std::string_view axiom);

/// One report per first-order member not in `except`. The continuity
/// marker yields a skipped("schema") report followed by one report per
/// suite instance, each using at most `instance_samples` samples.
std::vector<ModelCheckReport> check_system_sampled(const BuiltinModel& m, const AxiomSystem& sys,
                                                   const std::vector<std::string>& except, const SampleConfig& cfg,
                                                   std::size_t instance_samples = 200);

}  // namespace tarski

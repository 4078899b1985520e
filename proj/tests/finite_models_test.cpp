#include "support.hpp"

#include "tarski/axioms.hpp"
#include "tarski/finite_model.hpp"
#include "tarski/parser.hpp"
#include "tarski/search.hpp"

#include <gtest/gtest.h>

namespace tarski {
namespace {

FiniteModel point_model() {
  FiniteModel m = FiniteModel::empty(1);
  m.set_between(0, 0, 0);
  m.set_congruent(0, 0, 0, 0);
  return m;
}

TEST(Exhaustive, SinglePointModelSatisfiesPrimedSystem) {
  for (const auto& ax : get_system("A'").first_order) {
    FiniteEval r = eval_formula_exhaustive(point_model(), ax.sentence);
    EXPECT_TRUE(r.value) << ax.name;
    EXPECT_FALSE(r.falsifying);
  }
}

TEST(Exhaustive, IdentityOfBetweennessViolation) {
  FiniteModel m = FiniteModel::empty(2);
  m.set_between(0, 1, 0);
  FiniteEval r = eval_formula_exhaustive(m, get_axiom("IB").sentence);
  EXPECT_FALSE(r.value);
  ASSERT_TRUE(r.falsifying);
  EXPECT_EQ(*r.falsifying, (FiniteAssignment{{"a", 0}, {"b", 1}}));
}

TEST(Exhaustive, EmptyCongruenceFailsReflexivity) {
  FiniteEval r = eval_formula_exhaustive(FiniteModel::empty(1), get_axiom("RE").sentence);
  EXPECT_FALSE(r.value);
  EXPECT_EQ(*r.falsifying, (FiniteAssignment{{"a", 0}, {"b", 0}}));
}

TEST(Exhaustive, FreeVariablesAreClosedUniversally) {
  FiniteModel m = FiniteModel::empty(2);
  m.set_between(0, 0, 0);
  FiniteEval r = eval_formula_exhaustive(m, parse_formula("B z z z"));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(*r.falsifying, (FiniteAssignment{{"z", 1}}));
}

TEST(Exhaustive, PointConstantsRejected) {
  EXPECT_THROW(eval_formula_exhaustive(point_model(), parse_formula("B (0,0) a a")), Error);
}

TEST(Compiled, AgreesWithNaiveEvaluator) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Formula f = testing::random_formula(rng, 4, false);
    FiniteModel m = testing::random_finite_model(rng, 1 + i % 3);
    std::set<std::string> free = free_variables(f);
    FiniteAssignment s;
    for (const auto& v : free) s[v] = std::uniform_int_distribution<int>(0, m.size - 1)(rng);
    std::map<std::string, int> copy = s;
    EXPECT_EQ(eval_finite(m, f, s), testing::naive_eval(m, f, copy)) << render_formula(f);
    ++checked;
  }
  EXPECT_EQ(checked, 400);
}

TEST(Serialization, RoundTrip) {
  std::mt19937 rng(2);
  for (int n = 1; n <= 3; ++n) {
    FiniteModel m = testing::random_finite_model(rng, n);
    EXPECT_EQ(parse_finite_model(serialize(m)), m);
  }
  EXPECT_EQ(serialize(point_model()), "size 1\nB: 0 0 0\nD: 0 0 0 0\n");
}

TEST(Serialization, Errors) {
  EXPECT_THROW(parse_finite_model("B: 0 0 0\n"), ParseError);
  EXPECT_THROW(parse_finite_model("size 2\nB: 0 0 2\n"), ParseError);
  EXPECT_THROW(parse_finite_model("size 2\nD: 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_finite_model("size 0\n"), ParseError);
  EXPECT_THROW(parse_finite_model("size 1\nQ: 0\n"), ParseError);
}

SearchBudget exhaustive() { return SearchBudget{}; }

TEST(Search, IdentityOfBetweennessSizeOne) {
  SearchResult r = search_finite_models({get_axiom("IB")}, std::nullopt, 1, exhaustive());
  ASSERT_EQ(r.models.size(), 2u);
  EXPECT_EQ(r.models[0].b_triples().size(), 0u);
  EXPECT_EQ(r.models[1].b_triples().size(), 1u);
  EXPECT_FALSE(r.stats.d_enumerated);
}

// Hand counts over the 8 triples / 16 quadruples of a 2-point domain.
TEST(Search, HandCountedTableFamilies) {
  auto count = [](const std::vector<const char*>& names) {
    std::vector<NamedFormula> req;
    for (const char* n : names) req.push_back(get_axiom(n));
    SearchResult r = search_finite_models(req, std::nullopt, 2, SearchBudget{});
    return r.stats.sizes.at(1).models;
  };
  EXPECT_EQ(count({"IB"}), 64u);        // (0,1,0), (1,0,1) excluded
  EXPECT_EQ(count({"SB"}), 64u);        // 4 palindromes free, 2 mirrored pairs
  EXPECT_EQ(count({"IB", "SB"}), 16u);  // 2 palindromes free, 2 pairs
  EXPECT_EQ(count({"RE"}), 4096u);      // 4 quadruples forced
  EXPECT_EQ(count({"IE"}), 4096u);      // D a b c c with a != b excluded: 4 quadruples
}

TEST(Search, PrimedSystemNeverViolatesReflexivity) {
  SearchResult r = search_finite_models(get_system("A'").first_order, get_axiom("RE"), 2, exhaustive());
  EXPECT_EQ(r.stats.models_found, 0u);
  EXPECT_FALSE(r.stats.budget_exceeded);
}

TEST(Search, FiveSegmentVariantsAgreeUnderReflexivityAndTransitivity) {
  std::vector<NamedFormula> base{get_axiom("RE"), get_axiom("TE")};
  auto with = [&](const char* n) {
    auto v = base;
    v.push_back(get_axiom(n));
    return v;
  };
  EXPECT_EQ(search_finite_models(with("FS"), get_axiom("FS'"), 2, exhaustive()).stats.models_found, 0u);
  EXPECT_EQ(search_finite_models(with("FS'"), get_axiom("FS"), 2, exhaustive()).stats.models_found, 0u);
}

TEST(Search, WithoutReflexivityTheVariantsCanDiffer) {
  SearchResult r = search_finite_models({get_axiom("TE"), get_axiom("FS")}, get_axiom("FS'"), 2, exhaustive());
  ASSERT_GT(r.stats.models_found, 0u);
  const FiniteModel& m = r.models.front();
  EXPECT_TRUE(eval_formula_exhaustive(m, get_axiom("FS").sentence).value);
  EXPECT_FALSE(eval_formula_exhaustive(m, get_axiom("FS'").sentence).value);
}

TEST(Search, WorkerCountDoesNotChangeResults) {
  std::vector<NamedFormula> req{get_axiom("IB"), get_axiom("TE")};
  SearchBudget one = exhaustive(), three = exhaustive();
  three.workers = 3;
  SearchResult a = search_finite_models(req, get_axiom("SB"), 2, one);
  SearchResult b = search_finite_models(req, get_axiom("SB"), 2, three);
  EXPECT_EQ(a.models, b.models);
  EXPECT_EQ(a.stats.models_found, b.stats.models_found);

  SearchBudget s1{SearchMode::Sampled, 5000, 3, 0, 1, 100000};
  SearchBudget s4{SearchMode::Sampled, 5000, 3, 0, 4, 100000};
  auto ra = search_finite_models({get_axiom("IB")}, std::nullopt, 3, s1);
  auto rb = search_finite_models({get_axiom("IB")}, std::nullopt, 3, s4);
  EXPECT_EQ(ra.models, rb.models);
  EXPECT_GT(ra.stats.models_found, 0u);
}

TEST(Search, BudgetIsReportedNotSilent) {
  SearchBudget b = exhaustive();
  b.max_pairs = 10;
  SearchResult r = search_finite_models({get_axiom("IB")}, std::nullopt, 2, b);
  EXPECT_TRUE(r.stats.budget_exceeded);
  std::uint64_t checked = 0;
  for (const auto& s : r.stats.sizes) checked += s.pairs_checked;
  EXPECT_EQ(checked, 10u);
}

TEST(Search, ModelListCapIsReported) {
  SearchBudget b = exhaustive();
  b.max_models = 5;
  SearchResult r = search_finite_models({get_axiom("RE")}, std::nullopt, 2, b);
  EXPECT_EQ(r.models.size(), 5u);
  EXPECT_TRUE(r.stats.models_truncated);
  EXPECT_EQ(r.stats.models_found, 4097u);
}

TEST(Search, FoundModelsSatisfyRequirements) {
  std::vector<NamedFormula> req{get_axiom("IB"), get_axiom("SB"), get_axiom("IE")};
  SearchResult r = search_finite_models(req, get_axiom("Pa"), 2, exhaustive());
  ASSERT_GT(r.models.size(), 0u);
  for (const auto& m : r.models) {
    for (const auto& ax : req) EXPECT_TRUE(eval_formula_exhaustive(m, ax.sentence).value);
    EXPECT_FALSE(eval_formula_exhaustive(m, get_axiom("Pa").sentence).value);
  }
}

TEST(Search, SizeLimits) {
  EXPECT_THROW(search_finite_models({get_axiom("IB")}, std::nullopt, 3, exhaustive()), Error);
  EXPECT_THROW(search_finite_models({get_axiom("IB")}, std::nullopt, 0, exhaustive()), Error);
}

}  // namespace
}  // namespace tarski

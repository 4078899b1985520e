#include "tarski/axioms.hpp"
#include "tarski/parser.hpp"
#include "tarski/plane_models.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace tarski {
namespace {

std::set<std::string> names_of(const AxiomSystem& s) {
  auto v = s.member_names();
  return {v.begin(), v.end()};
}

const Atom& final_atom(const Formula& f) {
  const Formula* cur = &f;
  while (!cur->is_atom()) cur = cur->is_binary() ? &cur->rhs() : &cur->body();
  return cur->atom_value();
}

TEST(Systems, MemberCounts) {
  EXPECT_EQ(get_system("CE₂").size(), 11u);
  EXPECT_EQ(get_system("CE₂").first_order.size(), 10u);
  EXPECT_EQ(get_system("CE₂′").size(), 10u);
  EXPECT_EQ(get_system("CE₂′").first_order.size(), 9u);
  EXPECT_EQ(get_system("A").size(), 7u);
  EXPECT_EQ(get_system("A′").size(), 6u);
  EXPECT_EQ(get_system("CE₂").member_names().back(), "Co");
}

TEST(Systems, Membership) {
  EXPECT_EQ(names_of(get_system("A'")), (std::set<std::string>{"TE", "IE", "SC", "FS′", "IB", "Pa"}));
  EXPECT_EQ(names_of(get_system("A")), (std::set<std::string>{"RE", "TE", "IE", "SC", "FS", "IB", "Pa"}));
}

TEST(Systems, PrimedSystemsSwapTwoMembersForOne) {
  auto swap = [](std::set<std::string> s) {
    s.erase("RE");
    s.erase("FS");
    s.insert("FS′");
    return s;
  };
  EXPECT_EQ(names_of(get_system("CE2'")), swap(names_of(get_system("CE2"))));
  EXPECT_EQ(names_of(get_system("A'")), swap(names_of(get_system("A"))));
}

TEST(Catalog, EveryAxiomIsASentenceAndRoundTrips) {
  for (const auto& ax : axiom_catalog()) {
    EXPECT_TRUE(is_sentence(ax.sentence)) << ax.name;
    EXPECT_TRUE(alpha_equal(parse_formula(render_formula(ax.sentence)), ax.sentence)) << ax.name;
  }
}

TEST(Catalog, FiveSegmentConclusions) {
  EXPECT_EQ(render(final_atom(get_axiom("FS′").sentence)), "D d c c' d'");
  EXPECT_EQ(render(final_atom(get_axiom("FS").sentence)), "D c d c' d'");
}

TEST(Catalog, OuterPaschPrimeKeepsWitnessOutside) {
  const Formula& s = get_axiom("OP'").sentence;
  const Formula* cur = &s;
  while (cur->kind() == Formula::Kind::Forall) cur = &cur->body();
  ASSERT_EQ(cur->kind(), Formula::Kind::Exists);
  EXPECT_EQ(render(final_atom(s)), "B b p x");
}

TEST(Catalog, UnknownNameListsAlternatives) {
  try {
    get_axiom("XX");
    FAIL();
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("Pa"), std::string::npos);
    EXPECT_NE(msg.find("OP'"), std::string::npos);
  }
  EXPECT_THROW(get_system("B"), Error);
}

TEST(Catalog, AsciiAliases) {
  EXPECT_EQ(canonical_name("FS'"), "FS′");
  EXPECT_EQ(canonical_name("Lo2"), "Lo₂");
  EXPECT_EQ(canonical_name("CE2'"), "CE₂′");
  EXPECT_EQ(ascii_name("Up₂"), "Up2");
  EXPECT_EQ(&get_axiom("Up2"), &get_axiom("Up₂"));
}

TEST(Catalog, ExportParsesBack) {
  std::istringstream in(export_catalog());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    auto sep = line.find(" := ");
    ASSERT_NE(sep, std::string::npos) << line;
    EXPECT_TRUE(alpha_equal(parse_formula(line.substr(sep + 4)), get_axiom(line.substr(0, sep)).sentence)) << line;
    ++n;
  }
  EXPECT_EQ(n, axiom_catalog().size());
}

TEST(ResolveFormulas, ExpandsSystemsAndDropsSchema) {
  auto fs = resolve_formulas("CE2',SB");
  ASSERT_EQ(fs.size(), 10u);
  EXPECT_EQ(fs.back().name, "SB");
  EXPECT_TRUE(std::none_of(fs.begin(), fs.end(), [](const NamedFormula& f) { return f.name == "Co"; }));
}

TEST(Continuity, SegmentCutInstance) {
  auto ci = instantiate_continuity(parse_formula("B p x q"), "x", parse_formula("B q y r"), "y");
  EXPECT_TRUE(is_sentence(ci.sentence));
  EXPECT_EQ(render_formula(ci.sentence),
            "forall p q r. ((exists a. forall x y. (B p x q & B q y r -> B a x y)) -> "
            "(exists b. forall x y. (B p x q & B q y r -> B x b y)))");
}

TEST(Continuity, BoundNamesAvoidParameters) {
  auto ci = instantiate_continuity(parse_formula("B a x b"), "x", parse_formula("= y y"), "y");
  EXPECT_TRUE(is_sentence(ci.sentence));
  EXPECT_EQ(render_formula(ci.sentence),
            "forall a b. ((exists a1. forall x y. (B a x b & = y y -> B a1 x y)) -> "
            "(exists b1. forall x y. (B a x b & = y y -> B x b1 y)))");
}

TEST(Continuity, VacuousHypothesisInstance) {
  auto ci = instantiate_continuity(parse_formula("= x x"), "x", parse_formula("~= y y"), "y");
  EXPECT_TRUE(is_sentence(ci.sentence));
  EXPECT_EQ(evaluate(BuiltinModel::standard(), ci.sentence).value, Truth::True);
}

TEST(Continuity, DesignatedVariableMustBeFree) {
  EXPECT_THROW(instantiate_continuity(parse_formula("= z z"), "x", parse_formula("= y y"), "y"), Error);
  EXPECT_THROW(instantiate_continuity(parse_formula("= x x"), "x", parse_formula("forall y. = y y"), "y"), Error);
}

TEST(Continuity, PointInstanceHoldsInTheStandardPlane) {
  const NamedFormula& ci = get_axiom("Co[point]");
  ModelCheckReport r = eval_axiom_sampled(BuiltinModel::standard(), ci, SampleConfig{7, 50, 10, 8});
  EXPECT_EQ(r.status, CheckStatus::VerifiedOnSamples) << r.reason;
}

}  // namespace
}  // namespace tarski

#include "tarski/axioms.hpp"
#include "tarski/formula.hpp"
#include "tarski/parser.hpp"

#include <gtest/gtest.h>

namespace tarski {
namespace {

Term v(const char* n) { return Term::var(n); }
Formula F(const char* s) { return parse_formula(s); }

TEST(Parse, ReflexivitySentenceNestsTwoUniversals) {
  Formula f = F("forall a b. D a b b a");
  Formula expected = Formula::forall("a", Formula::forall("b", Formula::atom(Atom::congruent(v("a"), v("b"), v("b"), v("a")))));
  EXPECT_EQ(f, expected);
}

TEST(Parse, SingleAtom) { EXPECT_EQ(F("B a b c"), Formula::atom(Atom::between(v("a"), v("b"), v("c")))); }

TEST(Parse, IdentityOfBetweenness) {
  Formula expected = Formula::forall_of(
      {"a", "b"}, Formula::implication(Formula::atom(Atom::between(v("a"), v("b"), v("a"))),
                                       Formula::atom(Atom::equal(v("a"), v("b")))));
  EXPECT_EQ(F("forall a b. (B a b a -> = a b)"), expected);
  EXPECT_EQ(F("forall a b. (B a b a -> = a b)"), get_axiom("IB").sentence);
}

TEST(Parse, Precedence) {
  EXPECT_EQ(F("~B a b c & B a b c | = a b -> = b a"),
            F("(((~B a b c) & B a b c) | = a b) -> = b a"));
  EXPECT_EQ(F("= a b -> = b c -> = a c"), F("= a b -> (= b c -> = a c)"));
  EXPECT_EQ(F("forall x. = x x & = x x"), F("forall x. (= x x & = x x)"));
}

TEST(Parse, PointConstants) {
  Formula f = F("D (0,0) (0,0) (0,0) (-1/2,3)");
  const Atom& a = f.atom_value();
  ASSERT_TRUE(a.args[3].is_point());
  EXPECT_EQ(a.args[3].point_value().x, Rational(-1, 2));
  EXPECT_EQ(a.args[3].point_value().y, Rational(3));
}

TEST(Parse, ArityErrorPointsAtAtom) {
  try {
    F("forall a b. B a b");
    FAIL() << "expected ArityError";
  } catch (const ArityError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
  EXPECT_THROW(F("D a b c"), ArityError);
  EXPECT_THROW(F("= a b c"), ArityError);
}

TEST(Parse, SyntaxErrorCarriesExpectedSet) {
  try {
    F("forall . B a b c");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 8u);
    EXPECT_EQ(e.expected(), std::set<std::string>{"variable"});
  }
  try {
    F("B a b c &\n  ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(F("B a b c)"), ParseError);
  EXPECT_THROW(F("P a b"), ParseError);
  EXPECT_THROW(F(""), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render_formula(Formula::atom(Atom::equal(v("a"), v("b")))), "= a b");
  EXPECT_EQ(render_formula(get_axiom("IE").sentence), "forall a b c. (D a b c c -> = a b)");
  EXPECT_EQ(render_formula(Formula::exists("x", Formula::atom(Atom::between(v("q"), v("a"), v("x"))))),
            "exists x. B q a x");
}

TEST(Render, LeftNestedBinaryKeepsParentheses) {
  Formula f = Formula::implication(
      Formula::implication(F("= a b"), F("= b c")), F("= a c"));
  EXPECT_EQ(F(render_formula(f).c_str()), f);
}

TEST(Render, QuantifierOperandIsParenthesized) {
  Formula f = Formula::conjunction(F("forall x. = x x"), F("= a b"));
  EXPECT_EQ(F(render_formula(f).c_str()), f);
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(F("B x b c"), "x", v("a")), F("B a b c"));
  Formula s = substitute(F("exists x. = x y"), "y", v("x"));
  EXPECT_EQ(render_formula(s), "exists x1. = x1 x");
}

TEST(Substitute, FreshNameSkipsTakenSuffixes) {
  Formula s = substitute(F("exists x. (= x y & = x1 x1)"), "y", v("x"));
  EXPECT_EQ(render_formula(s), "exists x2. (= x2 x & = x1 x1)");
  EXPECT_EQ(fresh_name("x3", {"x", "x1"}), "x2");
}

TEST(Substitute, LemmaReInstanceOfFivePrime) {
  // a,a' -> x ; b,b',d,d' -> a ; c,c' -> b
  Formula fsp = get_axiom("FS'").sentence;
  Formula body = fsp;
  std::vector<std::pair<std::string, std::string>> plan{{"a", "x"}, {"b", "a"}, {"c", "b"}, {"d", "a"},
                                                        {"a'", "x"}, {"b'", "a"}, {"c'", "b"}, {"d'", "a"}};
  for (const auto& [var, term] : plan) {
    ASSERT_EQ(body.kind(), Formula::Kind::Forall);
    ASSERT_EQ(body.bound_var(), var);
    body = substitute(body.body(), var, v(term.c_str()));
  }
  EXPECT_TRUE(alpha_equal(body, F("~= x a & B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a -> D a b b a")));
}

TEST(FreeVariables, Examples) {
  EXPECT_TRUE(free_variables(get_axiom("RE").sentence).empty());
  EXPECT_EQ(free_variables(F("B a b c")), (std::set<std::string>{"a", "b", "c"}));
  EXPECT_EQ(free_variables(F("forall a. B a b a")), std::set<std::string>{"b"});
}

TEST(AlphaEqual, Examples) {
  EXPECT_TRUE(alpha_equal(F("forall a. B a a a"), F("forall z. B z z z")));
  EXPECT_FALSE(alpha_equal(F("forall a. B a b a"), F("forall a. B a c a")));
  EXPECT_TRUE(alpha_equal(get_axiom("Pa").sentence,
                          F("forall a1 b1 c1 p1 q1. (B a1 p1 c1 & B b1 q1 c1 -> (exists z. (B p1 z b1 & B q1 z a1)))")));
}

TEST(AlphaEqual, BinderStructureMatters) {
  EXPECT_FALSE(alpha_equal(F("forall a b. D a b b a"), F("forall b a. D a b b a")));
  EXPECT_FALSE(alpha_equal(F("forall x. exists y. B x y x"), F("exists y. forall x. B x y x")));
  EXPECT_TRUE(alpha_equal(F("forall x. forall x. = x x"), F("forall y. forall z. = z z")));
  EXPECT_FALSE(alpha_equal(F("forall x. forall y. = x x"), F("forall y. forall z. = z z")));
}

TEST(ReplaceOccurrences, SelectedPositionsOnly) {
  Formula f = F("D a b a b");
  auto r = replace_occurrences(f, v("a"), v("c"), {2});
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, F("D a b c b"));
  EXPECT_FALSE(replace_occurrences(f, v("a"), v("c"), {3}));
  EXPECT_FALSE(replace_occurrences(F("exists c. B a c a"), v("a"), v("c"), {1}));
  EXPECT_EQ(count_free_occurrences(F("B a a a & (forall a. = a a)"), v("a")), 3u);
}

TEST(DiffAtoms, FiveSegmentVariantsDifferInOneTransposedAtom) {
  auto d = diff_atoms(get_axiom("FS").sentence, get_axiom("FS'").sentence);
  ASSERT_TRUE(d);
  ASSERT_EQ(d->size(), 1u);
  const auto& a = d->front();
  EXPECT_EQ(a.left.relation, Relation::Congruent);
  EXPECT_EQ(a.left.args[0], a.right.args[1]);
  EXPECT_EQ(a.left.args[1], a.right.args[0]);
  EXPECT_EQ(a.left.args[2], a.right.args[2]);
  EXPECT_EQ(a.left.args[3], a.right.args[3]);
}

TEST(DiffAtoms, ShapeMismatchIsNotAnAtomDiff) {
  EXPECT_FALSE(diff_atoms(F("B a b c & B a b c"), F("B a b c | B a b c")));
  EXPECT_FALSE(diff_atoms(F("forall x. = x x"), F("forall y. = y y")));
  EXPECT_EQ(diff_atoms(F("= a b"), F("= a b"))->size(), 0u);
}

}  // namespace
}  // namespace tarski

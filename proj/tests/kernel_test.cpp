#include "tarski/derivation_text.hpp"
#include "tarski/kernel.hpp"

#include <gtest/gtest.h>

namespace tarski {
namespace {

CheckResult check(const std::string& text) { return check_derivation(parse_derivation(text)); }

void expect_rejected_at(const std::string& text, int line) {
  CheckResult r = check(text);
  EXPECT_FALSE(r.accepted());
  ASSERT_TRUE(r.failing_line) << r.reason;
  EXPECT_EQ(*r.failing_line, line) << r.reason;
}

TEST(Kernel, GoalMismatchOneLiner) {
  expect_rejected_at(
      "name: t\npremises: RE\ngoal: B a a a\n"
      "1. forall a b. D a b b a ; premise RE\n",
      1);
}

TEST(Kernel, PremiseMustMatchNamedAxiomUpToAlpha) {
  EXPECT_TRUE(check("name: t\npremises: RE\ngoal: forall u v. D u v v u\n"
                    "1. forall u v. D u v v u ; premise RE\n")
                  .accepted());
  expect_rejected_at(
      "name: t\npremises: RE\ngoal: forall a b. D a b a b\n"
      "1. forall a b. D a b a b ; premise RE\n",
      1);
  expect_rejected_at(
      "name: t\npremises: RE\ngoal: forall a b. (B a b a -> = a b)\n"
      "1. forall a b. (B a b a -> = a b) ; premise IB\n",
      1);
}

TEST(Kernel, ForallElimAvoidsCapture) {
  EXPECT_TRUE(check("name: t\npremises: SC\ngoal: exists x1. (B a x x1 & D x x1 b c)\n"
                    "1. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC\n"
                    "2. exists x1. (B a x x1 & D x x1 b c) ; forall-elim 1 x b c a\n")
                  .accepted());
  expect_rejected_at(
      "name: t\npremises: SC\ngoal: exists x. (B a x x & D x x b c)\n"
      "1. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC\n"
      "2. exists x. (B a x x & D x x b c) ; forall-elim 1 x b c a\n",
      2);
}

TEST(Kernel, ImplicationFrame) {
  const char* ok =
      "name: t\npremises: \ngoal: B a b c -> B a b c & B a b c\n"
      "1. assume B a b c\n"
      "2. B a b c & B a b c ; and-intro 1 1\n"
      "qed-frame\n"
      "3. B a b c -> B a b c & B a b c ; imp-intro 1\n";
  EXPECT_TRUE(check(ok).accepted());
  expect_rejected_at(
      "name: t\npremises: \ngoal: B a b c\n"
      "1. assume B a b c\n"
      "qed-frame\n"
      "2. B a b c ; and-elim-l 3\n",
      2);
}

TEST(Kernel, LinesInsideClosedFrameAreNotVisible) {
  expect_rejected_at(
      "name: t\npremises: \ngoal: B a b c & B a b c\n"
      "1. assume B a b c\n"
      "2. B a b c & B a b c ; and-intro 1 1\n"
      "qed-frame\n"
      "3. B a b c & B a b c ; and-intro 1 1\n",
      3);
}

TEST(Kernel, UnclosedFrameRejected) {
  CheckResult r = check(
      "name: t\npremises: \ngoal: B a b c\n"
      "1. assume B a b c\n");
  EXPECT_FALSE(r.accepted());
  EXPECT_TRUE(r.failing_line);
}

TEST(Kernel, IndicesMustIncrease) {
  expect_rejected_at(
      "name: t\npremises: RE\ngoal: forall a b. D a b b a\n"
      "2. forall a b. D a b b a ; premise RE\n"
      "1. forall a b. D a b b a ; premise RE\n",
      1);
}

TEST(Kernel, ForallIntroSideConditions) {
  EXPECT_TRUE(check("name: t\npremises: RE\ngoal: forall u. D u u u u\n"
                    "1. forall a b. D a b b a ; premise RE\n"
                    "2. D u u u u ; forall-elim 1 u u\n"
                    "3. forall u. D u u u u ; forall-intro 2 u\n")
                  .accepted());
  expect_rejected_at(
      "name: t\npremises: \ngoal: B a b c -> (forall a. B a b c)\n"
      "1. assume B a b c\n"
      "2. forall a. B a b c ; forall-intro 1 a\n"
      "qed-frame\n"
      "3. B a b c -> (forall a. B a b c) ; imp-intro 1\n",
      2);
}

TEST(Kernel, ObtainWitnessMustBeFreshAndStayInside) {
  const char* head =
      "name: t\npremises: SC\ngoal: exists x. B a a x\n"
      "1. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC\n"
      "2. exists x. (B a a x & D a x a a) ; forall-elim 1 a a a a\n";
  EXPECT_TRUE(check(std::string(head) +
                    "3. obtain y from 2\n"
                    "4. B a a y ; and-elim-l 3\n"
                    "5. exists x. B a a x ; exists-intro 4 y\n"
                    "qed-frame\n"
                    "6. exists x. B a a x ; exists-elim 3\n")
                  .accepted());
  expect_rejected_at(std::string(head) +
                         "3. obtain a from 2\n"
                         "4. B a a a ; and-elim-l 3\n"
                         "5. exists x. B a a x ; exists-intro 4 a\n"
                         "qed-frame\n"
                         "6. exists x. B a a x ; exists-elim 3\n",
                     3);
  expect_rejected_at(
      "name: t\npremises: SC\ngoal: B a a y\n"
      "1. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC\n"
      "2. exists x. (B a a x & D a x a a) ; forall-elim 1 a a a a\n"
      "3. obtain y from 2\n"
      "4. B a a y ; and-elim-l 3\n"
      "qed-frame\n"
      "5. B a a y ; exists-elim 3\n",
      3);
}

TEST(Kernel, EqualityRules) {
  EXPECT_TRUE(check("name: t\npremises: \ngoal: = a b -> B b b c -> B a b c\n"
                    "1. assume = a b\n"
                    "2. assume B b b c\n"
                    "3. = b a ; eq-sym 1\n"
                    "4. B a b c ; eq-rewrite 2 3 1\n"
                    "qed-frame\n"
                    "5. B b b c -> B a b c ; imp-intro 2\n"
                    "qed-frame\n"
                    "6. = a b -> B b b c -> B a b c ; imp-intro 1\n")
                  .accepted());
  expect_rejected_at(
      "name: t\npremises: \ngoal: = a b -> B b b c -> B a a c\n"
      "1. assume = a b\n"
      "2. assume B b b c\n"
      "3. = b a ; eq-sym 1\n"
      "4. B a a c ; eq-rewrite 2 3 1\n"
      "qed-frame\n"
      "5. B b b c -> B a a c ; imp-intro 2\n"
      "qed-frame\n"
      "6. = a b -> B b b c -> B a a c ; imp-intro 1\n",
      4);
  EXPECT_TRUE(check("name: t\npremises: \ngoal: = (1/2,0) (1/2,0)\n"
                    "1. = (1/2,0) (1/2,0) ; eq-refl (1/2,0)\n")
                  .accepted());
}

TEST(Kernel, ClassicalRules) {
  EXPECT_TRUE(check("name: t\npremises: \ngoal: ~~B a b c -> B a b c\n"
                    "1. assume ~~B a b c\n"
                    "2. B a b c | ~B a b c ; lem\n"
                    "3. assume B a b c\n"
                    "4. B a b c & B a b c ; and-intro 3 3\n"
                    "5. B a b c ; and-elim-l 4\n"
                    "qed-frame\n"
                    "6. assume ~B a b c\n"
                    "7. B a b c ; contra 6 1\n"
                    "qed-frame\n"
                    "8. B a b c ; cases 2 3 6\n"
                    "qed-frame\n"
                    "9. ~~B a b c -> B a b c ; imp-intro 1\n")
                  .accepted());
  EXPECT_TRUE(check("name: t\npremises: \ngoal: B a b c -> ~~B a b c\n"
                    "1. assume B a b c\n"
                    "2. assume ~B a b c\n"
                    "3. B a b c & B a b c ; and-intro 1 1\n"
                    "qed-frame\n"
                    "4. ~~B a b c ; not-intro 2 1 2\n"
                    "qed-frame\n"
                    "5. B a b c -> ~~B a b c ; imp-intro 1\n")
                  .accepted());
}

TEST(Kernel, CasesNeedMatchingConclusions) {
  expect_rejected_at(
      "name: t\npremises: \ngoal: = a a\n"
      "1. B a b c | ~B a b c ; lem\n"
      "2. assume B a b c\n"
      "3. = a a ; eq-refl a\n"
      "qed-frame\n"
      "4. assume ~B a b c\n"
      "5. = b b ; eq-refl b\n"
      "qed-frame\n"
      "6. = a a ; cases 1 2 4\n",
      6);
}

TEST(Kernel, DisjunctionIntroduction) {
  EXPECT_TRUE(check("name: t\npremises: \ngoal: = a a | B a b c\n"
                    "1. = a a ; eq-refl a\n"
                    "2. = a a | B a b c ; or-intro-l 1\n")
                  .accepted());
  expect_rejected_at(
      "name: t\npremises: \ngoal: = a a | B a b c\n"
      "1. = a a ; eq-refl a\n"
      "2. = a a | B a b c ; or-intro-r 1\n",
      2);
}

TEST(Kernel, Determinism) {
  Derivation d = parse_derivation(
      "name: t\npremises: RE\ngoal: B a a a\n"
      "1. forall a b. D a b b a ; premise RE\n");
  CheckResult r1 = check_derivation(d), r2 = check_derivation(d);
  EXPECT_EQ(r1.verdict, r2.verdict);
  EXPECT_EQ(r1.failing_line, r2.failing_line);
  EXPECT_EQ(r1.reason, r2.reason);
}

TEST(DerivationText, RenderParsesBack) {
  Derivation d = parse_derivation(
      "name: t\npremises: A'\ngoal: forall u. D u u u u\n"
      "# comment\n"
      "1. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE\n"
      "2. assume = u u\n"
      "3. = u u ; eq-refl u\n"
      "qed-frame\n"
      "4. = u u -> = u u ; imp-intro 2\n");
  std::string text = render_derivation(d);
  Derivation back = parse_derivation(text);
  EXPECT_EQ(render_derivation(back), text);
  EXPECT_EQ(back.premises.size(), 6u);
}

TEST(DerivationText, ErrorsCarryFileLine) {
  try {
    parse_derivation("name: t\npremises: RE\ngoal: B a a a\n1. B a a ; premise RE\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_derivation("name: t\ngoal: B a a a\n"), ParseError);
  EXPECT_THROW(parse_derivation("name: t\npremises: RE\ngoal: B a a a\n1. B a a a ; frobnicate 2\n"), ParseError);
  EXPECT_THROW(parse_derivation("name: t\npremises: NOPE\ngoal: B a a a\n"), Error);
}

}  // namespace
}  // namespace tarski

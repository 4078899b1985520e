#include "tarski/builtins.hpp"

#include "tarski/derivation_text.hpp"

#include <algorithm>
#include <array>

namespace tarski {

namespace {

struct Script {
  std::string_view name;
  std::string_view text;
};

// Each script cites every line it states; the mutation tests rely on that.
constexpr std::array<Script, 11> kScripts{{
    {"lemma_abab", R"(name: lemma_abab
premises: TE, SC
goal: forall a b. D a b a b
1. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
2. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
3. exists x. (B a a x & D a x a b) ; forall-elim 2 a a b a
4. obtain x from 3
5. D a x a b ; and-elim-r 4
6. D a x a b & D a x a b -> D a b a b ; forall-elim 1 a x a b a b
7. D a x a b & D a x a b ; and-intro 5 5
8. D a b a b ; imp-elim 6 7
qed-frame
9. D a b a b ; exists-elim 4
10. forall a b. D a b a b ; forall-intro 9 a b
)"},

    {"lemma_cdab", R"(name: lemma_cdab
premises: TE, SC
goal: forall a b c d. (D a b c d -> D c d a b)
1. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
2. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
# D a b a b, as in lemma_abab
3. exists x. (B a a x & D a x a b) ; forall-elim 2 a a b a
4. obtain x from 3
5. D a x a b ; and-elim-r 4
6. D a x a b & D a x a b -> D a b a b ; forall-elim 1 a x a b a b
7. D a x a b & D a x a b ; and-intro 5 5
8. D a b a b ; imp-elim 6 7
qed-frame
9. D a b a b ; exists-elim 4
10. assume D a b c d
# TE instantiated as (a, b, p, q, r, s) := (a, b, c, d, a, b)
11. D a b c d & D a b a b -> D c d a b ; forall-elim 1 a b c d a b
12. D a b c d & D a b a b ; and-intro 10 9
13. D c d a b ; imp-elim 11 12
qed-frame
14. D a b c d -> D c d a b ; imp-intro 10
15. forall a b c d. (D a b c d -> D c d a b) ; forall-intro 14 a b c d
)"},

    {"lemma_abb", R"(name: lemma_abb
premises: IE, SC
goal: forall a b. B a b b
1. forall a b c. (D a b c c -> = a b) ; premise IE
2. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
3. exists x. (B a b x & D b x b b) ; forall-elim 2 b b b a
4. obtain x from 3
5. B a b x ; and-elim-l 4
6. D b x b b ; and-elim-r 4
7. D b x b b -> = b x ; forall-elim 1 b x b
8. = b x ; imp-elim 7 6
9. = x b ; eq-sym 8
10. B a b b ; eq-rewrite 5 9 1
qed-frame
11. B a b b ; exists-elim 4
12. forall a b. B a b b ; forall-intro 11 a b
)"},

    {"lemma_sb", R"(name: lemma_sb
premises: IE, SC, IB, Pa
goal: forall a b c. (B a b c -> B c b a)
1. forall a b c. (D a b c c -> = a b) ; premise IE
2. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
3. forall a b. (B a b a -> = a b) ; premise IB
4. forall a b c p q. (B a p c & B b q c -> (exists x. (B p x b & B q x a))) ; premise Pa
5. assume B a b c
# B b c c, as in lemma_abb
6. exists x. (B b c x & D c x c c) ; forall-elim 2 c c c b
7. obtain y from 6
8. B b c y ; and-elim-l 7
9. D c y c c ; and-elim-r 7
10. D c y c c -> = c y ; forall-elim 1 c y c
11. = c y ; imp-elim 10 9
12. = y c ; eq-sym 11
13. B b c c ; eq-rewrite 8 12 1
qed-frame
14. B b c c ; exists-elim 7
15. B a b c & B b c c -> (exists x. (B b x b & B c x a)) ; forall-elim 4 a b c b c
16. B a b c & B b c c ; and-intro 5 14
17. exists x. (B b x b & B c x a) ; imp-elim 15 16
18. obtain x from 17
19. B b x b ; and-elim-l 18
20. B c x a ; and-elim-r 18
21. B b x b -> = b x ; forall-elim 3 b x
22. = b x ; imp-elim 21 19
23. = x b ; eq-sym 22
24. B c b a ; eq-rewrite 20 23 1
qed-frame
25. B c b a ; exists-elim 18
qed-frame
26. B a b c -> B c b a ; imp-intro 5
27. forall a b c. (B a b c -> B c b a) ; forall-intro 26 a b c
)"},

    {"lemma_re", R"(name: lemma_re
premises: A'
goal: forall a b. D a b b a
1. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
2. forall a b c. (D a b c c -> = a b) ; premise IE
3. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
4. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d') ; premise FS'
5. forall a b. (B a b a -> = a b) ; premise IB
6. forall a b c p q. (B a p c & B b q c -> (exists x. (B p x b & B q x a))) ; premise Pa
# forall a b. D a b a b
7. exists x. (B a a x & D a x a b) ; forall-elim 3 a a b a
8. obtain u from 7
9. D a u a b ; and-elim-r 8
10. D a u a b & D a u a b -> D a b a b ; forall-elim 1 a u a b a b
11. D a u a b & D a u a b ; and-intro 9 9
12. D a b a b ; imp-elim 10 11
qed-frame
13. D a b a b ; exists-elim 8
14. forall a b. D a b a b ; forall-intro 13 a b
# forall a b c. (B a b c -> B c b a)
15. assume B a b c
16. exists x. (B b c x & D c x c c) ; forall-elim 3 c c c b
17. obtain v from 16
18. B b c v ; and-elim-l 17
19. D c v c c ; and-elim-r 17
20. D c v c c -> = c v ; forall-elim 2 c v c
21. = c v ; imp-elim 20 19
22. = v c ; eq-sym 21
23. B b c c ; eq-rewrite 18 22 1
qed-frame
24. B b c c ; exists-elim 17
25. B a b c & B b c c -> (exists x. (B b x b & B c x a)) ; forall-elim 6 a b c b c
26. B a b c & B b c c ; and-intro 15 24
27. exists x. (B b x b & B c x a) ; imp-elim 25 26
28. obtain w from 27
29. B b w b ; and-elim-l 28
30. B c w a ; and-elim-r 28
31. B b w b -> = b w ; forall-elim 5 b w
32. = b w ; imp-elim 31 29
33. = w b ; eq-sym 32
34. B c b a ; eq-rewrite 30 33 1
qed-frame
35. B c b a ; exists-elim 28
qed-frame
36. B a b c -> B c b a ; imp-intro 15
37. forall a b c. (B a b c -> B c b a) ; forall-intro 36 a b c
# segment construction: B b a x and D a x b a
38. exists x. (B b a x & D a x b a) ; forall-elim 3 a b a b
39. obtain x from 38
40. B b a x ; and-elim-l 39
41. D a x b a ; and-elim-r 39
42. D a a a a ; forall-elim 14 a a
43. = x a | ~= x a ; lem
44. assume = x a
45. D a a b a ; eq-rewrite 41 44 1
46. D a a b a & D a a a a -> D b a a a ; forall-elim 1 a a b a a a
47. D a a b a & D a a a a ; and-intro 45 42
48. D b a a a ; imp-elim 46 47
49. D b a a a -> = b a ; forall-elim 2 b a a
50. = b a ; imp-elim 49 48
51. = a b ; eq-sym 50
52. D a b b a ; eq-rewrite 45 51 2
qed-frame
53. assume ~= x a
54. B b a x -> B x a b ; forall-elim 37 b a x
55. B x a b ; imp-elim 54 40
56. D x a x a ; forall-elim 14 x a
57. D a b a b ; forall-elim 14 a b
# FS' with a, a' := x; b, b', d, d' := a; c, c' := b
58. ~= x a & B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a -> D a b b a ; forall-elim 4 x a b a x a b a
59. D x a x a & D a a a a ; and-intro 56 42
60. D a b a b & D x a x a & D a a a a ; and-intro 57 59
61. D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 56 60
62. B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 55 61
63. B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 55 62
64. ~= x a & B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 53 63
65. D a b b a ; imp-elim 58 64
qed-frame
66. D a b b a ; cases 43 44 53
qed-frame
67. D a b b a ; exists-elim 39
68. forall a b. D a b b a ; forall-intro 67 a b
)"},

    {"lemma_fs_implies_fsp", R"(name: lemma_fs_implies_fsp
premises: RE, TE, FS
goal: forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d')
1. forall a b. D a b b a ; premise RE
2. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
3. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d') ; premise FS
4. assume ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d'
5. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d' ; forall-elim 3 a b c d a' b' c' d'
6. D c d c' d' ; imp-elim 5 4
7. D c d d c ; forall-elim 1 c d
8. D c d d c & D c d c' d' -> D d c c' d' ; forall-elim 2 c d d c c' d'
9. D c d d c & D c d c' d' ; and-intro 7 6
10. D d c c' d' ; imp-elim 8 9
qed-frame
11. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d' ; imp-intro 4
12. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d') ; forall-intro 11 a b c d a' b' c' d'
)"},

    {"lemma_fsp_implies_fs", R"(name: lemma_fsp_implies_fs
premises: RE, TE, FS'
goal: forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d')
1. forall a b. D a b b a ; premise RE
2. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
3. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d') ; premise FS'
4. assume ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d'
5. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d' ; forall-elim 3 a b c d a' b' c' d'
6. D d c c' d' ; imp-elim 5 4
7. D d c c d ; forall-elim 1 d c
8. D d c c d & D d c c' d' -> D c d c' d' ; forall-elim 2 d c c d c' d'
9. D d c c d & D d c c' d' ; and-intro 7 6
10. D c d c' d' ; imp-elim 8 9
qed-frame
11. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d' ; imp-intro 4
12. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d') ; forall-intro 11 a b c d a' b' c' d'
)"},

    {"theorem_a_from_aprime", R"(name: theorem_a_from_aprime
premises: A'
goal: (forall a b. D a b b a) & (forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d'))
1. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
2. forall a b c. (D a b c c -> = a b) ; premise IE
3. forall a b c q. exists x. (B q a x & D a x b c) ; premise SC
4. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d') ; premise FS'
5. forall a b. (B a b a -> = a b) ; premise IB
6. forall a b c p q. (B a p c & B b q c -> (exists x. (B p x b & B q x a))) ; premise Pa
# RE, exactly as in lemma_re
7. exists x. (B a a x & D a x a b) ; forall-elim 3 a a b a
8. obtain u from 7
9. D a u a b ; and-elim-r 8
10. D a u a b & D a u a b -> D a b a b ; forall-elim 1 a u a b a b
11. D a u a b & D a u a b ; and-intro 9 9
12. D a b a b ; imp-elim 10 11
qed-frame
13. D a b a b ; exists-elim 8
14. forall a b. D a b a b ; forall-intro 13 a b
15. assume B a b c
16. exists x. (B b c x & D c x c c) ; forall-elim 3 c c c b
17. obtain v from 16
18. B b c v ; and-elim-l 17
19. D c v c c ; and-elim-r 17
20. D c v c c -> = c v ; forall-elim 2 c v c
21. = c v ; imp-elim 20 19
22. = v c ; eq-sym 21
23. B b c c ; eq-rewrite 18 22 1
qed-frame
24. B b c c ; exists-elim 17
25. B a b c & B b c c -> (exists x. (B b x b & B c x a)) ; forall-elim 6 a b c b c
26. B a b c & B b c c ; and-intro 15 24
27. exists x. (B b x b & B c x a) ; imp-elim 25 26
28. obtain w from 27
29. B b w b ; and-elim-l 28
30. B c w a ; and-elim-r 28
31. B b w b -> = b w ; forall-elim 5 b w
32. = b w ; imp-elim 31 29
33. = w b ; eq-sym 32
34. B c b a ; eq-rewrite 30 33 1
qed-frame
35. B c b a ; exists-elim 28
qed-frame
36. B a b c -> B c b a ; imp-intro 15
37. forall a b c. (B a b c -> B c b a) ; forall-intro 36 a b c
38. exists x. (B b a x & D a x b a) ; forall-elim 3 a b a b
39. obtain x from 38
40. B b a x ; and-elim-l 39
41. D a x b a ; and-elim-r 39
42. D a a a a ; forall-elim 14 a a
43. = x a | ~= x a ; lem
44. assume = x a
45. D a a b a ; eq-rewrite 41 44 1
46. D a a b a & D a a a a -> D b a a a ; forall-elim 1 a a b a a a
47. D a a b a & D a a a a ; and-intro 45 42
48. D b a a a ; imp-elim 46 47
49. D b a a a -> = b a ; forall-elim 2 b a a
50. = b a ; imp-elim 49 48
51. = a b ; eq-sym 50
52. D a b b a ; eq-rewrite 45 51 2
qed-frame
53. assume ~= x a
54. B b a x -> B x a b ; forall-elim 37 b a x
55. B x a b ; imp-elim 54 40
56. D x a x a ; forall-elim 14 x a
57. D a b a b ; forall-elim 14 a b
58. ~= x a & B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a -> D a b b a ; forall-elim 4 x a b a x a b a
59. D x a x a & D a a a a ; and-intro 56 42
60. D a b a b & D x a x a & D a a a a ; and-intro 57 59
61. D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 56 60
62. B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 55 61
63. B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 55 62
64. ~= x a & B x a b & B x a b & D x a x a & D a b a b & D x a x a & D a a a a ; and-intro 53 63
65. D a b b a ; imp-elim 58 64
qed-frame
66. D a b b a ; cases 43 44 53
qed-frame
67. D a b b a ; exists-elim 39
68. forall a b. D a b b a ; forall-intro 67 a b
# FS from RE, TE and FS', as in lemma_fsp_implies_fs
69. assume ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d'
70. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d' ; forall-elim 4 a b c d a' b' c' d'
71. D d c c' d' ; imp-elim 70 69
72. D d c c d ; forall-elim 68 d c
73. D d c c d & D d c c' d' -> D c d c' d' ; forall-elim 1 d c c d c' d'
74. D d c c d & D d c c' d' ; and-intro 72 71
75. D c d c' d' ; imp-elim 73 74
qed-frame
76. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d' ; imp-intro 69
77. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d') ; forall-intro 76 a b c d a' b' c' d'
78. (forall a b. D a b b a) & (forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d')) ; and-intro 68 77
)"},

    {"theorem_aprime_from_a", R"(name: theorem_aprime_from_a
premises: A
goal: forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d')
1. forall a b. D a b b a ; premise RE
2. forall a b p q r s. (D a b p q & D a b r s -> D p q r s) ; premise TE
3. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d') ; premise FS
4. assume ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d'
5. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D c d c' d' ; forall-elim 3 a b c d a' b' c' d'
6. D c d c' d' ; imp-elim 5 4
7. D c d d c ; forall-elim 1 c d
8. D c d d c & D c d c' d' -> D d c c' d' ; forall-elim 2 c d d c c' d'
9. D c d d c & D c d c' d' ; and-intro 7 6
10. D d c c' d' ; imp-elim 8 9
qed-frame
11. ~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d' ; imp-intro 4
12. forall a b c d a' b' c' d'. (~= a b & B a b c & B a' b' c' & D a b a' b' & D b c b' c' & D a d a' d' & D b d b' d' -> D d c c' d') ; forall-intro 11 a b c d a' b' c' d'
)"},

    {"op_from_opp_given_sb", R"(name: op_from_opp_given_sb
premises: OP', SB
goal: forall a b c p q. (B a p c & B q c b -> (exists x. (B a x q & B x p b)))
1. forall a b c p q. exists x. (B a p c & B q c b -> B a x q & B b p x) ; premise OP'
2. forall a b c. (B a b c -> B c b a) ; premise SB
3. assume B a p c & B q c b
4. exists x. (B a p c & B q c b -> B a x q & B b p x) ; forall-elim 1 a b c p q
5. obtain x from 4
6. B a x q & B b p x ; imp-elim 5 3
7. B a x q ; and-elim-l 6
8. B b p x ; and-elim-r 6
9. B b p x -> B x p b ; forall-elim 2 b p x
10. B x p b ; imp-elim 9 8
11. B a x q & B x p b ; and-intro 7 10
12. exists x. (B a x q & B x p b) ; exists-intro 11 x
qed-frame
13. exists x. (B a x q & B x p b) ; exists-elim 5
qed-frame
14. B a p c & B q c b -> (exists x. (B a x q & B x p b)) ; imp-intro 3
15. forall a b c p q. (B a p c & B q c b -> (exists x. (B a x q & B x p b))) ; forall-intro 14 a b c p q
)"},

    {"opp_from_op_given_sb", R"(name: opp_from_op_given_sb
premises: OP, SB
goal: forall a b c p q. exists x. (B a p c & B q c b -> B a x q & B b p x)
1. forall a b c p q. (B a p c & B q c b -> (exists x. (B a x q & B x p b))) ; premise OP
2. forall a b c. (B a b c -> B c b a) ; premise SB
# the witness sits outside the implication, so split on the hypothesis
3. (B a p c & B q c b) | ~(B a p c & B q c b) ; lem
4. assume B a p c & B q c b
5. B a p c & B q c b -> (exists x. (B a x q & B x p b)) ; forall-elim 1 a b c p q
6. exists x. (B a x q & B x p b) ; imp-elim 5 4
7. obtain x from 6
8. B a x q ; and-elim-l 7
9. B x p b ; and-elim-r 7
10. B x p b -> B b p x ; forall-elim 2 x p b
11. B b p x ; imp-elim 10 9
12. assume B a p c & B q c b
13. B a x q & B b p x ; and-intro 8 11
qed-frame
14. B a p c & B q c b -> B a x q & B b p x ; imp-intro 12
15. exists x. (B a p c & B q c b -> B a x q & B b p x) ; exists-intro 14 x
qed-frame
16. exists x. (B a p c & B q c b -> B a x q & B b p x) ; exists-elim 7
qed-frame
17. assume ~(B a p c & B q c b)
18. assume B a p c & B q c b
19. B a a q & B b p a ; contra 18 17
qed-frame
20. B a p c & B q c b -> B a a q & B b p a ; imp-intro 18
21. exists x. (B a p c & B q c b -> B a x q & B b p x) ; exists-intro 20 a
qed-frame
22. exists x. (B a p c & B q c b -> B a x q & B b p x) ; cases 3 4 17
23. forall a b c p q. exists x. (B a p c & B q c b -> B a x q & B b p x) ; forall-intro 22 a b c p q
)"},
}};

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
#ifndef TARSKI_NO_BUILTIN_LIBRARY
    for (const auto& s : kScripts) out.emplace_back(s.name);
#endif
    return out;
  }();
  return names;
}

std::string_view builtin_script(std::string_view name) {
  for (const auto& s : kScripts) {
    if (s.name == name && !builtin_names().empty()) return s.text;
  }
  std::string names;
  for (const auto& n : builtin_names()) names += (names.empty() ? "" : ", ") + n;
  throw Error("unknown builtin derivation '" + std::string(name) + "'; available: " + (names.empty() ? "none" : names));
}

Derivation builtin_derivation(std::string_view name) { return parse_derivation(builtin_script(name)); }

std::vector<NamedCheck> check_derivations(const std::vector<Derivation>& ds) {
  std::vector<NamedCheck> out;
  out.reserve(ds.size());
  for (const auto& d : ds) out.emplace_back(d.name, check_derivation(d));
  return out;
}

std::vector<NamedCheck> check_all_builtins() {
  std::vector<Derivation> ds;
  for (const auto& n : builtin_names()) ds.push_back(builtin_derivation(n));
  return check_derivations(ds);
}

}  // namespace tarski

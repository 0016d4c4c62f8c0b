#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ordram/errors.hpp"
#include "ordram/fsets.hpp"

using namespace ordram;

namespace {

Ordinal O(const char* s) { return parse(s); }

// F(alpha)^r_n grown top-down through fan positions r+1..c+1, then cut to the window
std::set<Ordinal> grow_f(const Ordinal& alpha, Nat r, Nat n, const Window& w) {
  std::set<Ordinal> cur{alpha};
  for (Nat depth = cb_rank(alpha); depth > n; --depth) {
    std::set<Ordinal> next;
    for (const auto& x : cur)
      for (Nat p = r + 1; p <= w.coeff_bound + 1; ++p) next.insert(subfan_element(x, p));
    cur = std::move(next);
  }
  std::erase_if(cur, [&](const Ordinal& x) { return !w.contains(x); });
  return cur;
}

Ordinal ancestor_at_rank(Ordinal b, Nat k) {
  while (cb_rank(b) < k) b = cover(b);
  return b;
}

PredicateSet pred(const char* s) { return PredicateSet{Predicate::parse(s)}; }

}  // namespace

TEST(FSets, MemberExamples) {
  EXPECT_TRUE(f_member({O("w^3"), 1, 2}, O("w^2*2")));
  EXPECT_FALSE(f_member({O("w^3"), 1, 2}, O("w^2")));
  EXPECT_TRUE(f_member({O("w^3"), 1, 1}, O("w^2*2+w*2")));
  EXPECT_FALSE(f_member({O("w^3"), 1, 1}, O("w^2*2+w")));
  EXPECT_TRUE(f_member({O("w^3"), 5, 3}, O("w^3")));
  EXPECT_FALSE(f_member({O("w^3"), 0, 1}, O("w^3+w")));
  EXPECT_THROW(f_member({O("w^3"), 0, 1}, Ordinal()), ZeroOrdinal);
}

TEST(FSets, RZeroIsWholeLevel) {
  Window w{O("w^3+1"), 3};
  for (Nat n = 0; n <= 3; ++n)
    for (const auto& b : enumerate(w))
      EXPECT_EQ(f_member({O("w^3"), 0, n}, b), in_level(O("w^3"), n, b)) << format(b);
}

TEST(FSets, EnumerateExamples) {
  Window w{O("w^3+1"), 4};
  EXPECT_EQ(f_enumerate({O("w^3"), 1, 2}, w), (std::vector<Ordinal>{O("w^2*2"), O("w^2*3"), O("w^2*4")}));
  EXPECT_EQ(f_enumerate({O("w^3"), 2, 3}, w), (std::vector<Ordinal>{O("w^3")}));
  // ω·k+m needs m > 2 and the cover ω·(k+1) needs k+1 > 2
  std::vector<Ordinal> want;
  for (const char* s : {"w*2+3", "w*2+4", "w*3+3", "w*3+4", "w*4+3", "w*4+4"}) want.push_back(O(s));
  EXPECT_EQ(f_enumerate({O("w^2"), 2, 0}, Window{O("w^2"), 4}), want);
}

TEST(FSets, AgreesWithTopDownGrowth) {
  for (const char* root : {"w^2", "w^3", "w^2*3+w*2", "w^3+w^2*2"}) {
    Ordinal a = O(root);
    Nat c = 4;
    Window w{add(a, O("1")), c};
    for (Nat r = 0; r <= 3; ++r)
      for (Nat n = 0; n <= cb_rank(a); ++n) {
        auto got = f_enumerate({a, r, n}, w);
        auto want = grow_f(a, r, n, w);
        ASSERT_EQ(std::set<Ordinal>(got.begin(), got.end()), want) << root << " r=" << r << " n=" << n;
      }
  }
}

TEST(FSets, Monotone) {
  for (Nat c = 1; c <= 8; ++c) {
    Window w{O("w^3+1"), c};
    for (Nat n = 0; n <= 3; ++n)
      for (Nat r = 0; r < 6; ++r) {
        auto hi = f_enumerate({O("w^3"), r + 1, n}, w);
        auto lo = f_enumerate({O("w^3"), r, n}, w);
        ASSERT_TRUE(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
      }
  }
}

TEST(FSets, LevelTransfer) {
  Ordinal theta = O("w^3");
  Window w{O("w^3+1"), 4};
  for (Nat r = 0; r <= 2; ++r)
    for (Nat k = 0; k <= 3; ++k)
      for (const auto& b : enumerate(w)) {
        Nat n = cb_rank(b);
        if (n > k || !tree_leq(b, theta)) continue;
        // the rank-k point above b is unique
        Ordinal g = ancestor_at_rank(b, k);
        bool rhs = f_member({theta, r, k}, g) && f_member({g, r, n}, b);
        ASSERT_EQ(f_member({theta, r, n}, b), rhs) << format(b) << " r=" << r << " k=" << k;
      }
}

TEST(Large, InstructiveExampleRejected) {
  // {w*k+l : l > k}; below w^2 the coefficients of w and 1 are named l and m
  auto res = large_decide(O("w^2"), 0, pred("m > l"), 10);
  EXPECT_FALSE(res.is_large);
  ASSERT_EQ(res.counterexample_by_r.size(), 11u);
  for (Nat r = 0; r <= 10; ++r) {
    ASSERT_TRUE(res.counterexample_by_r[r]);
    Ordinal want = add(Ordinal::omega_pow(1, r + 1), Ordinal::finite(r + 1));
    EXPECT_EQ(*res.counterexample_by_r[r], want);
    // the counterexample is in F^r but outside the set
    EXPECT_TRUE(f_member({O("w^2"), r, 0}, want));
    EXPECT_FALSE(Predicate::parse("m > l").eval(want));
  }
  EXPECT_EQ(*res.counterexample, O("w*11+11"));
}

TEST(Large, FullLevel) {
  // the finite ordinals belong to T^{=0}(w^2) and to F^0, so l >= 1 costs one step
  auto res = large_decide(O("w^2"), 0, pred("l >= 1, m >= 1"), 2);
  EXPECT_TRUE(res.is_large);
  EXPECT_EQ(res.witness_r, 1u);
  EXPECT_EQ(*res.counterexample_by_r[0], O("1"));
  auto full = large_decide(O("w^2"), 0, pred("m >= 1"), 2);
  EXPECT_TRUE(full.is_large);
  EXPECT_EQ(full.witness_r, 0u);
  EXPECT_FALSE(large_decide(O("w^2"), 0, pred("k >= 1"), 2).is_large);
}

TEST(Large, ExplicitAgainstEnumeration) {
  Nat c = 5;
  Window w{O("w^3+1"), c};
  std::vector<Ordinal> members;
  for (Nat p = 2; p <= c; ++p) members.push_back(Ordinal::omega_pow(2, p));
  auto res = large_decide(O("w^3"), 2, make_explicit(members, w), 1);
  EXPECT_TRUE(res.is_large);
  EXPECT_EQ(res.witness_r, 1u);
  EXPECT_TRUE(res.window_relative);
  auto f1 = f_enumerate({O("w^3"), 1, 2}, w);
  EXPECT_EQ(f1, members);
  EXPECT_THROW(large_decide(O("w^3"), 2, make_explicit({O("w+1")}, w), 1), NotASubsetOfLevel);
}

TEST(Large, FiniteIntersection) {
  const char* ps[] = {"m > 2", "l > 1", "k > 3 | l > 4", "m != 2", "k >= 2"};
  for (const char* a : ps)
    for (const char* b : ps) {
      auto ra = large_decide(O("w^3"), 0, pred(a), 6);
      auto rb = large_decide(O("w^3"), 0, pred(b), 6);
      ASSERT_TRUE(ra.is_large && rb.is_large) << a << " " << b;
      std::string both = std::string(a).find('|') != std::string::npos || std::string(b).find('|') != std::string::npos
                             ? ""
                             : std::string(a) + ", " + b;
      if (both.empty()) continue;
      auto rab = large_decide(O("w^3"), 0, pred(both.c_str()), 6);
      ASSERT_TRUE(rab.is_large);
      ASSERT_LE(*rab.witness_r, std::max(*ra.witness_r, *rb.witness_r));
    }
}

TEST(Staircase, Shapes) {
  auto full = [] { return SubsetSpec{PredicateSet{Predicate::parse("")}}; };
  auto one = staircase(O("w^2"), {0}, {full()}, 3);
  EXPECT_EQ(one.size(), 3u);
  EXPECT_TRUE(tree_isomorphic(one, canonical_truncation(1, 3)));
  for (std::size_t r = 0; r < one.size(); ++r) EXPECT_GE(f_level(O("w^2"), one[r]), r);

  auto two = staircase(O("w^3"), {0, 1}, {full(), full()}, 2);
  ASSERT_EQ(two.size(), 6u);
  EXPECT_TRUE(tree_isomorphic(two, canonical_truncation(2, 2)));
  Nat internal = 0;
  for (const auto& x : two)
    if (cb_rank(x) == 1) {
      ++internal;
      Nat below = 0;
      for (const auto& y : two) below += y != x && tree_leq(y, x);
      EXPECT_EQ(below, 2u);
    }
  EXPECT_EQ(internal, 2u);

  auto high = staircase(O("w^3"), {0, 1}, {SubsetSpec{pred("m > 5")}, full()}, 2);
  EXPECT_TRUE(tree_isomorphic(high, canonical_truncation(2, 2)));
  for (const auto& x : high)
    if (cb_rank(x) == 0) EXPECT_GT(n_of(x), 5u);
}

TEST(Staircase, Errors) {
  EXPECT_THROW(staircase(O("w^2"), {0}, {SubsetSpec{pred("m > l")}}, 2), NotLarge);
  StaircaseOptions tight;
  tight.coeff_bound = 2;
  EXPECT_THROW(staircase(O("w^2"), {0}, {SubsetSpec{pred("m >= 1")}}, 4, tight), WindowExhausted);
}

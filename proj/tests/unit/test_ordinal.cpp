#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ordram/errors.hpp"
#include "ordram/ordinal.hpp"
#include "ordram/structure.hpp"

using namespace ordram;

namespace {

Ordinal O(const char* s) { return parse(s); }

// coefficient vector from the top exponent down; lexicographic order on it is the ordinal order
std::vector<Nat> digits(const Ordinal& a, Nat top) {
  std::vector<Nat> d;
  for (Nat e = top + 1; e-- > 0;) d.push_back(a.coef_at(e));
  return d;
}

bool brute_tree_leq(const Ordinal& b, const Ordinal& a) {
  if (a == b) return true;
  for (Nat g = cb_rank(b) + 1; g <= 6; ++g)
    if (add(b, Ordinal::omega_pow(g)) == a) return true;
  return false;
}

Ordinal random_ordinal(std::mt19937_64& rng) {
  std::vector<Term> t;
  for (Nat e = 7; e-- > 0;)
    if (rng() % 3 == 0) t.push_back({e, 1 + rng() % 1000});
  return Ordinal::from_terms(t);
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(O("w^3*2").terms(), (std::vector<Term>{{3, 2}}));
  EXPECT_EQ(O("w+w").terms(), (std::vector<Term>{{1, 2}}));
  EXPECT_EQ(O("w*2+w^2").terms(), (std::vector<Term>{{2, 1}}));
  EXPECT_TRUE(O("0").is_zero());
  EXPECT_EQ(O(" w ^ 2 * 3 + 4 "), Ordinal::from_terms({{2, 3}, {0, 4}}));
  EXPECT_EQ(O("3+w"), O("w"));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "w^", "w*0", "w+", "x", "w^2*", "2w", "+w", "w^-1"}) {
    EXPECT_THROW(parse(bad), SyntaxError) << bad;
  }
  try {
    parse("w+?");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format(Ordinal::from_terms({{3, 1}, {0, 5}})), "w^3+5");
  EXPECT_EQ(format(Ordinal()), "0");
  EXPECT_EQ(format(Ordinal::from_terms({{2, 3}, {1, 1}})), "w^2*3+w");
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Ordinal a = random_ordinal(rng);
    ASSERT_EQ(parse(format(a)), a) << format(a);
  }
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(add(O("w+1"), O("w^2")), O("w^2"));
  EXPECT_EQ(format(add(O("w^2"), O("w*3"))), "w^2+w*3");
  EXPECT_EQ(compare(O("w^3"), O("w^2*9")), Cmp::GT);
  EXPECT_EQ(compare(O("w+2"), O("w+2")), Cmp::EQ);
  EXPECT_EQ(add(O("w^2*2+w"), O("w^2+5")), O("w^2*3+5"));
}

TEST(Arithmetic, AssociativeAndOrdered) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
    // compare against the digit vector order
    Cmp want = digits(a, 7) < digits(b, 7) ? Cmp::LT : digits(a, 7) == digits(b, 7) ? Cmp::EQ : Cmp::GT;
    ASSERT_EQ(compare(a, b), want);
    // a <= a + b, and b <= a + b
    ASSERT_NE(compare(add(a, b), a), Cmp::LT);
    ASSERT_NE(compare(add(a, b), b), Cmp::LT);
    if (a <= b) ASSERT_EQ(add(a, left_sub(a, b)), b);
  }
}

TEST(Arithmetic, OverflowChecked) {
  Ordinal big = Ordinal::from_terms({{1, std::numeric_limits<Nat>::max()}});
  EXPECT_THROW(add(big, O("w")), Overflow);
}

TEST(Rank, Examples) {
  EXPECT_EQ(cb_rank(O("w^3+w^2*4")), 2u);
  EXPECT_EQ(n_of(O("w^3+w^2*4")), 4u);
  EXPECT_EQ(cb_rank(O("w^3*2")), 3u);
  EXPECT_EQ(n_of(O("w^3*2")), 2u);
  EXPECT_EQ(cb_rank(O("7")), 0u);
  EXPECT_EQ(n_of(O("7")), 7u);
  EXPECT_THROW(cb_rank(Ordinal()), ZeroOrdinal);
  EXPECT_THROW(tree_leq(Ordinal(), O("w")), ZeroOrdinal);
}

TEST(TreeOrder, Examples) {
  EXPECT_TRUE(tree_leq(O("w"), O("w^2")));
  EXPECT_FALSE(tree_leq(O("w"), O("w*2")));
  EXPECT_TRUE(tree_leq(O("w+1"), O("w^2")));
  EXPECT_EQ(cover(O("w^2+w")), O("w^2*2"));
  EXPECT_EQ(cover(O("5")), O("w"));
  EXPECT_EQ(cover(O("w^3")), O("w^4"));
}

TEST(TreeOrder, BruteForceAndAxioms) {
  Window w{O("w^3*2"), 4};
  auto v = enumerate(w);
  ASSERT_EQ(v.size(), 249u);
  for (const auto& a : v)
    for (const auto& b : v) ASSERT_EQ(tree_leq(b, a), brute_tree_leq(b, a)) << format(b) << " " << format(a);
  for (const auto& b : v) {
    std::vector<Ordinal> up;
    for (const auto& a : v)
      if (tree_leq(b, a)) up.push_back(a);
    // the points above b form a chain
    for (const auto& x : up)
      for (const auto& y : up) ASSERT_TRUE(tree_leq(x, y) || tree_leq(y, x));
  }
  for (const auto& a : v)
    for (const auto& b : v) {
      if (tree_leq(a, b) && tree_leq(b, a)) ASSERT_EQ(a, b);
      if (!tree_leq(a, b)) continue;
      ASSERT_LE(a, b);
      for (const auto& c : v)
        if (tree_leq(b, c)) ASSERT_TRUE(tree_leq(a, c));
    }
}

TEST(TreeOrder, CoverIsLeastStrictUpperBound) {
  Window w{O("w^4"), 3};
  auto v = enumerate(w);
  for (const auto& b : v) {
    std::optional<Ordinal> least;
    for (const auto& a : v)
      if (a != b && tree_leq(b, a) && (!least || a < *least)) least = a;
    Ordinal c = cover(b);
    if (w.contains(c)) {
      ASSERT_TRUE(least.has_value());
      ASSERT_EQ(*least, c) << format(b);
    }
    for (const auto& a : v)
      if (a != b && tree_leq(b, a) && cb_rank(a) == cb_rank(b) + 1) ASSERT_EQ(cover(b), a);
  }
}

TEST(Fans, Examples) {
  EXPECT_EQ(subfan(O("w^2"), 3), (std::vector<Ordinal>{O("w"), O("w*2"), O("w*3")}));
  EXPECT_EQ(subfan(O("w^3*2"), 2), (std::vector<Ordinal>{O("w^3+w^2"), O("w^3+w^2*2")}));
  EXPECT_EQ(fan_of(O("w*2"), 2), (std::vector<Ordinal>{O("w"), O("w*2")}));
  EXPECT_THROW(subfan(O("w+3"), 2), RankZero);
  for (const auto& x : subfan(O("w^3+w^2*2"), 5)) EXPECT_EQ(cover(x), O("w^3+w^2*2"));
}

TEST(Components, Examples) {
  Ordinal d = O("w^3*2");
  EXPECT_EQ(cnf_cut(d, O("w^3")), 1u);
  EXPECT_EQ(cnf_cut(d, O("w^3+5")), 2u);
  EXPECT_EQ(k_delta(d), 2u);
  Component c = component(d, 2);
  EXPECT_EQ(c.lo, O("w^3"));
  EXPECT_EQ(c.hi, d);
  EXPECT_FALSE(c.closed);
  EXPECT_THROW(component(d, 3), OutOfRange);
  EXPECT_EQ(k_delta(O("w^3+w^2*2+1")), 4u);
}

TEST(Components, Partition) {
  for (const char* d : {"w^3*2", "w^3+w^2*2", "w^2*3+w+2"}) {
    Ordinal delta = O(d);
    for (Nat c = 1; c <= 3; ++c)
      for (const auto& a : enumerate(Window{delta, c})) {
        int hits = 0;
        for (Nat i = 1; i <= k_delta(delta); ++i) {
          Component cc = component(delta, i);
          bool in = cc.lo < a && (cc.closed ? a <= cc.hi : a < cc.hi);
          hits += in;
          if (in) ASSERT_EQ(cnf_cut(delta, a), i);
        }
        ASSERT_EQ(hits, 1) << format(a);
      }
  }
}

TEST(Window, Enumeration) {
  EXPECT_EQ(enumerate(Window{O("w*2"), 2}), (std::vector<Ordinal>{O("1"), O("2"), O("w"), O("w+1"), O("w+2")}));
  EXPECT_EQ(enumerate(Window{O("w"), 3}), (std::vector<Ordinal>{O("1"), O("2"), O("3")}));
  EXPECT_EQ(enumerate(Window{O("w^3*2"), 1}).size(), 15u);
  for (Nat c = 1; c <= 6; ++c) {
    Window w{O("w^3*2"), c};
    auto v = enumerate(w);
    EXPECT_EQ(v.size(), 2 * (c + 1) * (c + 1) * (c + 1) - 1);
    EXPECT_EQ(window_size(w), v.size());
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
  }
}

TEST(Layers, Examples) {
  Ordinal d = O("w^3*2");
  EXPECT_EQ(layer_members(d, {1, 3}, Window{d, 4}), (std::vector<Ordinal>{O("w^3")}));
  EXPECT_EQ(layer_members(d, {2, 2}, Window{d, 3}),
            (std::vector<Ordinal>{O("w^3+w^2"), O("w^3+w^2*2"), O("w^3+w^2*3")}));
  EXPECT_EQ(layer_members(d, {1, 0}, Window{d, 1}),
            (std::vector<Ordinal>{O("1"), O("w+1"), O("w^2+1"), O("w^2+w+1")}));
  EXPECT_THROW(layer_members(d, {3, 0}, Window{d, 2}), OutOfRange);
}

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "ordram/errors.hpp"
#include "ordram/clause_graph.hpp"
#include "ordram/colouring.hpp"

using namespace ordram;

namespace {

Ordinal O(const char* s) { return parse(s); }

std::string replace_line(std::string text, const std::string& from, const std::string& to) {
  auto p = text.find(from);
  EXPECT_NE(p, std::string::npos);
  auto e = text.find('\n', p);
  return text.replace(p, e - p, to);
}

}  // namespace

TEST(Normal, ConstantColouring) {
  Ordinal d = O("w^3*2");
  auto res = check_normal(constant_colouring(0), d, Window{d, 3});
  EXPECT_TRUE(res.ok);
  EXPECT_FALSE(res.desc.empty());
  for (const auto& [k, v] : res.desc) EXPECT_EQ(v, 0u);
  EXPECT_GT(res.pairs_checked, 0u);
}

TEST(Normal, TableViolation) {
  Ordinal d = O("w^2+1");
  TableColouring t(enumerate(Window{d, 2}), 2);
  t.set(O("w"), O("w^2"), 0);
  t.set(O("w*2"), O("w^2"), 1);
  auto res = check_normal(t.as_pair_colouring(), d, t.vertices());
  EXPECT_FALSE(res.ok);
  ASSERT_TRUE(res.violation);
  auto [p, q] = *res.violation;
  EXPECT_NE(t.colour(p.first, p.second), t.colour(q.first, q.second));
  EXPECT_TRUE(tree_leq(p.first, p.second) && tree_leq(q.first, q.second));
}

TEST(Normal, Idempotent) {
  ClauseGraph g = standard_graph();
  Window w{g.delta, 3};
  auto first = check_normal(as_colouring(g), g.delta, w);
  ASSERT_TRUE(first.ok);
  DescTable table = first.desc;
  Ordinal d = g.delta;
  // recolour tree-related pairs straight from the table
  PairColouring from_table(
      [table, d](const Ordinal& a, const Ordinal& b) -> Nat {
        if (!tree_leq(a, b)) return 0;
        return table.at({cnf_cut(d, b), cb_rank(b), cb_rank(a)});
      },
      2);
  auto again = check_normal(from_table, d, w);
  EXPECT_TRUE(again.ok);
  EXPECT_EQ(again.desc, table);
}

TEST(RGood, Examples) {
  Ordinal d = O("w^2+1");
  Window w{d, 4};
  EXPECT_TRUE(check_r_good([](const Ordinal&) -> Nat { return 0; }, d, w, 0).ok);

  auto parity = check_r_good([](const Ordinal& a) -> Nat { return n_of(a) % 2; }, d, w, 0);
  EXPECT_FALSE(parity.ok);
  ASSERT_TRUE(parity.failure);
  // already fails on the fan of w
  EXPECT_EQ(parity.failure->theta, O("w"));
  EXPECT_EQ(parity.failure->level, 0u);

  auto small = check_r_good([](const Ordinal& a) -> Nat { return n_of(a) <= 2 ? 1 : 0; }, d, w, 2);
  EXPECT_TRUE(small.ok);
  EXPECT_EQ(small.assignments.at({O("w^2"), 0}), 0u);
  EXPECT_EQ(small.assignments.at({O("w^2"), 1}), 0u);
  EXPECT_FALSE(check_r_good([](const Ordinal& a) -> Nat { return n_of(a) <= 2 ? 1 : 0; }, d, w, 1).ok);
}

TEST(Canonical, ConstantColouring) {
  Ordinal d = O("w^3*2");
  auto rep = check_canonical(constant_colouring(0), d, Window{d, 3}, 2);
  EXPECT_TRUE(rep.ok);
  EXPECT_FALSE(rep.dom.empty());
  for (const auto& [k, v] : rep.dom) {
    EXPECT_EQ(v, 0u);
    EXPECT_NE(std::get<0>(k), std::get<2>(k));
  }
}

TEST(Canonical, ThinnedMutantFails) {
  std::string text =
      replace_line(standard_graph_text(), "EDGE (1,3)->(2,0):", "EDGE (1,3)->(2,0): m' % 2 == 0");
  ClauseGraph g = parse_graph(text);
  auto rep = extract_tables(g, Window{g.delta, 4}, 3);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.uniformly_good);
  bool found = false;
  for (const auto& f : rep.failures) found |= f.alpha == O("w^3") && f.i2 == 2 && f.l == 0;
  EXPECT_TRUE(found);
}

TEST(Scarcity, Examples) {
  DescTable desc{{{1, 3, 0}, 1}, {{1, 3, 1}, 1}, {{1, 3, 2}, 0}};
  auto v = scarcity_check(desc, {});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].item, 1);

  DomTable dom{{{1, 0, 2, 1}, 1}, {{1, 1, 2, 1}, 1}};
  auto w = scarcity_check({}, dom);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].item, 3);

  DomTable dom2{{{1, 0, 2, 0}, 1}, {{1, 0, 2, 1}, 1}};
  auto x = scarcity_check({}, dom2);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0].item, 2);

  EXPECT_TRUE(scarcity_check({{{1, 2, 1}, 1}, {{1, 2, 0}, 0}}, {{{2, 0, 1, 0}, 1}}).empty());
}

TEST(Serialization, TablesRoundTrip) {
  DescTable desc{{{1, 2, 1}, 1}, {{2, 3, 0}, 0}};
  DomTable dom{{{1, 3, 2, 0}, 1}, {{2, 1, 1, 1}, 0}};
  std::stringstream s;
  write_desc(s, desc);
  write_dom(s, dom);
  s << "# comment\n\n";
  DescTable d2;
  DomTable m2;
  read_tables(s, d2, m2);
  EXPECT_EQ(d2, desc);
  EXPECT_EQ(m2, dom);
  std::stringstream bad("desc 1 2\n");
  EXPECT_THROW(read_tables(bad, d2, m2), FormatError);
}

TEST(Serialization, TableColouringRoundTrip) {
  auto t = TableColouring::random(enumerate(Window{O("w^2"), 2}), 3, 42);
  std::stringstream s;
  t.write(s);
  auto u = TableColouring::parse(s, 0);
  EXPECT_EQ(u.vertices(), t.vertices());
  EXPECT_EQ(u.n_colours(), 3u);
  for (std::size_t i = 0; i < t.vertices().size(); ++i)
    for (std::size_t j = i + 1; j < t.vertices().size(); ++j) ASSERT_EQ(u.colour(i, j), t.colour(i, j));

  std::stringstream partial("colours 2\npair 1 2 0\npair 1 w 1\n");
  EXPECT_THROW(TableColouring::parse(partial, 2), FormatError);
  std::stringstream ok("colours 2\npair 1 2 0\npair 1 w 1\npair 2 w 1\n");
  auto v = TableColouring::parse(ok, 2);
  EXPECT_EQ(v.colour(O("2"), O("w")), 1u);
  EXPECT_EQ(v.colour(O("w"), O("1")), 1u);
}

TEST(Serialization, RandomIsReproducible) {
  auto v = enumerate(Window{O("w^2"), 3});
  auto a = TableColouring::random(v, 2, 9), b = TableColouring::random(v, 2, 9), c = TableColouring::random(v, 2, 10);
  bool differs = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      ASSERT_EQ(a.colour(i, j), b.colour(i, j));
      differs |= a.colour(i, j) != c.colour(i, j);
    }
  EXPECT_TRUE(differs);
}

#include "ordram/canonize.hpp"

#include <algorithm>
#include <numeric>

#include "ordram/structure.hpp"

namespace ordram {

TruncatedTree::TruncatedTree(Nat k, Nat width) : k_(k), width_(width) {
  if (k == 0 || width == 0) throw OutOfRange("truncated tree needs k >= 1 and W >= 1");
  std::vector<Ordinal> all;
  std::vector<Ordinal> frontier{Ordinal::omega_pow(k)};
  all.push_back(frontier.front());
  while (!frontier.empty()) {
    Ordinal x = std::move(frontier.back());
    frontier.pop_back();
    if (cb_rank(x) == 0) continue;
    for (auto& ch : subfan(x, width)) {
      all.push_back(ch);
      frontier.push_back(std::move(ch));
    }
  }
  std::sort(all.begin(), all.end());
  nodes_ = std::move(all);
  const std::size_t n = nodes_.size();
  rank_.resize(n);
  parent_.assign(n, n - 1);
  children_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) rank_[i] = cb_rank(nodes_[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t p = index_of(cover(nodes_[i]));
    parent_[i] = p;
    children_[p].push_back(i);  // increasing, so fan order
  }
}

std::size_t TruncatedTree::index_of(const Ordinal& a) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), a);
  if (it == nodes_.end() || !(*it == a)) throw OutOfUniverse("not a node of the truncated tree: " + format(a));
  return static_cast<std::size_t>(it - nodes_.begin());
}

TableColouring random_tree_colouring(const TruncatedTree& tree, Nat n_colours, std::uint64_t seed) {
  return TableColouring::random(tree.nodes(), n_colours, seed);
}

namespace {

struct Search {
  const TruncatedTree& tree;
  Nat k;
  Nat w;
  Nat r;
  // anc[i * (k+1) + j]: colour between node i and its ancestor of rank j
  std::vector<Nat> anc;
  std::vector<std::size_t> by_rank;  // nodes ordered by rank, low first
  std::vector<char> keep;

  Search(const TruncatedTree& t, const TableColouring& c, Nat w_, Nat r_) : tree(t), k(t.k()), w(w_), r(r_) {
    const std::size_t n = t.size();
    anc.assign(n * (k + 1), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = i; p != t.root();) {
        p = t.parent(p);
        anc[i * (k + 1) + t.rank(p)] = c.colour(i, p);
      }
    by_rank.resize(n);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](std::size_t a, std::size_t b) { return t.rank(a) < t.rank(b); });
    keep.assign(n, 0);
  }

  // table[j * (k+1) + l]
  Nat root_children(const std::vector<Nat>& table) {
    for (std::size_t i : by_rank) {
      const Nat l = tree.rank(i);
      bool ok = true;
      for (std::size_t p = i; ok && p != tree.root();) {
        p = tree.parent(p);
        const Nat j = tree.rank(p);
        ok = anc[i * (k + 1) + j] == table[j * (k + 1) + l];
      }
      if (ok && l > 0) {
        const auto& ch = tree.children(i);
        Nat kept = 0;
        for (std::size_t x : ch) kept += keep[x];
        for (Nat q = 0; q < r && q < ch.size(); ++q) ok = ok && keep[ch[q]];
        if (i != tree.root()) ok = ok && kept >= w;
      }
      keep[i] = ok;
    }
    Nat kept = 0;
    for (std::size_t x : tree.children(tree.root())) kept += keep[x];
    return kept;
  }
};

}  // namespace

CanonizeResult canonize_truncated(const TruncatedTree& tree, const TableColouring& c, Nat w, Nat r) {
  if (c.vertices() != tree.nodes()) throw OutOfUniverse("colouring is not on the truncated tree");
  if (w == 0) throw OutOfRange("target width must be positive");
  if (r > w) throw OutOfRange("the skeleton prefix r cannot exceed the target width");
  const Nat k = tree.k();
  const Nat nc = c.n_colours();
  Search s(tree, c, w, r);

  // entries (j, l) with l < j <= k
  std::vector<std::pair<Nat, Nat>> entries;
  for (Nat j = 1; j <= k; ++j)
    for (Nat l = 0; l < j; ++l) entries.emplace_back(j, l);
  const std::size_t E = entries.size();
  double total = 1;
  for (std::size_t e = 0; e < E; ++e) total *= static_cast<double>(nc);
  if (total > 2e6) throw OutOfRange("too many desc tables to search");

  // majority colour per entry
  std::vector<Nat> major(E, 0);
  for (std::size_t e = 0; e < E; ++e) {
    auto [j, l] = entries[e];
    std::vector<std::size_t> count(nc, 0);
    for (std::size_t i = 0; i < tree.size(); ++i)
      if (tree.rank(i) == l && i != tree.root()) ++count[s.anc[i * (k + 1) + j]];
    major[e] = static_cast<Nat>(std::max_element(count.begin(), count.end()) - count.begin());
  }

  // every table as offsets from the majority, nearest first
  std::vector<std::vector<Nat>> order;
  std::vector<Nat> digits(E, 0);
  for (;;) {
    order.push_back(digits);
    std::size_t e = 0;
    while (e < E && ++digits[e] == nc) digits[e++] = 0;
    if (e == E) break;
  }
  auto dist = [](const std::vector<Nat>& d) {
    return std::count_if(d.begin(), d.end(), [](Nat x) { return x != 0; });
  };
  auto colour_of = [&](const std::vector<Nat>& d, std::size_t e) { return (major[e] + d[e]) % nc; };
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    auto da = dist(a), db = dist(b);
    if (da != db) return da < db;
    for (std::size_t e = 0; e < E; ++e) {
      Nat ca = colour_of(a, e), cb = colour_of(b, e);
      if (ca != cb) return ca < cb;
    }
    return false;
  });

  std::vector<Nat> table((k + 1) * (k + 1), 0);
  DescTable best;
  Nat best_children = 0;
  std::size_t tried = 0;
  for (const auto& d : order) {
    ++tried;
    DescTable dt;
    for (std::size_t e = 0; e < E; ++e) {
      auto [j, l] = entries[e];
      table[j * (k + 1) + l] = colour_of(d, e);
      dt[{1, j, l}] = colour_of(d, e);
    }
    Nat kept = s.root_children(table);
    if (tried == 1 || kept > best_children) {
      best = dt;
      best_children = kept;
    }
    if (!s.keep[tree.root()] || kept < w) continue;

    CanonizeResult res;
    res.tables_tried = tried;
    TruncatedSkeleton& sk = res.skeleton;
    sk.k = k;
    sk.desc = std::move(dt);
    // kept nodes whose ancestors are all kept; walk top down
    std::vector<char> in(tree.size(), 0);
    std::vector<Ordinal> relabel(tree.size());
    in[tree.root()] = 1;
    relabel[tree.root()] = tree.node(tree.root());
    sk.keep_width = w;
    Nat least = ~Nat{0};
    for (auto it = s.by_rank.rbegin(); it != s.by_rank.rend(); ++it) {
      std::size_t i = *it;
      if (!in[i] || tree.rank(i) == 0) continue;
      Nat pos = 0;
      for (std::size_t x : tree.children(i))
        if (s.keep[x]) {
          in[x] = 1;
          relabel[x] = subfan_element(relabel[i], ++pos);
        }
      least = std::min(least, pos);
    }
    sk.keep_width = least;
    for (std::size_t i = 0; i < tree.size(); ++i)
      if (in[i]) {
        sk.kept.push_back(tree.node(i));
        sk.relabeled.push_back(relabel[i]);
      }
    return res;
  }
  throw WidthExhausted("no desc table keeps width " + std::to_string(w) + " (best keeps " +
                           std::to_string(best_children) + " children at the root)",
                       best, best_children, tried);
}

SkeletonCheck verify_skeleton(const TruncatedTree& tree, const TableColouring& c, const TruncatedSkeleton& s,
                              Nat r) {
  auto fail = [](std::string m) { return SkeletonCheck{false, std::move(m)}; };
  const auto& kept = s.kept;
  if (kept.empty() || !(kept.back() == tree.node(tree.root()))) return fail("root not kept");
  if (kept.size() != s.relabeled.size()) return fail("relabeling has the wrong size");
  if (!std::is_sorted(kept.begin(), kept.end())) return fail("kept nodes out of order");
  auto is_kept = [&](const Ordinal& a) { return std::binary_search(kept.begin(), kept.end(), a); };
  for (std::size_t i = 0; i + 1 < kept.size(); ++i)
    if (!is_kept(cover(kept[i]))) return fail("parent of " + format(kept[i]) + " dropped");
  for (const auto& a : kept) {
    std::size_t i = tree.index_of(a);
    if (tree.rank(i) == 0) continue;
    const auto& ch = tree.children(i);
    Nat n = 0;
    for (std::size_t x : ch) n += is_kept(tree.node(x));
    if (n < s.keep_width) return fail("node " + format(a) + " keeps too few children");
    for (Nat q = 0; q < r && q < ch.size(); ++q)
      if (!is_kept(tree.node(ch[q]))) return fail("node " + format(a) + " lost a leading child");
  }
  // relabeled copy: strictly increasing, inside the canonical tree, tree order both ways
  const auto& rl = s.relabeled;
  for (std::size_t i = 1; i < rl.size(); ++i)
    if (!(rl[i - 1] < rl[i])) return fail("relabeling is not order preserving");
  if (!(rl.back() == Ordinal::omega_pow(s.k)) || s.k != tree.k()) return fail("relabeled root is not w^k");
  for (std::size_t i = 0; i < rl.size(); ++i) {
    if (!tree_leq(rl[i], rl.back())) return fail("relabeled point " + format(rl[i]) + " is off the tree");
    if (cb_rank(rl[i]) != cb_rank(kept[i])) return fail("rank changed at " + format(kept[i]));
  }
  for (std::size_t i = 0; i < rl.size(); ++i) {
    for (Ordinal up = cover(kept[i]); up <= kept.back(); up = cover(up)) {
      auto it = std::lower_bound(kept.begin(), kept.end(), up);
      if (it == kept.end() || !(*it == up)) continue;
      if (!tree_leq(rl[i], rl[it - kept.begin()])) return fail("tree order lost at " + format(kept[i]));
    }
    for (Ordinal up = cover(rl[i]); up <= rl.back(); up = cover(up)) {
      auto it = std::lower_bound(rl.begin(), rl.end(), up);
      if (it == rl.end() || !(*it == up)) continue;
      if (!tree_leq(kept[i], kept[it - rl.begin()])) return fail("tree order gained at " + format(kept[i]));
    }
  }
  PairColouring moved(
      [&](const Ordinal& a, const Ordinal& b) {
        auto ia = std::lower_bound(rl.begin(), rl.end(), a) - rl.begin();
        auto ib = std::lower_bound(rl.begin(), rl.end(), b) - rl.begin();
        return c.colour(kept[ia], kept[ib]);
      },
      c.n_colours());
  Ordinal delta = add(Ordinal::omega_pow(s.k), Ordinal::finite(1));
  NormalResult nr = check_normal(moved, delta, rl);
  if (!nr.ok) return fail("relabeled colouring is not normal");
  for (const auto& [key, col] : nr.desc) {
    auto it = s.desc.find(key);
    if (it == s.desc.end() || it->second != col) return fail("desc table does not match the colouring");
  }
  return {};
}

}  // namespace ordram

#include "ordram/fsets.hpp"

#include <algorithm>

#include "ordram/errors.hpp"

namespace ordram {

bool in_level(const Ordinal& alpha, Nat n, const Ordinal& beta) {
  if (beta.is_zero()) return false;
  return cb_rank(beta) == n && tree_leq(beta, alpha);
}

Nat f_level(const Ordinal& root, const Ordinal& beta) {
  if (beta == root) return kInfiniteLevel;
  if (!tree_leq(beta, root)) throw OutOfRange("f_level: point is not below the root");
  Nat least = n_of(beta);
  Ordinal cur = cover(beta);
  while (!(cur == root)) {
    least = std::min(least, n_of(cur));
    cur = cover(cur);
  }
  return least - 1;
}

bool f_member(const FSetSpec& spec, const Ordinal& beta) {
  if (beta.is_zero()) throw ZeroOrdinal();
  if (spec.level > cb_rank(spec.root)) throw OutOfRange("F-set level exceeds the root rank");
  if (!in_level(spec.root, spec.level, beta)) return false;
  return f_level(spec.root, beta) >= spec.r;
}

std::vector<Ordinal> f_enumerate(const FSetSpec& spec, const Window& w) {
  std::vector<Ordinal> out;
  for (auto& b : enumerate(w))
    if (f_member(spec, b)) out.push_back(std::move(b));
  return out;
}

namespace {

void box_rec(const Ordinal& base, Nat top, Nat level, Nat bound, Nat j, std::vector<Term>& digits,
             std::vector<Ordinal>& out) {
  // j counts down from top-1 to level
  Nat lo = j == level ? 1 : 0;
  for (Nat d = lo; d <= bound; ++d) {
    if (d > 0) digits.push_back({j, d});
    if (j == level) {
      out.push_back(add(base, Ordinal::from_terms(digits)));
    } else {
      box_rec(base, top, level, bound, j - 1, digits, out);
    }
    if (d > 0) digits.pop_back();
  }
}

}  // namespace

std::vector<Ordinal> level_box(const Ordinal& root, Nat level, Nat bound) {
  const Nat c = cb_rank(root);
  if (level > c) throw OutOfRange("level exceeds the root rank");
  if (level == c) return {root};
  std::vector<Ordinal> out;
  std::vector<Term> digits;
  box_rec(parent_base(root), c, level, bound, c - 1, digits, out);
  return out;
}

ExplicitSet make_explicit(std::vector<Ordinal> members, Window w) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members)
    if (!w.contains(m)) throw OutOfRange("explicit set member outside its window: " + format(m));
  return {std::move(members), std::move(w)};
}

bool subset_contains(const SubsetSpec& a, const Ordinal& beta) {
  if (const auto* e = std::get_if<ExplicitSet>(&a))
    return std::binary_search(e->members.begin(), e->members.end(), beta);
  return std::get<PredicateSet>(a).pred.eval(beta);
}

Int subset_max_constant(const SubsetSpec& a) {
  if (const auto* p = std::get_if<PredicateSet>(&a)) return p->pred.max_constant();
  return 0;
}

namespace {

// f_level of every candidate outside A determines the least witness
void tally(const Ordinal& root, const Ordinal& beta, bool inside, Nat r_max, LargeResult& res) {
  if (inside) return;
  Nat fl = f_level(root, beta);
  Nat top = std::min(fl, r_max);
  for (Nat r = 0; r <= top; ++r)
    if (!res.counterexample_by_r[r]) res.counterexample_by_r[r] = beta;
}

}  // namespace

LargeResult large_decide(const Ordinal& root, Nat level, const SubsetSpec& a, Nat r_max, Nat bound) {
  if (root.is_zero()) throw ZeroOrdinal();
  if (level > cb_rank(root)) throw OutOfRange("level exceeds the root rank");
  LargeResult res;
  res.counterexample_by_r.assign(r_max + 1, std::nullopt);
  if (const auto* e = std::get_if<ExplicitSet>(&a)) {
    for (const auto& m : e->members)
      if (!in_level(root, level, m))
        throw NotASubsetOfLevel(format(m) + " is not in level " + std::to_string(level) + " below " +
                                format(root));
    res.window_relative = true;
    for (const auto& b : enumerate(e->window))
      if (in_level(root, level, b)) tally(root, b, subset_contains(a, b), r_max, res);
  } else {
    Int c = subset_max_constant(a);
    res.bound = bound ? bound : r_max + static_cast<Nat>(c) + 2;
    for (const auto& b : level_box(root, level, res.bound)) tally(root, b, subset_contains(a, b), r_max, res);
  }
  for (Nat r = 0; r <= r_max; ++r)
    if (!res.counterexample_by_r[r]) {
      res.witness_r = r;
      break;
    }
  res.is_large = res.witness_r.has_value();
  res.counterexample = res.counterexample_by_r[r_max];
  return res;
}

namespace {

SubsetSpec restrict_below(const SubsetSpec& a, const Ordinal& root, Nat level) {
  if (const auto* e = std::get_if<ExplicitSet>(&a)) {
    ExplicitSet out{{}, e->window};
    for (const auto& m : e->members)
      if (in_level(root, level, m)) out.members.push_back(m);
    return out;
  }
  return a;
}

struct StaircaseBuilder {
  const std::vector<Nat>& levels;
  const std::vector<SubsetSpec>& sets;
  Nat width;
  StaircaseOptions opts;
  std::vector<Ordinal> out;

  bool admissible(const Ordinal& beta, std::size_t j) const {
    if (!subset_contains(sets[j], beta)) return false;
    for (std::size_t i = 0; i < j; ++i) {
      SubsetSpec below = restrict_below(sets[i], beta, levels[i]);
      if (!large_decide(beta, levels[i], below, opts.r_max).is_large) return false;
    }
    return true;
  }

  void build(const Ordinal& root, std::size_t j) {
    std::vector<Ordinal> cand = level_box(root, levels[j], opts.coeff_bound);
    std::size_t pos = 0;
    for (Nat r = 0; r < width; ++r) {
      while (pos < cand.size() && !(f_level(root, cand[pos]) >= r && admissible(cand[pos], j))) ++pos;
      if (pos == cand.size())
        throw WindowExhausted("no admissible point for r=" + std::to_string(r) + " below " + format(root) +
                              " within coefficient bound " + std::to_string(opts.coeff_bound));
      Ordinal b = cand[pos++];
      out.push_back(b);
      if (j > 0) build(b, j - 1);
    }
  }
};

}  // namespace

std::vector<Ordinal> staircase(const Ordinal& theta, const std::vector<Nat>& levels,
                               const std::vector<SubsetSpec>& sets, Nat width,
                               const StaircaseOptions& opts) {
  if (levels.empty() || levels.size() != sets.size())
    throw OutOfRange("staircase needs one set per level");
  if (width == 0) throw OutOfRange("staircase width must be positive");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i] <= levels[i - 1]) throw OutOfRange("staircase levels must increase");
  if (cb_rank(theta) <= levels.back()) throw OutOfRange("ambient rank must exceed the top level");

  StaircaseOptions o = opts;
  if (o.coeff_bound == 0) {
    Int c = 0;
    for (const auto& s : sets) c = std::max(c, subset_max_constant(s));
    o.coeff_bound = width + static_cast<Nat>(c) + 3;
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    SubsetSpec s = restrict_below(sets[i], theta, levels[i]);
    if (!large_decide(theta, levels[i], s, o.r_max).is_large)
      throw NotLarge("set " + std::to_string(i + 1) + " is not large at level " + std::to_string(levels[i]));
  }
  StaircaseBuilder b{levels, sets, width, o, {}};
  b.build(theta, levels.size() - 1);
  std::sort(b.out.begin(), b.out.end());
  return b.out;
}

std::vector<Ordinal> canonical_truncation(Nat k, Nat width) {
  std::vector<Ordinal> out;
  std::vector<Ordinal> stack{Ordinal::omega_pow(k)};
  while (!stack.empty()) {
    Ordinal x = std::move(stack.back());
    stack.pop_back();
    if (cb_rank(x) == 0) continue;
    for (auto& c : subfan(x, width)) {
      out.push_back(c);
      stack.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool tree_isomorphic(const std::vector<Ordinal>& a, const std::vector<Ordinal>& b) {
  if (a.size() != b.size()) return false;
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end())) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j && tree_leq(a[i], a[j]) != tree_leq(b[i], b[j])) return false;
  return true;
}

}  // namespace ordram

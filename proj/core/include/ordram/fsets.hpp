#pragma once

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "ordram/constraint.hpp"
#include "ordram/ordinal.hpp"
#include "ordram/structure.hpp"

namespace ordram {

// F(root)^r_level
struct FSetSpec {
  Ordinal root;
  Nat r = 0;
  Nat level = 0;
};

inline constexpr Nat kInfiniteLevel = std::numeric_limits<Nat>::max();

// beta in T^{=n}(alpha)
bool in_level(const Ordinal& alpha, Nat n, const Ordinal& beta);

// Largest r with beta in F(root)^r_{cb(beta)}: one less than the least
// n-value on the cover chain from beta up to (excluding) root.  Infinite for
// beta == root.  Requires tree_leq(beta, root).
Nat f_level(const Ordinal& root, const Ordinal& beta);

bool f_member(const FSetSpec& spec, const Ordinal& beta);
std::vector<Ordinal> f_enumerate(const FSetSpec& spec, const Window& w);

// Members of T^{=level}(root) whose coordinates relative to the bottom of
// T(root) are all <= bound, increasing.
std::vector<Ordinal> level_box(const Ordinal& root, Nat level, Nat bound);

struct ExplicitSet {
  std::vector<Ordinal> members;  // sorted, no duplicates
  Window window;
};

struct PredicateSet {
  Predicate pred;
};

using SubsetSpec = std::variant<ExplicitSet, PredicateSet>;

ExplicitSet make_explicit(std::vector<Ordinal> members, Window w);
bool subset_contains(const SubsetSpec& a, const Ordinal& beta);
Int subset_max_constant(const SubsetSpec& a);

struct LargeResult {
  bool is_large = false;
  std::optional<Nat> witness_r;
  std::optional<Ordinal> counterexample;                   // for r = r_max
  std::vector<std::optional<Ordinal>> counterexample_by_r;  // index r
  Nat bound = 0;              // coefficient bound searched (predicate sets)
  bool window_relative = false;  // explicit sets are judged inside their window
};

// bound 0 selects r_max + max clause constant + 2
LargeResult large_decide(const Ordinal& root, Nat level, const SubsetSpec& a, Nat r_max,
                         Nat bound = 0);

struct StaircaseOptions {
  Nat r_max = 8;
  Nat coeff_bound = 0;  // 0 selects a bound from width and the set constants
};

// Finite truncation of the closed copy of w^k: the top level takes b_r, the
// least admissible point of F(theta)^r_{l_k} above b_{r-1}, and recurses
// below each b_r with the remaining levels.
std::vector<Ordinal> staircase(const Ordinal& theta, const std::vector<Nat>& levels,
                               const std::vector<SubsetSpec>& sets, Nat width,
                               const StaircaseOptions& opts = {});

// nodes of the canonical tree of w^k (root excluded) with every fan
// position <= width, increasing
std::vector<Ordinal> canonical_truncation(Nat k, Nat width);
// order-preserving map from a onto b preserves tree_leq both ways
bool tree_isomorphic(const std::vector<Ordinal>& a, const std::vector<Ordinal>& b);

}  // namespace ordram

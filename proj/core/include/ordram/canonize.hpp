#pragma once

#include <string>
#include <vector>

#include "ordram/colouring.hpp"
#include "ordram/errors.hpp"
#include "ordram/ordinal.hpp"

namespace ordram {

// The full fan tree of w^k with every subfan cut to its first W members.
class TruncatedTree {
 public:
  TruncatedTree(Nat k, Nat width);

  Nat k() const { return k_; }
  Nat width() const { return width_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t root() const { return nodes_.size() - 1; }

  const std::vector<Ordinal>& nodes() const { return nodes_; }  // increasing
  const Ordinal& node(std::size_t i) const { return nodes_[i]; }
  Nat rank(std::size_t i) const { return rank_[i]; }
  // parent index, root() for the root itself
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  std::size_t index_of(const Ordinal& a) const;

 private:
  Nat k_;
  Nat width_;
  std::vector<Ordinal> nodes_;
  std::vector<Nat> rank_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
};

struct TruncatedSkeleton {
  Nat k = 0;
  Nat keep_width = 0;  // least number of kept children over kept internal nodes
  std::vector<Ordinal> kept;  // original nodes, increasing, root included
  std::vector<Ordinal> relabeled;  // same order, mapped onto the canonical tree
  DescTable desc;
};

struct CanonizeResult {
  TruncatedSkeleton skeleton;
  std::size_t tables_tried = 0;
};

class WidthExhausted : public Error {
 public:
  WidthExhausted(const std::string& what, DescTable best, Nat best_root_children, std::size_t tried)
      : Error(what), best_(std::move(best)), best_root_children_(best_root_children), tried_(tried) {}
  const DescTable& best_table() const { return best_; }
  Nat best_root_children() const { return best_root_children_; }
  std::size_t tables_tried() const { return tried_; }

 private:
  DescTable best_;
  Nat best_root_children_;
  std::size_t tried_;
};

// Searches desc tables in order of distance from the majority table for one
// that keeps at least w children under every kept node, the first r of them
// among them.  Throws WidthExhausted when none does.
CanonizeResult canonize_truncated(const TruncatedTree& tree, const TableColouring& c, Nat w, Nat r);

TableColouring random_tree_colouring(const TruncatedTree& tree, Nat n_colours, std::uint64_t seed);

struct SkeletonCheck {
  bool ok = true;
  std::string message;
};

// structure, order/tree isomorphism with the canonical tree, and normality
// of the colouring carried over to the relabeled copy
SkeletonCheck verify_skeleton(const TruncatedTree& tree, const TableColouring& c,
                              const TruncatedSkeleton& s, Nat r);

}  // namespace ordram

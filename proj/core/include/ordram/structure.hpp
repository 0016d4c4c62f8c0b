#pragma once

#include <optional>
#include <vector>

#include "ordram/ordinal.hpp"

namespace ordram {

// Component i of delta is (lo, hi]; the last one is (lo, delta) and has
// hi == delta with closed == false.
struct Component {
  Ordinal lo;
  Ordinal hi;
  bool closed = true;
};

Nat k_delta(const Ordinal& delta);
// S_i, the i-th partial sum of the expanded normal form (S_0 = 0)
Ordinal partial_sum(const Ordinal& delta, Nat i);
Nat cnf_cut(const Ordinal& delta, const Ordinal& beta);
Component component(const Ordinal& delta, Nat i);

struct LayerId {
  Nat component = 1;
  Nat rank = 0;
  bool operator==(const LayerId&) const = default;
  auto operator<=>(const LayerId&) const = default;
};

// rank of sup CC(delta, i)
Nat component_top_rank(const Ordinal& delta, Nat i);
LayerId layer_of(const Ordinal& delta, const Ordinal& beta);
void validate_layer(const Ordinal& delta, LayerId id);

struct Window {
  Ordinal delta;
  Nat coeff_bound = 1;

  bool contains(const Ordinal& a) const;
};

std::vector<Ordinal> enumerate(const Window& w);
Nat window_size(const Window& w);
std::vector<Ordinal> layer_members(const Ordinal& delta, LayerId id, const Window& w);

}  // namespace ordram

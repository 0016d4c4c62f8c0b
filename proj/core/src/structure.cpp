#include "ordram/structure.hpp"

#include <algorithm>

#include "ordram/errors.hpp"

namespace ordram {

Nat k_delta(const Ordinal& delta) { return delta.norm(); }

Ordinal partial_sum(const Ordinal& delta, Nat i) {
  std::vector<Term> prefix;
  for (const auto& t : delta.terms()) {
    if (i <= t.coef) {
      if (i > 0) prefix.push_back({t.exp, i});
      return Ordinal::from_terms(std::move(prefix));
    }
    prefix.push_back(t);
    i -= t.coef;
  }
  if (i == 0) return delta;
  throw OutOfRange("component index exceeds k_delta");
}

Nat cnf_cut(const Ordinal& delta, const Ordinal& beta) {
  if (beta.is_zero()) throw OutOfRange("cnf_cut: beta must be positive");
  if (!(beta < delta)) throw OutOfRange("cnf_cut: beta must lie below delta");
  std::vector<Term> prefix;
  Nat base = 0;
  for (const auto& t : delta.terms()) {
    std::vector<Term> full = prefix;
    full.push_back(t);
    Ordinal full_sum = Ordinal::from_terms(full);
    if (beta <= full_sum) {
      Ordinal x = left_sub(Ordinal::from_terms(prefix), beta);
      Nat j = 1;
      if (x.lead_exp() == t.exp) {
        Nat a = x.terms().front().coef;
        j = x.size() == 1 ? a : a + 1;
      }
      return base + j;
    }
    prefix = std::move(full);
    base += t.coef;
  }
  throw OutOfRange("cnf_cut: beta must lie below delta");
}

Component component(const Ordinal& delta, Nat i) {
  const Nat k = k_delta(delta);
  if (i == 0 || i > k) throw OutOfRange("component index out of range");
  return {partial_sum(delta, i - 1), partial_sum(delta, i), i < k};
}

Nat component_top_rank(const Ordinal& delta, Nat i) {
  if (i == 0 || i > k_delta(delta)) throw OutOfRange("component index out of range");
  return cb_rank(partial_sum(delta, i));
}

LayerId layer_of(const Ordinal& delta, const Ordinal& beta) {
  return {cnf_cut(delta, beta), cb_rank(beta)};
}

void validate_layer(const Ordinal& delta, LayerId id) {
  if (id.component == 0 || id.component > k_delta(delta))
    throw OutOfRange("layer component out of range");
  if (id.rank > component_top_rank(delta, id.component)) throw OutOfRange("layer rank out of range");
}

bool Window::contains(const Ordinal& a) const {
  if (a.is_zero() || !(a < delta)) return false;
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [&](const Term& t) { return t.coef <= coeff_bound; });
}

namespace {

void enumerate_rec(const std::vector<Nat>& dmax, Nat C, std::size_t pos, bool below,
                   std::vector<Nat>& digits, std::vector<Ordinal>& out) {
  const std::size_t n = dmax.size();
  if (pos == n) {
    if (!below) return;
    std::vector<Term> t;
    for (std::size_t p = 0; p < n; ++p)
      if (digits[p] > 0) t.push_back({static_cast<Nat>(n - 1 - p), digits[p]});
    if (!t.empty()) out.push_back(Ordinal::from_terms(std::move(t)));
    return;
  }
  Nat hi = below ? C : std::min(C, dmax[pos]);
  for (Nat d = 0; d <= hi; ++d) {
    digits[pos] = d;
    enumerate_rec(dmax, C, pos + 1, below || d < dmax[pos], digits, out);
  }
}

}  // namespace

std::vector<Ordinal> enumerate(const Window& w) {
  std::vector<Ordinal> out;
  if (w.delta.is_zero()) return out;
  const Nat E = w.delta.lead_exp();
  std::vector<Nat> dmax(E + 1);
  for (Nat p = 0; p <= E; ++p) dmax[p] = w.delta.coef_at(E - p);
  std::vector<Nat> digits(E + 1, 0);
  enumerate_rec(dmax, w.coeff_bound, 0, false, digits, out);
  return out;
}

// Digit vectors over [0,C] that are lexicographically below delta's digit
// vector, minus the zero vector.
Nat window_size(const Window& w) {
  if (w.delta.is_zero()) return 0;
  const Nat E = w.delta.lead_exp();
  const Nat base = checked_add(w.coeff_bound, 1);
  Nat count = 0;
  for (Nat p = E + 1; p-- > 0;) {
    Nat d = w.delta.coef_at(p);
    Nat free = 1;
    for (Nat q = 0; q < p; ++q) free = checked_mul(free, base);
    count = checked_add(count, checked_mul(std::min(d, base), free));
    if (d > w.coeff_bound) break;
  }
  return count - 1;
}

std::vector<Ordinal> layer_members(const Ordinal& delta, LayerId id, const Window& w) {
  if (!(w.delta == delta)) throw OutOfRange("window ambient differs from delta");
  validate_layer(delta, id);
  std::vector<Ordinal> out;
  for (auto& a : enumerate(w))
    if (cb_rank(a) == id.rank && cnf_cut(delta, a) == id.component) out.push_back(std::move(a));
  return out;
}

}  // namespace ordram

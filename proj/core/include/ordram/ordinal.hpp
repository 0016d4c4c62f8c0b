#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ordram {

using Nat = std::uint64_t;

struct Term {
  Nat exp;
  Nat coef;
  bool operator==(const Term&) const = default;
};

// An ordinal below w^w in Cantor normal form.  Terms are kept with strictly
// decreasing exponents and positive coefficients, so equality is structural.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega_pow(Nat exp, Nat coef = 1);
  static Ordinal finite(Nat n);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // coefficient of w^e, 0 when absent
  Nat coef_at(Nat e) const;
  Nat lead_exp() const;
  // sum of all coefficients
  Nat norm() const;

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

enum class Cmp { LT, EQ, GT };

Ordinal parse(std::string_view text);
std::string format(const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

Ordinal add(const Ordinal& a, const Ordinal& b);
Cmp compare(const Ordinal& a, const Ordinal& b);

// The unique x with q + x = b.  Requires q <= b.
Ordinal left_sub(const Ordinal& q, const Ordinal& b);

Nat cb_rank(const Ordinal& a);
Nat n_of(const Ordinal& a);

bool tree_leq(const Ordinal& beta, const Ordinal& alpha);
Ordinal cover(const Ordinal& beta);

// alpha with its last coefficient lowered by one; alpha = parent_base(alpha) + w^cb(alpha)
Ordinal parent_base(const Ordinal& alpha);
Ordinal subfan_element(const Ordinal& alpha, Nat position);
std::vector<Ordinal> subfan(const Ordinal& alpha, Nat count);
std::vector<Ordinal> fan_of(const Ordinal& beta, Nat count);

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);

}  // namespace ordram

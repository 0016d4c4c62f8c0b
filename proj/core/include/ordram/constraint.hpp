#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/linear.hpp"
#include "ordram/ordinal.hpp"

namespace ordram {

// A coefficient variable: the coefficient of w^exp of the lower point, or of
// the higher point when primed.  k, l, m abbreviate c2, c1, c0.
struct VarRef {
  Nat exp = 0;
  bool primed = false;
  bool operator==(const VarRef&) const = default;
};

std::string var_name(VarRef v);

// Integer expression over coefficient variables: sums, differences,
// constant multiples and remainders by positive constants.
class Expr {
 public:
  enum class Kind { Const, Var, Add, Sub, Neg, Scale, Mod };

  static Expr constant(Int v);
  static Expr variable(VarRef v);
  static Expr binary(Kind k, Expr a, Expr b);
  static Expr negate(Expr a);
  static Expr scale(Int s, Expr a);
  static Expr mod(Expr a, Int m);

  Kind kind() const { return kind_; }
  Int value() const { return value_; }
  const std::vector<Expr>& children() const { return kids_; }
  bool is_constant() const;
  bool has_mod() const;
  Nat max_exp(bool primed) const;
  bool uses(bool primed) const;

  // lo/hi hold coefficients indexed by exponent; missing exponents read 0
  Int eval(const Int* lo, std::size_t nlo, const Int* hi, std::size_t nhi) const;
  std::optional<LinExpr> linearize(const std::function<LinExpr(VarRef)>& sub) const;
  std::string text() const;

 private:
  Kind kind_ = Kind::Const;
  Int value_ = 0;
  VarRef var_{};
  std::vector<Expr> kids_;
};

struct Comparison {
  Expr lhs;
  Rel rel = Rel::Lt;
  Expr rhs;

  bool eval(const Int* lo, std::size_t nlo, const Int* hi, std::size_t nhi) const {
    return rel_holds(lhs.eval(lo, nlo, hi, nhi) - rhs.eval(lo, nlo, hi, nhi), rel);
  }
  std::string text() const;
};

using ComparisonList = std::vector<Comparison>;

// "a < b <= c, d != e"; chained comparisons expand pairwise.  Empty text
// gives the empty (always true) list.
ComparisonList parse_comparisons(std::string_view text);
std::string format_comparisons(const ComparisonList& list);

bool eval_all(const ComparisonList& list, const Int* lo, std::size_t nlo, const Int* hi,
              std::size_t nhi);

// Disjunction of comparison lists over a single point (unprimed variables),
// written with '|' between conjunctions.
class Predicate {
 public:
  Predicate() = default;
  explicit Predicate(std::vector<ComparisonList> alts) : alts_(std::move(alts)) {}

  static Predicate parse(std::string_view text);
  std::string text() const;

  bool eval(const Ordinal& a) const;
  const std::vector<ComparisonList>& alternatives() const { return alts_; }
  // largest absolute integer constant appearing anywhere
  Int max_constant() const;
  Predicate complement() const;

 private:
  std::vector<ComparisonList> alts_;
};

// coefficients of a by exponent, padded to n entries
std::vector<Int> coefficient_vector(const Ordinal& a, std::size_t n);
Int max_abs_constant(const Expr& e);

}  // namespace ordram

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordram {

using Int = std::int64_t;

inline constexpr std::size_t kMaxVars = 16;

// c . x + k over at most kMaxVars integer variables
struct LinExpr {
  std::array<Int, kMaxVars> c{};
  Int k = 0;

  static LinExpr constant(Int v);
  static LinExpr var(std::size_t idx, Int coef = 1);

  bool is_constant() const;
  bool uses(std::size_t v) const { return c[v] != 0; }
  Int eval(const Int* vals) const;
  // value with variable x treated as 0
  Int eval_without(const Int* vals, std::size_t x) const;

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(Int s);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, Int s) { return a *= s; }
  bool operator==(const LinExpr&) const = default;
};

enum class Rel { Lt, Le, Eq, Ne, Gt, Ge };

const char* rel_text(Rel r);
bool rel_holds(Int v, Rel r);

// e rel 0
struct LinCon {
  LinExpr e;
  Rel rel;
  bool holds(const Int* vals) const { return rel_holds(e.eval(vals), rel); }
};

using Conj = std::vector<LinCon>;
using Dnf = std::vector<Conj>;

bool holds(const Conj& c, const Int* vals);
bool holds(const Dnf& d, const Int* vals);

LinCon make_con(const LinExpr& lhs, Rel rel, const LinExpr& rhs);
Dnf dnf_true();
Dnf dnf_false();
Dnf dnf_and(const Dnf& a, const Dnf& b);
Dnf dnf_or(Dnf a, const Dnf& b);
// drops constant-true constraints and constant-false conjunctions
Dnf simplify(Dnf d);
bool is_tautology(const Dnf& d);

std::string to_string(const LinExpr& e, const std::vector<std::string>& names);
std::string to_string(const Conj& c, const std::vector<std::string>& names);
std::string to_string(const Dnf& d, const std::vector<std::string>& names);

// Behaviour of a formula as one variable x tends to infinity with the
// others fixed.  Each surviving conjunction splits into constraints not
// mentioning x (which must hold) and constraints on x that are eventually
// true.
struct EventualConj {
  Conj residual;
  Conj tail;
};

std::vector<EventualConj> eventual(const Dnf& d, std::size_t x);
// residual predicates as a formula in the remaining variables
Dnf eventual_dnf(const std::vector<EventualConj>& ev);
// least x from which every tail constraint holds, for fixed other values
Int tail_threshold(const Conj& tail, std::size_t x, const Int* vals);

// Exact one-variable quantifiers with the other variables fixed in vals.
bool forall_from(const Dnf& d, std::size_t x, Int x0, Int* vals);
std::optional<Int> first_failure_from(const Dnf& d, std::size_t x, Int x0, Int* vals);
bool exists_from(const Dnf& d, std::size_t x, Int x0, Int* vals);

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

}  // namespace ordram

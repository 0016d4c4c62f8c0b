#include "ordram/linear.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ordram/errors.hpp"

namespace ordram {

LinExpr LinExpr::constant(Int v) {
  LinExpr e;
  e.k = v;
  return e;
}

LinExpr LinExpr::var(std::size_t idx, Int coef) {
  if (idx >= kMaxVars) throw OutOfRange("too many variables in a linear statement");
  LinExpr e;
  e.c[idx] = coef;
  return e;
}

bool LinExpr::is_constant() const {
  return std::all_of(c.begin(), c.end(), [](Int v) { return v == 0; });
}

Int LinExpr::eval(const Int* vals) const {
  Int s = k;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (c[i] != 0) s += c[i] * vals[i];
  return s;
}

Int LinExpr::eval_without(const Int* vals, std::size_t x) const {
  Int s = k;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (i != x && c[i] != 0) s += c[i] * vals[i];
  return s;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] += o.c[i];
  k += o.k;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  for (std::size_t i = 0; i < kMaxVars; ++i) c[i] -= o.c[i];
  k -= o.k;
  return *this;
}

LinExpr& LinExpr::operator*=(Int s) {
  for (auto& v : c) v *= s;
  k *= s;
  return *this;
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "?";
}

bool rel_holds(Int v, Rel r) {
  switch (r) {
    case Rel::Lt: return v < 0;
    case Rel::Le: return v <= 0;
    case Rel::Eq: return v == 0;
    case Rel::Ne: return v != 0;
    case Rel::Gt: return v > 0;
    case Rel::Ge: return v >= 0;
  }
  return false;
}

bool holds(const Conj& c, const Int* vals) {
  return std::all_of(c.begin(), c.end(), [&](const LinCon& l) { return l.holds(vals); });
}

bool holds(const Dnf& d, const Int* vals) {
  return std::any_of(d.begin(), d.end(), [&](const Conj& c) { return holds(c, vals); });
}

LinCon make_con(const LinExpr& lhs, Rel rel, const LinExpr& rhs) { return {lhs - rhs, rel}; }

Dnf dnf_true() { return Dnf{Conj{}}; }
Dnf dnf_false() { return Dnf{}; }

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Conj c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return simplify(std::move(out));
}

Dnf dnf_or(Dnf a, const Dnf& b) {
  a.insert(a.end(), b.begin(), b.end());
  return simplify(std::move(a));
}

Dnf simplify(Dnf d) {
  Dnf out;
  for (auto& c : d) {
    Conj kept;
    bool dead = false;
    for (auto& l : c) {
      if (l.e.is_constant()) {
        if (!rel_holds(l.e.k, l.rel)) {
          dead = true;
          break;
        }
        continue;
      }
      kept.push_back(l);
    }
    if (!dead) out.push_back(std::move(kept));
  }
  return out;
}

bool is_tautology(const Dnf& d) {
  return std::any_of(d.begin(), d.end(), [](const Conj& c) { return c.empty(); });
}

std::string to_string(const LinExpr& e, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    Int v = e.c[i];
    if (v == 0) continue;
    const std::string& n = i < names.size() ? names[i] : "x" + std::to_string(i);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    Int a = v < 0 ? -v : v;
    if (a != 1) os << a << '*';
    os << n;
    first = false;
  }
  if (first) {
    os << e.k;
  } else if (e.k != 0) {
    os << (e.k < 0 ? " - " : " + ") << (e.k < 0 ? -e.k : e.k);
  }
  return os.str();
}

std::string to_string(const Conj& c, const std::vector<std::string>& names) {
  if (c.empty()) return "true";
  std::string s;
  for (const auto& l : c) {
    if (!s.empty()) s += ", ";
    s += to_string(l.e, names) + ' ' + rel_text(l.rel) + " 0";
  }
  return s;
}

std::string to_string(const Dnf& d, const std::vector<std::string>& names) {
  if (d.empty()) return "false";
  std::string s;
  for (const auto& c : d) {
    if (!s.empty()) s += " | ";
    s += '(' + to_string(c, names) + ')';
  }
  return s;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

namespace {

// eventual truth of cx*x + r rel 0 as x grows, cx != 0
bool eventually_holds(Int cx, Rel rel) {
  switch (rel) {
    case Rel::Lt:
    case Rel::Le: return cx < 0;
    case Rel::Gt:
    case Rel::Ge: return cx > 0;
    case Rel::Eq: return false;
    case Rel::Ne: return true;
  }
  return false;
}

}  // namespace

std::vector<EventualConj> eventual(const Dnf& d, std::size_t x) {
  std::vector<EventualConj> out;
  for (const auto& c : d) {
    EventualConj ev;
    bool dead = false;
    for (const auto& l : c) {
      Int cx = l.e.c[x];
      if (cx == 0) {
        ev.residual.push_back(l);
      } else if (eventually_holds(cx, l.rel)) {
        ev.tail.push_back(l);
      } else {
        dead = true;
        break;
      }
    }
    if (!dead) out.push_back(std::move(ev));
  }
  return out;
}

Dnf eventual_dnf(const std::vector<EventualConj>& ev) {
  Dnf d;
  for (const auto& e : ev) d.push_back(e.residual);
  return simplify(std::move(d));
}

Int tail_threshold(const Conj& tail, std::size_t x, const Int* vals) {
  Int t = std::numeric_limits<Int>::min();
  for (const auto& l : tail) {
    Int cx = l.e.c[x];
    Int r = l.e.eval_without(vals, x);
    Int need = std::numeric_limits<Int>::min();
    switch (l.rel) {
      case Rel::Lt: need = floor_div(r, -cx) + 1; break;
      case Rel::Le: need = ceil_div(r, -cx); break;
      case Rel::Gt: need = floor_div(-r, cx) + 1; break;
      case Rel::Ge: need = ceil_div(-r, cx); break;
      case Rel::Ne:
        if (r % cx == 0) need = -r / cx + 1;
        break;
      case Rel::Eq: break;
    }
    t = std::max(t, need);
  }
  return t;
}

namespace {

// every truth change of d along x happens at or below the returned value
Int last_breakpoint(const Dnf& d, std::size_t x, const Int* vals) {
  Int m = std::numeric_limits<Int>::min();
  for (const auto& c : d)
    for (const auto& l : c) {
      Int cx = l.e.c[x];
      if (cx == 0) continue;
      Int r = l.e.eval_without(vals, x);
      m = std::max(m, ceil_div(-r, cx) + 1);
      m = std::max(m, floor_div(-r, cx) + 1);
    }
  return m;
}

constexpr Int kScanLimit = 1'000'000;

}  // namespace

std::optional<Int> first_failure_from(const Dnf& d, std::size_t x, Int x0, Int* vals) {
  Int saved = vals[x];
  Int hi = std::max(x0, last_breakpoint(d, x, vals));
  if (hi - x0 > kScanLimit) throw OutOfRange("one-variable scan range too large");
  std::optional<Int> fail;
  for (Int v = x0; v <= hi; ++v) {
    vals[x] = v;
    if (!holds(d, vals)) {
      fail = v;
      break;
    }
  }
  vals[x] = saved;
  return fail;
}

bool forall_from(const Dnf& d, std::size_t x, Int x0, Int* vals) {
  return !first_failure_from(d, x, x0, vals).has_value();
}

bool exists_from(const Dnf& d, std::size_t x, Int x0, Int* vals) {
  Int saved = vals[x];
  Int hi = std::max(x0, last_breakpoint(d, x, vals));
  if (hi - x0 > kScanLimit) throw OutOfRange("one-variable scan range too large");
  bool found = false;
  for (Int v = x0; v <= hi && !found; ++v) {
    vals[x] = v;
    found = holds(d, vals);
  }
  vals[x] = saved;
  return found;
}

}  // namespace ordram

#include "ordram/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "ordram/errors.hpp"

namespace ordram {

Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) throw Overflow("coefficient overflow in addition");
  return a + b;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a)
    throw Overflow("coefficient overflow in multiplication");
  return a * b;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coef == 0) throw FormatError("zero coefficient in term list");
    if (i > 0 && terms[i].exp >= terms[i - 1].exp)
      throw FormatError("exponents must be strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

Ordinal Ordinal::omega_pow(Nat exp, Nat coef) {
  Ordinal o;
  if (coef > 0) o.terms_.push_back({exp, coef});
  return o;
}

Ordinal Ordinal::finite(Nat n) { return omega_pow(0, n); }

Nat Ordinal::coef_at(Nat e) const {
  for (const auto& t : terms_) {
    if (t.exp == e) return t.coef;
    if (t.exp < e) break;
  }
  return 0;
}

Nat Ordinal::lead_exp() const {
  if (terms_.empty()) throw ZeroOrdinal();
  return terms_.front().exp;
}

Nat Ordinal::norm() const {
  Nat s = 0;
  for (const auto& t : terms_) s = checked_add(s, t.coef);
  return s;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].exp != y[i].exp) return x[i].exp <=> y[i].exp;
    if (x[i].coef != y[i].coef) return x[i].coef <=> y[i].coef;
  }
  return x.size() <=> y.size();
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Cmp::LT;
  if (c > 0) return Cmp::GT;
  return Cmp::EQ;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Nat e = b.terms().front().exp;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  Nat carry = 0;
  for (const auto& t : a.terms()) {
    if (t.exp > e) out.push_back(t);
    else if (t.exp == e) carry = t.coef;
    else break;
  }
  auto it = b.terms().begin();
  out.push_back({e, checked_add(carry, it->coef)});
  for (++it; it != b.terms().end(); ++it) out.push_back(*it);
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_sub(const Ordinal& q, const Ordinal& b) {
  if (b < q) throw OutOfRange("left_sub: subtrahend exceeds minuend");
  const auto& x = q.terms();
  const auto& y = b.terms();
  std::size_t p = 0;
  while (p < x.size() && p < y.size() && x[p] == y[p]) ++p;
  if (p == x.size()) return Ordinal::from_terms({y.begin() + p, y.end()});
  std::vector<Term> rest;
  if (y[p].exp > x[p].exp) {
    rest.assign(y.begin() + p, y.end());
  } else {
    // same exponent, larger coefficient
    rest.push_back({y[p].exp, y[p].coef - x[p].coef});
    rest.insert(rest.end(), y.begin() + p + 1, y.end());
  }
  return Ordinal::from_terms(std::move(rest));
}

Nat cb_rank(const Ordinal& a) {
  if (a.is_zero()) throw ZeroOrdinal();
  return a.terms().back().exp;
}

Nat n_of(const Ordinal& a) {
  if (a.is_zero()) throw ZeroOrdinal();
  return a.terms().back().coef;
}

bool tree_leq(const Ordinal& beta, const Ordinal& alpha) {
  if (beta.is_zero() || alpha.is_zero()) throw ZeroOrdinal();
  if (beta == alpha) return true;
  const Nat g = cb_rank(alpha);
  if (g <= cb_rank(beta)) return false;
  return add(beta, Ordinal::omega_pow(g)) == alpha;
}

Ordinal cover(const Ordinal& beta) {
  return add(beta, Ordinal::omega_pow(checked_add(cb_rank(beta), 1)));
}

Ordinal parent_base(const Ordinal& alpha) {
  if (alpha.is_zero()) throw ZeroOrdinal();
  std::vector<Term> t = alpha.terms();
  if (--t.back().coef == 0) t.pop_back();
  return Ordinal::from_terms(std::move(t));
}

Ordinal subfan_element(const Ordinal& alpha, Nat position) {
  const Nat c = cb_rank(alpha);
  if (c == 0) throw RankZero();
  if (position == 0) throw OutOfRange("fan positions start at 1");
  return add(parent_base(alpha), Ordinal::omega_pow(c - 1, position));
}

std::vector<Ordinal> subfan(const Ordinal& alpha, Nat count) {
  if (cb_rank(alpha) == 0) throw RankZero();
  std::vector<Ordinal> out;
  out.reserve(count);
  for (Nat i = 1; i <= count; ++i) out.push_back(subfan_element(alpha, i));
  return out;
}

std::vector<Ordinal> fan_of(const Ordinal& beta, Nat count) { return subfan(cover(beta), count); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Ordinal run() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("empty ordinal expression", pos_);
    Ordinal acc = term();
    skip();
    while (pos_ < s_.size()) {
      if (s_[pos_] != '+') throw SyntaxError("expected '+'", pos_);
      ++pos_;
      acc = add(acc, term());
      skip();
    }
    return acc;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Nat number() {
    skip();
    std::size_t start = pos_;
    Nat v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Nat d = static_cast<Nat>(s_[pos_] - '0');
      if (v > (std::numeric_limits<Nat>::max() - d) / 10) throw SyntaxError("number too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected a number", start);
    return v;
  }

  Ordinal term() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError("expected a term", pos_);
    if (s_[pos_] == 'w') {
      ++pos_;
      Nat e = 1, c = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = number();
        skip();
      }
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        std::size_t at = pos_;
        c = number();
        if (c == 0) throw SyntaxError("coefficient must be positive", at);
      }
      return Ordinal::omega_pow(e, c);
    }
    std::size_t at = pos_;
    Nat n = number();
    if (n == 0) {
      // "0" is only allowed as the whole expression
      skip();
      if (at != first_nonspace() || pos_ != s_.size()) throw SyntaxError("0 is not a valid term", at);
    }
    return Ordinal::finite(n);
  }

  std::size_t first_nonspace() const {
    std::size_t i = 0;
    while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
    return i;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exp == 0) {
      out += std::to_string(t.coef);
      continue;
    }
    out += 'w';
    if (t.exp != 1) out += '^' + std::to_string(t.exp);
    if (t.coef != 1) out += '*' + std::to_string(t.coef);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format(a); }

}  // namespace ordram

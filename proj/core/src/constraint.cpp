#include "ordram/constraint.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "ordram/errors.hpp"

namespace ordram {

std::string var_name(VarRef v) {
  std::string s;
  switch (v.exp) {
    case 2: s = "k"; break;
    case 1: s = "l"; break;
    case 0: s = "m"; break;
    default: s = "c" + std::to_string(v.exp);
  }
  if (v.primed) s += '\'';
  return s;
}

Expr Expr::constant(Int v) {
  Expr e;
  e.kind_ = Kind::Const;
  e.value_ = v;
  return e;
}

Expr Expr::variable(VarRef v) {
  Expr e;
  e.kind_ = Kind::Var;
  e.var_ = v;
  return e;
}

Expr Expr::binary(Kind k, Expr a, Expr b) {
  Expr e;
  e.kind_ = k;
  e.kids_ = {std::move(a), std::move(b)};
  return e;
}

Expr Expr::negate(Expr a) {
  Expr e;
  e.kind_ = Kind::Neg;
  e.kids_ = {std::move(a)};
  return e;
}

Expr Expr::scale(Int s, Expr a) {
  Expr e;
  e.kind_ = Kind::Scale;
  e.value_ = s;
  e.kids_ = {std::move(a)};
  return e;
}

Expr Expr::mod(Expr a, Int m) {
  Expr e;
  e.kind_ = Kind::Mod;
  e.value_ = m;
  e.kids_ = {std::move(a)};
  return e;
}

bool Expr::is_constant() const {
  if (kind_ == Kind::Var) return false;
  for (const auto& k : kids_)
    if (!k.is_constant()) return false;
  return true;
}

bool Expr::has_mod() const {
  if (kind_ == Kind::Mod) return true;
  for (const auto& k : kids_)
    if (k.has_mod()) return true;
  return false;
}

Nat Expr::max_exp(bool primed) const {
  Nat m = 0;
  if (kind_ == Kind::Var && var_.primed == primed) m = var_.exp;
  for (const auto& k : kids_) m = std::max(m, k.max_exp(primed));
  return m;
}

bool Expr::uses(bool primed) const {
  if (kind_ == Kind::Var && var_.primed == primed) return true;
  for (const auto& k : kids_)
    if (k.uses(primed)) return true;
  return false;
}

Int Expr::eval(const Int* lo, std::size_t nlo, const Int* hi, std::size_t nhi) const {
  switch (kind_) {
    case Kind::Const: return value_;
    case Kind::Var:
      if (var_.primed) return var_.exp < nhi ? hi[var_.exp] : 0;
      return var_.exp < nlo ? lo[var_.exp] : 0;
    case Kind::Add: return kids_[0].eval(lo, nlo, hi, nhi) + kids_[1].eval(lo, nlo, hi, nhi);
    case Kind::Sub: return kids_[0].eval(lo, nlo, hi, nhi) - kids_[1].eval(lo, nlo, hi, nhi);
    case Kind::Neg: return -kids_[0].eval(lo, nlo, hi, nhi);
    case Kind::Scale: return value_ * kids_[0].eval(lo, nlo, hi, nhi);
    case Kind::Mod: {
      Int v = kids_[0].eval(lo, nlo, hi, nhi) % value_;
      return v < 0 ? v + value_ : v;
    }
  }
  return 0;
}

std::optional<LinExpr> Expr::linearize(const std::function<LinExpr(VarRef)>& sub) const {
  switch (kind_) {
    case Kind::Const: return LinExpr::constant(value_);
    case Kind::Var: return sub(var_);
    case Kind::Add:
    case Kind::Sub: {
      auto a = kids_[0].linearize(sub);
      auto b = kids_[1].linearize(sub);
      if (!a || !b) return std::nullopt;
      return kind_ == Kind::Add ? *a + *b : *a - *b;
    }
    case Kind::Neg: {
      auto a = kids_[0].linearize(sub);
      if (!a) return std::nullopt;
      return *a * -1;
    }
    case Kind::Scale: {
      auto a = kids_[0].linearize(sub);
      if (!a) return std::nullopt;
      return *a * value_;
    }
    case Kind::Mod: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool is_sum(const Expr& e) { return e.kind() == Expr::Kind::Add || e.kind() == Expr::Kind::Sub; }

}  // namespace

std::string Expr::text() const {
  switch (kind_) {
    case Kind::Const: return value_ < 0 ? "(" + std::to_string(value_) + ")" : std::to_string(value_);
    case Kind::Var: return var_name(var_);
    case Kind::Add: return kids_[0].text() + "+" + kids_[1].text();
    case Kind::Sub: {
      std::string r = kids_[1].text();
      if (is_sum(kids_[1])) r = "(" + r + ")";
      return kids_[0].text() + "-" + r;
    }
    case Kind::Neg: {
      std::string r = kids_[0].text();
      if (kids_[0].kind() != Kind::Var && kids_[0].kind() != Kind::Const) r = "(" + r + ")";
      return "-" + r;
    }
    case Kind::Scale: {
      std::string r = kids_[0].text();
      if (is_sum(kids_[0]) || kids_[0].kind() == Kind::Mod) r = "(" + r + ")";
      return std::to_string(value_) + "*" + r;
    }
    case Kind::Mod: {
      std::string r = kids_[0].text();
      if (kids_[0].kind() != Kind::Var && kids_[0].kind() != Kind::Const) r = "(" + r + ")";
      return r + " % " + std::to_string(value_);
    }
  }
  return "";
}

std::string Comparison::text() const { return lhs.text() + " " + rel_text(rel) + " " + rhs.text(); }

namespace {

Int const_value(const Expr& e) {
  return e.eval(nullptr, 0, nullptr, 0);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  std::vector<ComparisonList> alternatives() {
    std::vector<ComparisonList> out;
    out.push_back(list());
    while (peek() == '|') {
      ++pos_;
      out.push_back(list());
    }
    expect_end();
    return out;
  }

  ComparisonList single_list() {
    ComparisonList l = list();
    expect_end();
    return l;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect_end() {
    if (peek() != '\0') throw SyntaxError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
  }

  ComparisonList list() {
    ComparisonList out;
    char c = peek();
    if (c == '\0' || c == '|') return out;
    chain(out);
    while (peek() == ',') {
      ++pos_;
      chain(out);
    }
    return out;
  }

  std::optional<Rel> relop() {
    skip();
    auto at = [&](std::string_view t) { return s_.substr(pos_, t.size()) == t; };
    if (at("<=")) return pos_ += 2, Rel::Le;
    if (at(">=")) return pos_ += 2, Rel::Ge;
    if (at("!=")) return pos_ += 2, Rel::Ne;
    if (at("==")) return pos_ += 2, Rel::Eq;
    if (at("<")) return pos_ += 1, Rel::Lt;
    if (at(">")) return pos_ += 1, Rel::Gt;
    if (at("=")) return pos_ += 1, Rel::Eq;
    return std::nullopt;
  }

  void chain(ComparisonList& out) {
    Expr left = sum();
    auto r = relop();
    if (!r) throw SyntaxError("expected a comparison operator", pos_);
    while (r) {
      Expr right = sum();
      out.push_back({left, *r, right});
      left = right;
      r = relop();
    }
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        e = Expr::binary(Expr::Kind::Add, std::move(e), product());
      } else if (c == '-') {
        ++pos_;
        e = Expr::binary(Expr::Kind::Sub, std::move(e), product());
      } else {
        return e;
      }
    }
  }

  Expr combine_mul(Expr a, Expr b, std::size_t at) {
    if (a.is_constant()) return Expr::scale(const_value(a), std::move(b));
    if (b.is_constant()) return Expr::scale(const_value(b), std::move(a));
    throw SyntaxError("product of two non-constant expressions", at);
  }

  Expr product() {
    Expr e = unary();
    for (;;) {
      char c = peek();
      std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        e = combine_mul(std::move(e), unary(), at);
      } else if (c == '%') {
        ++pos_;
        Expr m = unary();
        if (!m.is_constant() || const_value(m) <= 0)
          throw SyntaxError("modulus must be a positive constant", at);
        e = Expr::mod(std::move(e), const_value(m));
      } else {
        return e;
      }
    }
  }

  Expr unary() {
    if (peek() == '-') {
      ++pos_;
      return Expr::negate(unary());
    }
    return primary();
  }

  Expr primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (v > (std::numeric_limits<Int>::max() - 9) / 10) throw SyntaxError("number too large", at);
        v = v * 10 + (s_[pos_++] - '0');
      }
      // "2k" reads as 2*k
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
        return Expr::scale(v, primary());
      return Expr::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return Expr::variable(identifier());
    throw SyntaxError(c == '\0' ? "unexpected end of input" : "unexpected character", at);
  }

  VarRef identifier() {
    std::size_t at = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    VarRef v;
    if (pos_ < s_.size() && s_[pos_] == '\'') {
      v.primed = true;
      ++pos_;
    }
    if (name == "k") v.exp = 2;
    else if (name == "l") v.exp = 1;
    else if (name == "m") v.exp = 0;
    else if (name.size() > 1 && name[0] == 'c' &&
             name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() < 4)
      v.exp = static_cast<Nat>(std::stoul(name.substr(1)));
    else
      throw SyntaxError("unknown variable '" + name + "'", at);
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rel negate_rel(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
  }
  return r;
}

}  // namespace

ComparisonList parse_comparisons(std::string_view text) { return ExprParser(text).single_list(); }

std::string format_comparisons(const ComparisonList& list) {
  std::string s;
  for (const auto& c : list) {
    if (!s.empty()) s += ", ";
    s += c.text();
  }
  return s;
}

bool eval_all(const ComparisonList& list, const Int* lo, std::size_t nlo, const Int* hi,
              std::size_t nhi) {
  for (const auto& c : list)
    if (!c.eval(lo, nlo, hi, nhi)) return false;
  return true;
}

Predicate Predicate::parse(std::string_view text) {
  Predicate p(ExprParser(text).alternatives());
  for (const auto& alt : p.alts_)
    for (const auto& c : alt)
      if (c.lhs.uses(true) || c.rhs.uses(true))
        throw SyntaxError("primed variables are not allowed in a point predicate", 0);
  return p;
}

std::string Predicate::text() const {
  std::string s;
  for (const auto& alt : alts_) {
    if (!s.empty()) s += " | ";
    s += format_comparisons(alt);
  }
  return s;
}

std::vector<Int> coefficient_vector(const Ordinal& a, std::size_t n) {
  std::vector<Int> v(n, 0);
  for (const auto& t : a.terms())
    if (t.exp < n) v[t.exp] = static_cast<Int>(t.coef);
  return v;
}

bool Predicate::eval(const Ordinal& a) const {
  std::size_t n = a.is_zero() ? 1 : static_cast<std::size_t>(a.lead_exp()) + 1;
  std::vector<Int> v = coefficient_vector(a, n);
  for (const auto& alt : alts_)
    if (eval_all(alt, v.data(), n, nullptr, 0)) return true;
  return false;
}

Int max_abs_constant(const Expr& e) {
  if (e.kind() == Expr::Kind::Const) return std::llabs(e.value());
  Int m = 0;
  for (const auto& k : e.children()) m = std::max(m, max_abs_constant(k));
  return m;
}

Int Predicate::max_constant() const {
  Int m = 0;
  for (const auto& alt : alts_)
    for (const auto& c : alt) m = std::max({m, max_abs_constant(c.lhs), max_abs_constant(c.rhs)});
  return m;
}

Predicate Predicate::complement() const {
  std::vector<ComparisonList> acc{ComparisonList{}};
  for (const auto& alt : alts_) {
    std::vector<ComparisonList> next;
    for (const auto& partial : acc)
      for (const auto& c : alt) {
        ComparisonList l = partial;
        l.push_back({c.lhs, negate_rel(c.rel), c.rhs});
        next.push_back(std::move(l));
      }
    acc = std::move(next);
  }
  return Predicate(std::move(acc));
}

}  // namespace ordram

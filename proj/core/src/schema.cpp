#include "ordram/schema.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

namespace ordram {

// ---------------------------------------------------------------- AffineSeq

namespace {

struct SeqParser {
  std::string s;  // whitespace removed
  std::vector<std::size_t> pos;  // original offsets
  std::size_t p = 0;

  explicit SeqParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s += text[i];
        pos.push_back(i);
      }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, p < pos.size() ? pos[p] : (pos.empty() ? 0 : pos.back() + 1));
  }
  bool at_end() const { return p >= s.size(); }
  char peek() const { return at_end() ? '\0' : s[p]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++p;
    return true;
  }
  Int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<Int>::max() - 9) / 10) fail("number too large");
      v = v * 10 + (s[p++] - '0');
    }
    return v;
  }
  // N | Ni | N*i | i
  AffineCoef item() {
    if (eat('i')) return {1, 0};
    Int n = number();
    if (eat('i')) return {n, 0};
    if (peek() == '*' && p + 1 < s.size() && s[p + 1] == 'i') {
      p += 2;
      return {n, 0};
    }
    return {0, n};
  }
  AffineCoef coef() {
    if (eat('(')) {
      AffineCoef c = item();
      while (eat('+')) {
        AffineCoef d = item();
        c.a += d.a;
        c.b += d.b;
      }
      if (!eat(')')) fail("expected ')'");
      return c;
    }
    return item();
  }
  AffineSeq seq() {
    AffineSeq out;
    if (at_end()) fail("empty sequence");
    do {
      Nat e = 0;
      AffineCoef c{0, 1};
      if (eat('w')) {
        e = 1;
        if (eat('^')) e = static_cast<Nat>(number());
        if (eat('*')) c = coef();
      } else {
        c = coef();
      }
      if (c.a == 0 && c.b == 0) fail("zero coefficient");
      // "3i+2" is one finite coefficient
      if (e == 0 && !out.terms.empty() && out.terms.back().first == 0) {
        out.terms.back().second.a += c.a;
        out.terms.back().second.b += c.b;
        continue;
      }
      if (!out.terms.empty() && out.terms.back().first <= e) fail("exponents must decrease");
      out.terms.push_back({e, c});
    } while (eat('+'));
    if (eat(';')) {
      if (!eat('i')) fail("expected 'i>='");
      if (!eat('>') || !eat('=')) fail("expected '>='");
      out.lower = number();
    }
    if (!at_end()) fail("unexpected character");
    return out;
  }
};

std::string coef_text(AffineCoef c) {
  if (c.a == 0) return std::to_string(c.b);
  std::string inner = (c.a == 1 ? "" : std::to_string(c.a)) + "i";
  if (c.b != 0) inner += "+" + std::to_string(c.b);
  if (c.a == 1 && c.b == 0) return inner;
  return "(" + inner + ")";
}

}  // namespace

AffineSeq AffineSeq::parse(std::string_view text) { return SeqParser(text).seq(); }

AffineSeq AffineSeq::constant(const Ordinal& a) {
  if (a.is_zero()) throw ZeroOrdinal();
  AffineSeq s;
  for (const auto& t : a.terms()) s.terms.push_back({t.exp, {0, static_cast<Int>(t.coef)}});
  return s;
}

std::string AffineSeq::text() const {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += coef_text(c);
      continue;
    }
    out += 'w';
    if (e != 1) out += '^' + std::to_string(e);
    if (!(c.a == 0 && c.b == 1)) out += '*' + coef_text(c);
  }
  if (lower != 0) out += "; i>=" + std::to_string(lower);
  return out;
}

Ordinal AffineSeq::at(Int i) const {
  if (i < lower) throw OutOfRange("parameter below the family's lower bound");
  std::vector<Term> t;
  for (const auto& [e, c] : terms) {
    Int v = c.a * i + c.b;
    if (v > 0) t.push_back({e, static_cast<Nat>(v)});
  }
  return Ordinal::from_terms(std::move(t));
}

bool AffineSeq::is_constant() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.a == 0; });
}

Ordinal symbolic_sup(const AffineSeq& s) {
  std::vector<Term> prefix;
  for (const auto& [e, c] : s.terms) {
    if (c.a > 0) return add(Ordinal::from_terms(prefix), Ordinal::omega_pow(e + 1));
    prefix.push_back({e, static_cast<Nat>(c.b)});
  }
  throw NotIncreasing("constant family has no supremum above its point");
}

const char* mode_name(FamilyMode m) {
  switch (m) {
    case FamilyMode::ForallForall: return "forall-forall";
    case FamilyMode::ForallExistsTail: return "forall-exists-tail";
    case FamilyMode::ExistsInfinite: return "exists-infinite";
  }
  return "?";
}

// ---------------------------------------------------------------- symbolic points

namespace {

constexpr std::size_t kWidth = 8;  // exponents 0..7

struct SymPoint {
  std::vector<LinExpr> coef = std::vector<LinExpr>(kWidth);
  LayerId layer;
};

const std::vector<std::string> kSeqNames{"i", "j"};

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string sym_text(const SymPoint& pt, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t e = kWidth; e-- > 0;) {
    const LinExpr& c = pt.coef[e];
    if (c.is_constant() && c.k == 0) continue;
    if (!out.empty()) out += '+';
    std::string ct = strip_spaces(to_string(c, names));
    if (!c.is_constant() && c.k != 0) ct = "(" + ct + ")";
    if (e == 0) {
      out += ct;
      continue;
    }
    out += 'w';
    if (e != 1) out += '^' + std::to_string(e);
    if (!(c.is_constant() && c.k == 1)) out += '*' + ct;
  }
  return out.empty() ? "0" : out;
}

LinCon con(const LinExpr& a, Rel r, const LinExpr& b) { return make_con(a, r, b); }

// lo < hi as a formula
Dnf less_dnf(const SymPoint& lo, const SymPoint& hi) {
  Dnf out;
  Conj prefix;
  for (std::size_t e = kWidth; e-- > 0;) {
    Conj c = prefix;
    c.push_back(con(lo.coef[e], Rel::Lt, hi.coef[e]));
    out.push_back(std::move(c));
    prefix.push_back(con(lo.coef[e], Rel::Eq, hi.coef[e]));
  }
  return simplify(out);
}

Dnf equal_dnf(const SymPoint& a, const SymPoint& b) {
  Conj c;
  for (std::size_t e = 0; e < kWidth; ++e) c.push_back(con(a.coef[e], Rel::Eq, b.coef[e]));
  return simplify(Dnf{c});
}

// rules putting an edge between lo < hi, for points in the recorded layers
Dnf rules(const ClauseGraph& g, const SymPoint& lo, const SymPoint& hi) {
  Dnf out;
  const Nat c = lo.layer.rank;
  if (g.include_cover_edges && hi.layer.rank == c + 1 && c + 1 < kWidth) {
    Conj eq;
    for (std::size_t e = 0; e < kWidth; ++e) {
      if (e > c + 1) eq.push_back(con(hi.coef[e], Rel::Eq, lo.coef[e]));
      else if (e == c + 1) eq.push_back(con(hi.coef[e], Rel::Eq, lo.coef[e] + LinExpr::constant(1)));
      else eq.push_back(con(hi.coef[e], Rel::Eq, LinExpr::constant(0)));
    }
    out.push_back(std::move(eq));
  }
  auto sub = [&](VarRef v) {
    if (v.exp >= kWidth) return LinExpr::constant(0);
    return v.primed ? hi.coef[v.exp] : lo.coef[v.exp];
  };
  for (const auto& cl : g.clauses) {
    if (!(cl.src == lo.layer && cl.dst == hi.layer)) continue;
    Conj cj;
    for (const auto& cmp : cl.constraints) {
      auto l = cmp.lhs.linearize(sub), r = cmp.rhs.linearize(sub);
      if (!l || !r) throw UnsupportedClauseForm(cl.name() + " uses a remainder");
      cj.push_back(con(*l, cmp.rel, *r));
    }
    out.push_back(std::move(cj));
  }
  return simplify(out);
}

bool uses_var(const Dnf& d, std::size_t x) {
  for (const auto& c : d)
    for (const auto& l : c)
      if (l.e.c[x] != 0) return true;
  return false;
}

struct BoxResult {
  bool holds = false;
  bool exact = true;
  std::optional<std::vector<Int>> cex;  // values of every variable
};

// forall vars >= 0: d.  Exact with at most one live variable; otherwise every
// live variable but one runs over [0, bound] and the last is scanned exactly.
BoxResult forall_all(Dnf d, const std::vector<std::size_t>& vars, Nat bound) {
  d = simplify(std::move(d));
  BoxResult res;
  std::vector<Int> vals(kMaxVars, 0);
  if (is_tautology(d)) {
    res.holds = true;
    return res;
  }
  std::vector<std::size_t> live;
  for (std::size_t x : vars)
    if (uses_var(d, x)) live.push_back(x);
  if (live.empty()) {
    res.holds = holds(d, vals.data());
    if (!res.holds) res.cex = vals;
    return res;
  }
  auto scan = [&](std::size_t exact_var) -> std::optional<std::vector<Int>> {
    std::vector<std::size_t> outer;
    for (std::size_t x : live)
      if (x != exact_var) outer.push_back(x);
    std::vector<Int> v(kMaxVars, 0);
    for (;;) {
      if (auto f = first_failure_from(d, exact_var, 0, v.data())) {
        v[exact_var] = *f;
        return v;
      }
      std::size_t q = 0;
      while (q < outer.size() && ++v[outer[q]] > static_cast<Int>(bound)) v[outer[q++]] = 0;
      if (q == outer.size()) return std::nullopt;
    }
  };
  res.exact = live.size() == 1;
  res.cex = scan(live.back());
  if (!res.cex && live.size() == 2) res.cex = scan(live.front());
  res.holds = !res.cex;
  return res;
}

// disjuncts eventually true in x with a threshold that ignores `free`
Dnf uniform_eventual(const Dnf& d, std::size_t x, const std::vector<std::size_t>& free) {
  Dnf out;
  for (const auto& ev : eventual(d, x)) {
    bool ok = true;
    for (const auto& l : ev.tail)
      for (std::size_t f : free) ok = ok && l.e.c[f] == 0;
    if (ok) out.push_back(ev.residual);
  }
  return simplify(out);
}

Dnf rows_dnf(const Dnf& d, std::size_t col_var) { return eventual_dnf(eventual(d, col_var)); }

// ---------------------------------------------------------------- families

SymPoint seq_point(const AffineSeq& s, std::size_t var, const Ordinal& delta) {
  SymPoint pt;
  for (const auto& [e, c] : s.terms) {
    if (e >= kWidth) throw OutOfRange("family exponent too large");
    pt.coef[e] = LinExpr::var(var, c.a) + LinExpr::constant(c.a * s.lower + c.b);
  }
  Ordinal first = s.at(s.lower);
  if (first.is_zero() || !(first < delta))
    throw OutOfUniverse("family value " + format(first) + " outside (0, " + format(delta) + ")");
  if (!s.is_constant() && delta < symbolic_sup(s))
    throw OutOfUniverse("family " + s.text() + " leaves the universe");
  pt.layer = layer_of(delta, first);
  if (!s.is_constant()) {
    Ordinal later = s.at(std::max<Int>(s.lower, 1) + 1);
    if (!(layer_of(delta, later) == pt.layer))
      throw FormatError("family " + s.text() + " changes layer; restrict with i>=1");
  }
  return pt;
}

Dnf family_edge(const ClauseGraph& g, const SymPoint& s, const SymPoint& t) {
  return simplify(dnf_or(dnf_and(less_dnf(s, t), rules(g, s, t)), dnf_and(less_dnf(t, s), rules(g, t, s))));
}

bool point_edge(const ClauseGraph& g, const AffineSeq& s, Int i, const AffineSeq& t, Int j) {
  Ordinal a = s.at(i), b = t.at(j);
  return !(a == b) && edge(g, a, b);
}

FamilyVerdict sampled_families(const ClauseGraph& g, const AffineSeq& s, const AffineSeq& t, FamilyMode mode,
                               Nat bound) {
  FamilyVerdict v;
  v.sampled = true;
  v.bound = bound;
  const Int B = static_cast<Int>(bound);
  const Int s_hi = s.is_constant() ? s.lower : s.lower + B;
  const Int t_lo = t.is_constant() ? t.lower : t.lower + 2 * B;
  const Int t_hi = t.is_constant() ? t.lower : t.lower + 3 * B;
  switch (mode) {
    case FamilyMode::ForallForall:
      v.verdict = true;
      for (Int i = s.lower; i <= s_hi && v.verdict; ++i)
        for (Int j = t.lower; j <= (t.is_constant() ? t.lower : t.lower + B); ++j) {
          Ordinal a = s.at(i), b = t.at(j);
          if (!(a == b) && !edge(g, a, b)) {
            v.verdict = false;
            v.counterexample = {i, j};
            break;
          }
        }
      break;
    case FamilyMode::ForallExistsTail:
      v.verdict = true;
      for (Int i = s.lower; i <= s_hi && v.verdict; ++i)
        for (Int j = t_lo; j <= t_hi; ++j)
          if (!point_edge(g, s, i, t, j)) {
            v.verdict = false;
            v.counterexample = {i, j};
            break;
          }
      break;
    case FamilyMode::ExistsInfinite:
      for (Int i = s.lower; i <= s_hi && !v.verdict; ++i)
        for (Int j = t_lo; j <= t_hi; ++j)
          if (point_edge(g, s, i, t, j)) {
            v.verdict = true;
            v.witness = i;
            break;
          }
      break;
  }
  v.certificate = "sampled i<=" + std::to_string(s_hi) + " j in [" + std::to_string(t_lo) + "," +
                  std::to_string(t_hi) + "]";
  return v;
}

}  // namespace

Nat default_bound(const ClauseGraph& g) {
  Int sum = 0;
  for (const auto& c : g.clauses)
    for (const auto& cmp : c.constraints) sum += max_abs_constant(cmp.lhs) + max_abs_constant(cmp.rhs);
  return static_cast<Nat>(2 * sum + 8);
}

FamilyVerdict edge_on_families(const ClauseGraph& g, const AffineSeq& s, const AffineSeq& t, FamilyMode mode,
                               Nat bound) {
  if (bound == 0) bound = default_bound(g);
  SymPoint ps = seq_point(s, 0, g.delta), pt = seq_point(t, 1, g.delta);
  Dnf e;
  try {
    e = family_edge(g, ps, pt);
  } catch (const UnsupportedClauseForm&) {
    return sampled_families(g, s, t, mode, bound);
  }
  FamilyVerdict v;
  v.bound = bound;
  auto shift = [&](const std::vector<Int>& vals) {
    return std::make_pair(s.lower + (s.is_constant() ? 0 : vals[0]), t.lower + (t.is_constant() ? 0 : vals[1]));
  };
  switch (mode) {
    case FamilyMode::ForallForall: {
      BoxResult r = forall_all(dnf_or(e, equal_dnf(ps, pt)), {0, 1}, bound);
      v.verdict = r.holds;
      v.exact = r.exact || !r.holds;
      if (r.cex) v.counterexample = shift(*r.cex);
      v.certificate = "forall i,j: " + to_string(e, kSeqNames);
      break;
    }
    case FamilyMode::ForallExistsTail: {
      Dnf rows = rows_dnf(e, 1);
      BoxResult r = forall_all(rows, {0}, bound);
      v.verdict = r.holds;
      v.exact = true;
      if (r.cex) v.counterexample = shift(*r.cex);
      v.certificate = "forall i: " + to_string(rows, kSeqNames);
      break;
    }
    case FamilyMode::ExistsInfinite: {
      Dnf rows = rows_dnf(e, 1);
      std::vector<Int> vals(kMaxVars, 0);
      v.exact = true;
      if (!uses_var(rows, 0)) {
        v.verdict = holds(rows, vals.data());
        if (v.verdict) v.witness = s.lower;
      } else {
        v.verdict = exists_from(rows, 0, 0, vals.data());
        if (v.verdict) {
          Int i = 0;
          for (vals[0] = 0; !holds(rows, vals.data()); ++vals[0]) ++i;
          v.witness = s.lower + i;
        }
      }
      v.certificate = "exists i: " + to_string(rows, kSeqNames);
      break;
    }
  }
  return v;
}

OppressVerdict decide_oppress(const ClauseGraph& g, const AffineSeq& a, const AffineSeq& b, Nat bound) {
  if (bound == 0) bound = default_bound(g);
  SymPoint pa = seq_point(a, 0, g.delta), pb = seq_point(b, 1, g.delta);
  OppressVerdict v;
  Dnf e;
  try {
    e = family_edge(g, pa, pb);
  } catch (const UnsupportedClauseForm&) {
    // rows and columns judged on a sampled tail
    v.sampled = true;
    const Int B = static_cast<Int>(bound);
    auto row_tail = [&](Int i) {
      for (Int j = b.lower + 2 * B; j <= b.lower + 3 * B; ++j)
        if (!point_edge(g, a, i, b, j)) return false;
      return true;
    };
    auto col_tail = [&](Int j) {
      for (Int i = a.lower + 2 * B; i <= a.lower + 3 * B; ++i)
        if (!point_edge(g, a, i, b, j)) return false;
      return true;
    };
    v.rows_cofinal = v.columns_cofinal = true;
    for (Int k = B; k <= 2 * B; ++k) {
      v.rows_cofinal = v.rows_cofinal && row_tail(a.lower + k);
      v.columns_cofinal = v.columns_cofinal && col_tail(b.lower + k);
    }
    v.oppress = v.rows_cofinal || v.columns_cofinal;
    for (Int i = a.lower; i <= a.lower + B && !v.infinite_row; ++i)
      if (row_tail(i)) v.infinite_row = i;
    v.harass = v.oppress && !v.infinite_row;
    v.certificate = "sampled tails, bound=" + std::to_string(bound);
    return v;
  }
  Dnf rows = rows_dnf(e, 1);  // a(i) sees a tail of B
  Dnf cols = rows_dnf(e, 0);  // b(j) sees a tail of A
  v.rows_cofinal = is_tautology(rows_dnf(rows, 0));
  v.columns_cofinal = is_tautology(rows_dnf(cols, 1));
  v.oppress = v.rows_cofinal || v.columns_cofinal;
  std::vector<Int> vals(kMaxVars, 0);
  if (!uses_var(rows, 0)) {
    if (holds(rows, vals.data())) v.infinite_row = a.lower;
  } else if (exists_from(rows, 0, 0, vals.data())) {
    Int i = 0;
    for (vals[0] = 0; !holds(rows, vals.data()); ++vals[0]) ++i;
    v.infinite_row = a.lower + i;
  }
  v.harass = v.oppress && !v.infinite_row;
  std::ostringstream c;
  c << "rows: " << to_string(rows, kSeqNames) << (v.rows_cofinal ? " (eventually true)" : " (not eventually true)")
    << "; columns: " << to_string(cols, kSeqNames)
    << (v.columns_cofinal ? " (eventually true)" : " (not eventually true)");
  if (!v.oppress) c << "; X = whole family leaves infinitely many points of B outside N(X)";
  v.certificate = c.str();
  return v;
}

// ---------------------------------------------------------------- claim 2

const char* kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::RankExcluded: return "RankExcluded";
    case ObstructionKind::NoLayerAboveTau: return "NoLayerAboveTau";
    case ObstructionKind::BTailDominatedByTau: return "BTailDominatedByTau";
    case ObstructionKind::BTailDominatedByEveryA: return "BTailDominatedByEveryA";
    case ObstructionKind::AOppressesB: return "AOppressesB";
  }
  return "?";
}

std::string ObstructionReport::line() const {
  std::string s = "TEMPLATE tau=" + tmpl.tau + " jA=" + std::to_string(tmpl.j_a) + " iB=" + std::to_string(tmpl.i_b) +
                  " lB=" + std::to_string(tmpl.l_b) + " => " + kind_name(kind);
  if (!exact) s += " bound=" + std::to_string(bound);
  return s;
}

TemplateUnresolved::TemplateUnresolved(Template t, std::vector<ObstructionReport> so_far)
    : Error("no obstruction for template tau=" + t.tau + " jA=" + std::to_string(t.j_a) +
            " iB=" + std::to_string(t.i_b) + " lB=" + std::to_string(t.l_b)),
      t_(std::move(t)),
      so_far_(std::move(so_far)) {}

namespace {

// variable slots: tau 0-1, A 2-4 (2 = lead), B 5-7
const std::vector<std::string> kClaimNames{"s", "t", "p", "q", "r", "u", "v", "x"};

struct Family {
  SymPoint pt;
  std::vector<std::size_t> vars;
};

// layer in the graph universe, read off the instance with every variable 0
void set_layer(SymPoint& pt, const Ordinal& delta) {
  std::vector<Int> zero(kMaxVars, 0);
  std::vector<Term> t;
  for (std::size_t e = kWidth; e-- > 0;) {
    Int v = pt.coef[e].eval(zero.data());
    if (v > 0) t.push_back({e, static_cast<Nat>(v)});
  }
  pt.layer = layer_of(delta, Ordinal::from_terms(std::move(t)));
}

struct TauLayer {
  Family f;
  bool top = false;  // the supremum of its component
};

std::vector<TauLayer> tau_layers(Nat n) {
  std::vector<TauLayer> out;
  auto make = [&](Nat comp, Nat rank, bool top, std::vector<std::pair<Nat, LinExpr>> coefs,
                  std::vector<std::size_t> vars) {
    TauLayer t;
    t.top = top;
    t.f.pt.layer = {comp, rank};
    for (auto& [e, c] : coefs) t.f.pt.coef[e] = c;
    t.f.vars = std::move(vars);
    out.push_back(std::move(t));
  };
  const LinExpr one = LinExpr::constant(1);
  make(1, 1, false, {{2, LinExpr::var(0)}, {1, LinExpr::var(1) + one}}, {0, 1});
  make(1, 2, false, {{2, LinExpr::var(0) + one}}, {0});
  make(1, 3, true, {{3, one}}, {});
  for (Nat i = 2; i <= n + 1; ++i) {
    const LinExpr c2 = LinExpr::constant(static_cast<Int>(i - 2));
    make(i, 1, false, {{3, one}, {2, c2}, {1, LinExpr::var(0) + one}}, {0});
    if (i <= n) make(i, 2, true, {{3, one}, {2, c2 + one}}, {});
  }
  return out;
}

// points of rank jA below tau = Q + w^c; the coefficient at c-1 leads
Family a_family(const TauLayer& tau, Nat j_a, Nat i_tau) {
  Family a;
  a.pt = tau.f.pt;
  const Nat c = tau.f.pt.layer.rank;
  a.pt.coef[c] = a.pt.coef[c] - LinExpr::constant(1);
  std::size_t next = 2;
  for (Nat e = c; e-- > j_a;) {
    std::size_t v = next++;
    a.pt.coef[e] = LinExpr::var(v) + LinExpr::constant(e == j_a ? 1 : 0);
    a.vars.push_back(v);
  }
  a.pt.layer = {i_tau, j_a};
  return a;
}

// layer L(iB, lB) of theta, split into the pieces lying above tau when they
// share a component
std::vector<Family> b_families(const TauLayer& tau, Nat i_tau, Nat i_b, Nat l_b) {
  const Nat top_free = i_b == 1 ? 2 : 1;
  SymPoint base;
  base.layer = {i_b, l_b};
  if (i_b >= 2) {
    base.coef[3] = LinExpr::constant(1);
    base.coef[2] = LinExpr::constant(static_cast<Int>(i_b - 2));
  }
  auto fill_free = [&](Family& f, Nat from, std::size_t next) {
    for (Nat e = from + 1; e-- > l_b;) {
      std::size_t v = next++;
      f.pt.coef[e] = LinExpr::var(v) + LinExpr::constant(e == l_b ? 1 : 0);
      f.vars.push_back(v);
    }
  };
  std::vector<Family> out;
  if (i_b != i_tau) {
    Family f{base, {}};
    fill_free(f, top_free, 5);
    out.push_back(std::move(f));
    return out;
  }
  for (Nat star = top_free + 1; star-- > l_b;) {
    Family f{base, {}};
    for (Nat e = top_free; e > star; --e) f.pt.coef[e] = tau.f.pt.coef[e];
    f.pt.coef[star] = tau.f.pt.coef[star] + LinExpr::constant(1) + LinExpr::var(5);
    f.vars.push_back(5);
    if (star > l_b) fill_free(f, star - 1, 6);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> join(std::initializer_list<const std::vector<std::size_t>*> parts) {
  std::vector<std::size_t> out;
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

struct Part {
  bool ok = false;
  ObstructionKind kind = ObstructionKind::AOppressesB;
  bool exact = true;
  std::string certificate;
};

Part try_part(ObstructionKind kind, const Dnf& d, const std::vector<std::size_t>& vars, Nat bound,
              const std::string& label) {
  BoxResult r = forall_all(d, vars, bound);
  Part p;
  p.ok = r.holds;
  p.kind = kind;
  p.exact = r.exact;
  std::string q;
  for (std::size_t v : vars) q += (q.empty() ? "" : ",") + kClaimNames[v];
  p.certificate = label + ": forall " + (q.empty() ? "-" : q) + ": " + to_string(d, kClaimNames);
  return p;
}

Part resolve_piece(const ClauseGraph& g, const TauLayer& tau, const Family& a, const Family& b, Nat bound) {
  const std::vector<std::size_t>& tv = tau.f.vars;
  const std::size_t lead = a.vars.front();
  std::vector<std::size_t> a_rest(a.vars.begin() + 1, a.vars.end());
  const bool one_b = b.vars.size() == 1;

  Dnf tb = rules(g, tau.f.pt, b.pt);
  Part p = one_b ? try_part(ObstructionKind::BTailDominatedByTau, rows_dnf(tb, b.vars[0]), tv, bound,
                            "tau sees a tail of B")
                 : try_part(ObstructionKind::BTailDominatedByTau, tb, join({&tv, &b.vars}), bound, "B inside N(tau)");
  if (p.ok) return p;

  Dnf ab = rules(g, a.pt, b.pt);
  if (one_b) {
    p = try_part(ObstructionKind::BTailDominatedByEveryA, rows_dnf(ab, b.vars[0]), join({&tv, &a.vars}), bound,
                 "every a sees a tail of B");
    if (p.ok) return p;
  }
  p = try_part(ObstructionKind::AOppressesB, uniform_eventual(ab, lead, a_rest), join({&tv, &b.vars, &a_rest}), bound,
               "every b sees all a with large " + kClaimNames[lead]);
  if (p.ok) return p;
  if (one_b) {
    p = try_part(ObstructionKind::AOppressesB, uniform_eventual(rows_dnf(ab, b.vars[0]), lead, a_rest),
                 join({&tv, &a_rest}), bound, "all a with large " + kClaimNames[lead] + " see a tail of B");
  }
  return p;
}

}  // namespace

std::vector<ObstructionReport> claim2_suite(const ClauseGraph& g, const Ordinal& theta, Nat bound) {
  const auto& tt = theta.terms();
  if (tt.size() != 2 || !(tt[0] == Term{3, 1}) || tt[1].exp != 2)
    throw OutOfRange("theta must have the form w^3+w^2*n with n >= 1");
  if (!(theta < g.delta)) throw OutOfUniverse("theta lies outside the graph");
  if (bound == 0) bound = default_bound(g);
  const Nat n = tt[1].coef;
  const Nat k_theta = n + 1;

  std::vector<ObstructionReport> reports;
  for (TauLayer tau : tau_layers(n)) {
    const Nat c = tau.f.pt.layer.rank;
    const Nat i_tau = tau.f.pt.layer.component;
    set_layer(tau.f.pt, g.delta);
    for (Nat j_a = 0; j_a < c; ++j_a) {
      Family a = a_family(tau, j_a, i_tau);
      set_layer(a.pt, g.delta);
      // subfan of tau against tau itself
      std::optional<Part> fan;
      if (j_a + 1 == c) {
        Part p = try_part(ObstructionKind::RankExcluded, rules(g, a.pt, tau.f.pt), join({&tau.f.vars, &a.vars}), bound,
                          "subfan inside N(tau)");
        if (p.ok) fan = p;
      }
      for (Nat i_b = 1; i_b <= k_theta; ++i_b) {
        const Nat top_rank = i_b == 1 ? 3 : 2;
        for (Nat l_b = 0; l_b < top_rank; ++l_b) {
          ObstructionReport rep;
          rep.tmpl = {sym_text(tau.f.pt, kClaimNames), i_tau, c, j_a, i_b, l_b};
          rep.bound = bound;
          if (fan) {
            rep.kind = ObstructionKind::RankExcluded;
            rep.exact = fan->exact;
            rep.certificate = fan->certificate;
            reports.push_back(std::move(rep));
            continue;
          }
          if (i_b < i_tau || (i_b == i_tau && tau.top)) {
            rep.kind = ObstructionKind::NoLayerAboveTau;
            rep.certificate = "no point of L(" + std::to_string(i_b) + "," + std::to_string(l_b) + ") lies above tau";
            reports.push_back(std::move(rep));
            continue;
          }
          bool all = true;
          rep.kind = ObstructionKind::RankExcluded;
          for (Family b : b_families(tau, i_tau, i_b, l_b)) {
            set_layer(b.pt, g.delta);
            Part p = resolve_piece(g, tau, a, b, bound);
            if (!p.ok) {
              all = false;
              break;
            }
            rep.kind = std::max(rep.kind, p.kind);
            rep.exact = rep.exact && p.exact;
            rep.certificate += (rep.certificate.empty() ? "" : " ; ") + sym_text(b.pt, kClaimNames) + " | " +
                               p.certificate;
          }
          if (!all) throw TemplateUnresolved(rep.tmpl, std::move(reports));
          reports.push_back(std::move(rep));
        }
      }
    }
  }
  return reports;
}

}  // namespace ordram

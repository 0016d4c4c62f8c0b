#include "ordram/clause_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ordram/errors.hpp"

namespace ordram {

namespace {

const char* const kStandard = R"(# triangle-free graph on w^3*2
# k, l, m: coefficients of w^2, w, 1 in the lower point; primed for the higher
DELTA w^3*2
COVER
EDGE (1,3)->(2,0):
EDGE (1,2)->(1,0): 0 < k <= k'
EDGE (1,0)->(1,2): (k+1)+l < k'
EDGE (1,0)->(2,1): k+l < l'
EDGE (2,2)->(2,0): k <= k'
EDGE (1,1)->(2,1): l' < k
EDGE (1,0)->(1,1): 0 < k'-k < l, l' < l
EDGE (1,0)->(2,0): l' < l
EDGE (2,0)->(2,1): k < k', l' < l
)";

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

LayerId parse_layer(const std::string& s, std::size_t lineno) {
  unsigned long i = 0, j = 0;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(s);
  if (!(in >> c1 >> i >> c2 >> j >> c3) || c1 != '(' || c2 != ',' || c3 != ')')
    throw FormatError("bad layer '" + s + "' on line " + std::to_string(lineno));
  return {i, j};
}

std::string layer_text(LayerId id) {
  return "(" + std::to_string(id.component) + "," + std::to_string(id.rank) + ")";
}

}  // namespace

std::string EdgeClause::name() const { return "E" + layer_text(src) + layer_text(dst); }

ClauseGraph parse_graph(std::string_view text) {
  ClauseGraph g;
  g.include_cover_edges = false;
  bool have_delta = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "COVER") {
      g.include_cover_edges = true;
    } else if (line.rfind("DELTA", 0) == 0) {
      g.delta = parse(trim(line.substr(5)));
      have_delta = true;
    } else if (line.rfind("EDGE", 0) == 0) {
      std::string rest = line.substr(4);
      std::size_t arrow = rest.find("->");
      std::size_t colon = rest.find(':');
      if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
        throw FormatError("EDGE needs '(i,j)->(k,l):' on line " + std::to_string(lineno));
      EdgeClause c;
      c.src = parse_layer(trim(rest.substr(0, arrow)), lineno);
      c.dst = parse_layer(trim(rest.substr(arrow + 2, colon - arrow - 2)), lineno);
      c.constraints = parse_comparisons(trim(rest.substr(colon + 1)));
      g.clauses.push_back(std::move(c));
    } else {
      throw FormatError("unknown directive on line " + std::to_string(lineno) + ": " + line);
    }
  }
  if (!have_delta) g.delta = parse("w^3*2");
  validate_graph(g);
  return g;
}

ClauseGraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open graph file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const ClauseGraph& g) {
  std::string out = "DELTA " + format(g.delta) + "\n";
  if (g.include_cover_edges) out += "COVER\n";
  for (const auto& c : g.clauses) {
    out += "EDGE " + layer_text(c.src) + "->" + layer_text(c.dst) + ":";
    if (!c.constraints.empty()) out += " " + format_comparisons(c.constraints);
    out += "\n";
  }
  return out;
}

void validate_graph(const ClauseGraph& g) {
  if (g.delta.is_zero()) throw FormatError("graph universe must be positive");
  const Nat top = g.delta.lead_exp();
  for (const auto& c : g.clauses) {
    try {
      validate_layer(g.delta, c.src);
      validate_layer(g.delta, c.dst);
    } catch (const OutOfRange& e) {
      throw FormatError(c.name() + ": " + e.what());
    }
    for (const auto& cmp : c.constraints)
      for (bool primed : {false, true})
        if ((cmp.lhs.uses(primed) && cmp.lhs.max_exp(primed) > top) ||
            (cmp.rhs.uses(primed) && cmp.rhs.max_exp(primed) > top))
          throw FormatError(c.name() + ": variable beyond the universe shape");
  }
}

const char* standard_graph_text() { return kStandard; }

ClauseGraph standard_graph() {
  static const ClauseGraph g = parse_graph(kStandard);
  return g;
}

ClauseGraph empty_graph(const Ordinal& delta) {
  ClauseGraph g;
  g.delta = delta;
  g.include_cover_edges = false;
  return g;
}

namespace {

void check_universe(const ClauseGraph& g, const Ordinal& a) {
  if (a.is_zero() || !(a < g.delta)) throw OutOfUniverse(format(a) + " is outside (0, " + format(g.delta) + ")");
}

// rules applying to an ordered pair lo < hi
template <class F>
void each_rule(const ClauseGraph& g, const Ordinal& lo, const Ordinal& hi, F&& f) {
  if (g.include_cover_edges && cover(lo) == hi) f(std::string("cover"));
  const LayerId a = layer_of(g.delta, lo), b = layer_of(g.delta, hi);
  std::vector<Int> x = coefficient_vector(lo, g.delta.lead_exp() + 1);
  std::vector<Int> y = coefficient_vector(hi, g.delta.lead_exp() + 1);
  for (const auto& c : g.clauses)
    if (c.src == a && c.dst == b && eval_all(c.constraints, x.data(), x.size(), y.data(), y.size()))
      f(c.name());
}

}  // namespace

bool edge(const ClauseGraph& g, const Ordinal& a, const Ordinal& b) {
  check_universe(g, a);
  check_universe(g, b);
  if (a == b) throw OutOfRange("edge needs two distinct points");
  const Ordinal& lo = a < b ? a : b;
  const Ordinal& hi = a < b ? b : a;
  if (g.include_cover_edges && cover(lo) == hi) return true;
  const LayerId la = layer_of(g.delta, lo), lb = layer_of(g.delta, hi);
  Int x[8] = {}, y[8] = {};
  const std::size_t width = std::min<std::size_t>(g.delta.lead_exp() + 1, 8);
  for (const auto& t : lo.terms())
    if (t.exp < width) x[t.exp] = static_cast<Int>(t.coef);
  for (const auto& t : hi.terms())
    if (t.exp < width) y[t.exp] = static_cast<Int>(t.coef);
  for (const auto& c : g.clauses)
    if (c.src == la && c.dst == lb && eval_all(c.constraints, x, width, y, width)) return true;
  return false;
}

std::vector<std::string> justify(const ClauseGraph& g, const Ordinal& a, const Ordinal& b) {
  check_universe(g, a);
  check_universe(g, b);
  if (a == b) throw OutOfRange("edge needs two distinct points");
  std::vector<std::string> out;
  const Ordinal& lo = a < b ? a : b;
  const Ordinal& hi = a < b ? b : a;
  each_rule(g, lo, hi, [&](std::string s) { out.push_back(std::move(s)); });
  return out;
}

namespace {

// precomputed vertex data for window scans
struct Indexed {
  const ClauseGraph& g;
  std::vector<Ordinal> v;
  std::vector<LayerId> layer;
  std::vector<std::vector<Int>> coef;
  std::vector<std::size_t> cover_idx;
  std::map<std::pair<LayerId, LayerId>, std::vector<const EdgeClause*>> by_layers;

  Indexed(const ClauseGraph& graph, std::vector<Ordinal> verts) : g(graph), v(std::move(verts)) {
    const std::size_t n = v.size();
    const std::size_t width = g.delta.lead_exp() + 1;
    for (const auto& a : v) {
      layer.push_back(layer_of(g.delta, a));
      coef.push_back(coefficient_vector(a, width));
      Ordinal up = cover(a);
      auto it = std::lower_bound(v.begin(), v.end(), up);
      cover_idx.push_back(it != v.end() && *it == up ? static_cast<std::size_t>(it - v.begin()) : n);
    }
    for (const auto& c : g.clauses) by_layers[{c.src, c.dst}].push_back(&c);
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (g.include_cover_edges && cover_idx[i] == j) return true;
    auto it = by_layers.find({layer[i], layer[j]});
    if (it == by_layers.end()) return false;
    for (const EdgeClause* c : it->second)
      if (eval_all(c->constraints, coef[i].data(), coef[i].size(), coef[j].data(), coef[j].size())) return true;
    return false;
  }
};

}  // namespace

std::vector<Ordinal> neighbours(const ClauseGraph& g, const Ordinal& a, const Window& w) {
  check_universe(g, a);
  std::vector<Ordinal> out;
  for (auto& b : enumerate(w)) {
    if (b == a) continue;
    check_universe(g, b);
    if (edge(g, a, b)) out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::array<Ordinal, 3>> triangle_scan(const ClauseGraph& g, const Window& w) {
  std::vector<Ordinal> verts = enumerate(w);
  for (const auto& a : verts) check_universe(g, a);
  Indexed ix(g, std::move(verts));
  const std::size_t n = ix.v.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> adj(n * words, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (ix.adjacent(i, j)) {
        adj[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
  std::vector<std::array<Ordinal, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(adj[i * words + j / 64] >> (j % 64) & 1)) continue;
      for (std::size_t q = (j + 1) / 64; q < words; ++q) {
        std::uint64_t m = adj[i * words + q] & adj[j * words + q];
        if (q == (j + 1) / 64 && (j + 1) % 64) m &= ~std::uint64_t{0} << ((j + 1) % 64);
        while (m) {
          std::size_t k = q * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
          m &= m - 1;
          out.push_back({ix.v[i], ix.v[j], ix.v[k]});
        }
      }
    }
  return out;
}

bool independent_check(const ClauseGraph& g, const std::vector<Ordinal>& xs) {
  for (const auto& a : xs) check_universe(g, a);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!(xs[i] == xs[j]) && edge(g, xs[i], xs[j])) return false;
  return true;
}

PairColouring as_colouring(const ClauseGraph& g) {
  ClauseGraph copy = g;
  return PairColouring([copy](const Ordinal& a, const Ordinal& b) -> Nat { return edge(copy, a, b) ? 1 : 0; },
                       2);
}

CanonicalReport extract_tables(const ClauseGraph& g, const Window& w, Nat r_max) {
  return check_canonical(as_colouring(g), g.delta, w, r_max);
}

}  // namespace ordram

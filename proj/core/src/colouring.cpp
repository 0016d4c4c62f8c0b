#include "ordram/colouring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ordram/errors.hpp"
#include "ordram/fsets.hpp"

namespace ordram {

PairColouring::PairColouring(Fn fn, Nat n_colours, std::optional<std::vector<Ordinal>> domain)
    : fn_(std::move(fn)), n_colours_(n_colours) {
  if (n_colours == 0) throw OutOfRange("a colouring needs at least one colour");
  if (domain) {
    std::sort(domain->begin(), domain->end());
    domain->erase(std::unique(domain->begin(), domain->end()), domain->end());
    domain_ = std::make_shared<const std::vector<Ordinal>>(std::move(*domain));
  }
}

Nat PairColouring::operator()(const Ordinal& a, const Ordinal& b) const {
  if (a == b) throw OutOfRange("pair colouring needs two distinct points");
  return a < b ? fn_(a, b) : fn_(b, a);
}

PairColouring constant_colouring(Nat colour, Nat n_colours) {
  if (colour >= n_colours) throw OutOfRange("colour out of range");
  return PairColouring([colour](const Ordinal&, const Ordinal&) { return colour; }, n_colours);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TableColouring::TableColouring(std::vector<Ordinal> vertices, Nat n_colours)
    : n_colours_(n_colours) {
  if (n_colours == 0 || n_colours > 255) throw OutOfRange("table colourings use 1 to 255 colours");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::size_t n = vertices.size();
  vertices_ = std::make_shared<const std::vector<Ordinal>>(std::move(vertices));
  dense_ = std::make_shared<std::vector<unsigned char>>(n * (n ? n - 1 : 0) / 2, 0);
}

TableColouring::TableColouring(std::vector<Ordinal> vertices, Nat n_colours, IndexFn fn)
    : n_colours_(n_colours), fn_(std::move(fn)) {
  if (n_colours == 0) throw OutOfRange("a colouring needs at least one colour");
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw NotIncreasing("procedural table needs strictly increasing vertices");
  vertices_ = std::make_shared<const std::vector<Ordinal>>(std::move(vertices));
}

TableColouring TableColouring::random(std::vector<Ordinal> vertices, Nat n_colours, std::uint64_t seed) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::uint64_t key = splitmix64(seed);
  return TableColouring(std::move(vertices), n_colours, [key, n_colours](std::size_t i, std::size_t j) {
    std::uint64_t h = splitmix64(key ^ splitmix64((static_cast<std::uint64_t>(i) << 32) ^ j));
    return static_cast<Nat>(h % n_colours);
  });
}

std::optional<std::size_t> TableColouring::index_of(const Ordinal& a) const {
  auto it = std::lower_bound(vertices_->begin(), vertices_->end(), a);
  if (it == vertices_->end() || !(*it == a)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_->begin());
}

std::size_t TableColouring::slot(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= vertices_->size()) throw OutOfRange("table index out of range");
  return j * (j - 1) / 2 + i;
}

Nat TableColouring::colour(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (fn_) {
    if (i == j || j >= vertices_->size()) throw OutOfRange("table index out of range");
    return fn_(i, j);
  }
  return (*dense_)[slot(i, j)];
}

Nat TableColouring::colour(const Ordinal& a, const Ordinal& b) const {
  auto i = index_of(a), j = index_of(b);
  if (!i || !j) throw OutOfUniverse("point outside the table: " + format(i ? b : a));
  return colour(*i, *j);
}

void TableColouring::set(std::size_t i, std::size_t j, Nat c) {
  if (!dense_) throw Error("procedural tables are read-only");
  if (c >= n_colours_) throw OutOfRange("colour out of range");
  (*dense_)[slot(i, j)] = static_cast<unsigned char>(c);
}

void TableColouring::set(const Ordinal& a, const Ordinal& b, Nat c) {
  auto i = index_of(a), j = index_of(b);
  if (!i || !j) throw OutOfUniverse("point outside the table: " + format(i ? b : a));
  set(*i, *j, c);
}

PairColouring TableColouring::as_pair_colouring() const {
  TableColouring self = *this;
  return PairColouring([self](const Ordinal& a, const Ordinal& b) { return self.colour(a, b); }, n_colours_,
                       *vertices_);
}

void TableColouring::write(std::ostream& out) const {
  const auto& v = *vertices_;
  out << "colours " << n_colours_ << '\n';
  if (v.size() == 1) out << "vertex " << format(v[0]) << '\n';
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      out << "pair " << format(v[i]) << ' ' << format(v[j]) << ' ' << colour(i, j) << '\n';
}

// every pair of the mentioned vertices must be listed
TableColouring TableColouring::parse(std::istream& in, Nat n_colours) {
  std::vector<Ordinal> verts;
  std::vector<std::tuple<Ordinal, Ordinal, Nat>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "colours") {
      if (!(ls >> n_colours)) throw FormatError("bad colours line " + std::to_string(lineno));
    } else if (kw == "vertex") {
      std::string t;
      ls >> t;
      verts.push_back(ordram::parse(t));
    } else if (kw == "pair") {
      std::string a, b;
      Nat c;
      if (!(ls >> a >> b >> c)) throw FormatError("bad pair line " + std::to_string(lineno));
      Ordinal x = ordram::parse(a), y = ordram::parse(b);
      if (x == y) throw FormatError("pair of equal points on line " + std::to_string(lineno));
      verts.push_back(x);
      verts.push_back(y);
      pairs.emplace_back(std::move(x), std::move(y), c);
    } else {
      throw FormatError("unknown keyword '" + kw + "' on line " + std::to_string(lineno));
    }
  }
  TableColouring t(std::move(verts), n_colours);
  const std::size_t n = t.vertices().size();
  std::vector<char> seen(n * (n ? n - 1 : 0) / 2, 0);
  for (const auto& [a, b, c] : pairs) {
    std::size_t s = t.slot(*t.index_of(a), *t.index_of(b));
    if (seen[s]) throw FormatError("pair " + format(a) + " " + format(b) + " listed twice");
    seen[s] = 1;
    t.set(a, b, c);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw FormatError("table colouring is not total");
  return t;
}

void write_desc(std::ostream& out, const DescTable& t) {
  for (const auto& [k, c] : t)
    out << "desc " << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k) << ' ' << c << '\n';
}

void write_dom(std::ostream& out, const DomTable& t) {
  for (const auto& [k, c] : t)
    out << "dom " << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k) << ' ' << std::get<3>(k)
        << ' ' << c << '\n';
}

void read_tables(std::istream& in, DescTable& desc, DomTable& dom) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    Nat a, b, c, d, e;
    if (kw == "desc" && ls >> a >> b >> c >> d) {
      desc[{a, b, c}] = d;
    } else if (kw == "dom" && ls >> a >> b >> c >> d >> e) {
      dom[{a, b, c, d}] = e;
    } else {
      throw FormatError("bad table line " + std::to_string(lineno));
    }
  }
}

NormalResult check_normal(const PairColouring& c, const Ordinal& delta, const Window& w) {
  return check_normal(c, delta, enumerate(w));
}

NormalResult check_normal(const PairColouring& c, const Ordinal& delta,
                          const std::vector<Ordinal>& vertices) {
  std::vector<Ordinal> vs = vertices;
  std::sort(vs.begin(), vs.end());
  NormalResult res;
  std::map<DescKey, std::pair<Ordinal, Ordinal>> first_seen;
  for (const auto& lo : vs) {
    const Nat l = cb_rank(lo);
    for (Ordinal hi = cover(lo); hi < delta; hi = cover(hi)) {
      if (!std::binary_search(vs.begin(), vs.end(), hi)) continue;
      ++res.pairs_checked;
      DescKey key{cnf_cut(delta, hi), cb_rank(hi), l};
      Nat col = c(lo, hi);
      auto [it, fresh] = res.desc.emplace(key, col);
      if (fresh) {
        first_seen.emplace(key, std::make_pair(lo, hi));
      } else if (it->second != col && res.ok) {
        res.ok = false;
        res.violation = PairOfPairs{first_seen.at(key), {lo, hi}};
      }
    }
  }
  return res;
}

RGoodResult check_r_good(const PointColouring& c, const Ordinal& delta, const Window& w, Nat r) {
  std::vector<Ordinal> pts = enumerate(w);
  std::map<std::pair<Ordinal, Nat>, std::uint64_t> seen;
  for (const auto& beta : pts) {
    const Nat l = cb_rank(beta);
    Nat col = c(beta);
    if (col >= 64) throw OutOfRange("point colourings are limited to 64 colours");
    Nat least = n_of(beta);
    for (Ordinal th = cover(beta); th < delta; th = cover(th)) {
      if (w.contains(th) && least - 1 >= r) seen[{th, l}] |= std::uint64_t{1} << col;
      least = std::min(least, n_of(th));
    }
  }
  RGoodResult res;
  for (const auto& th : pts) {
    const Nat c_th = cb_rank(th);
    for (Nat l = 0; l < c_th; ++l) {
      auto it = seen.find({th, l});
      std::uint64_t mask = it == seen.end() ? 0 : it->second;
      if (mask & (mask - 1)) {
        res.ok = false;
        res.failures.push_back({th, l});
        if (!res.failure) res.failure = RGoodFailure{th, l};
        continue;
      }
      Nat colour = 0;
      while (mask > 1) mask >>= 1, ++colour;
      res.assignments[{th, l}] = colour;
    }
  }
  return res;
}

namespace {

struct Candidate {
  Ordinal beta;
  Nat fl;
  Nat reach;  // largest relative coordinate
};

std::vector<Candidate> candidates(const Ordinal& eps, const std::vector<Ordinal>& pts) {
  Ordinal base = parent_base(eps);
  std::vector<Candidate> out;
  for (const auto& b : pts) {
    Ordinal x = left_sub(base, b);
    Nat reach = 0;
    for (const auto& t : x.terms()) reach = std::max(reach, t.coef);
    out.push_back({b, f_level(eps, b), reach});
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.reach < b.reach; });
  return out;
}

}  // namespace

CanonicalReport check_canonical(const PairColouring& c, const Ordinal& delta, const Window& w, Nat r_max) {
  CanonicalReport rep;
  rep.window_bound = w.coeff_bound;
  rep.r_max = r_max;
  rep.adaptive = !c.bounded();

  std::vector<Ordinal> alphas = enumerate(w);
  if (c.bounded()) {
    std::vector<Ordinal> keep;
    for (const auto& a : alphas)
      if (std::binary_search(c.domain().begin(), c.domain().end(), a)) keep.push_back(a);
    alphas = std::move(keep);
  }
  rep.points = alphas.size();

  NormalResult nr = check_normal(c, delta, alphas);
  rep.normal = nr.ok;
  rep.desc = std::move(nr.desc);
  rep.normal_violation = nr.violation;

  const Nat k = k_delta(delta);
  Nat max_norm = 0;
  for (const auto& a : alphas) max_norm = std::max(max_norm, a.norm());
  const Nat max_box = r_max + max_norm + 2;

  // candidate points per (i2, l)
  std::map<std::pair<Nat, Nat>, std::vector<Candidate>> cands;
  for (Nat i2 = 1; i2 <= k; ++i2) {
    Ordinal eps = partial_sum(delta, i2);
    Nat top = cb_rank(eps);
    for (Nat l = 0; l < top; ++l) {
      std::vector<Ordinal> pts;
      if (c.bounded()) {
        for (const auto& b : c.domain())
          if (b < delta && in_level(eps, l, b)) pts.push_back(b);
      } else {
        pts = level_box(eps, l, max_box);
      }
      cands[{i2, l}] = candidates(eps, pts);
    }
  }

  std::map<DomKey, Ordinal> dom_source;
  const Nat nc = c.n_colours();
  std::vector<Nat> worst(nc);
  for (const auto& alpha : alphas) {
    const Nat i1 = cnf_cut(delta, alpha);
    const Nat j1 = cb_rank(alpha);
    const Nat r_bound = rep.adaptive ? r_max + alpha.norm() : r_max;
    const Nat box = r_bound + 2;
    if (rep.adaptive) rep.largest_box = std::max(rep.largest_box, box);
    for (const auto& [key, list] : cands) {
      const auto [i2, l] = key;
      if (i2 == i1) continue;
      // witness for colour x: one more than the largest f-level of a point
      // coloured otherwise
      std::fill(worst.begin(), worst.end(), 0);
      std::vector<bool> any(nc, false);
      for (const auto& cand : list) {
        if (rep.adaptive && cand.reach > box) break;
        if (cand.beta == alpha) continue;
        Nat col = c(alpha, cand.beta);
        for (Nat x = 0; x < nc; ++x) {
          if (x == col) continue;
          if (!any[x] || cand.fl > worst[x]) worst[x] = cand.fl;
          any[x] = true;
        }
      }
      std::optional<Nat> best_colour;
      Nat best_witness = 0;
      for (Nat x = 0; x < nc; ++x) {
        Nat wit = any[x] ? (worst[x] == kInfiniteLevel ? kInfiniteLevel : worst[x] + 1) : 0;
        if (wit > r_bound) continue;
        if (!best_colour || wit < best_witness) {
          best_colour = x;
          best_witness = wit;
        }
      }
      if (!best_colour) {
        rep.uniformly_good = false;
        rep.failures.push_back({alpha, i2, l, "no colour class is large"});
        continue;
      }
      DomKey dk{i1, j1, i2, l};
      auto [it, fresh] = rep.dom.emplace(dk, *best_colour);
      if (fresh) {
        dom_source.emplace(dk, alpha);
      } else if (it->second != *best_colour) {
        rep.uniformly_good = false;
        rep.failures.push_back({alpha, i2, l,
                                "large colour " + std::to_string(*best_colour) + " differs from " +
                                    std::to_string(it->second) + " at " + format(dom_source.at(dk))});
      }
      Nat& mw = rep.max_witness[dk];
      mw = std::max(mw, best_witness);
    }
  }
  rep.ok = rep.normal && rep.uniformly_good;
  return rep;
}

std::vector<ScarcityViolation> scarcity_check(const DescTable& desc, const DomTable& dom) {
  std::vector<ScarcityViolation> out;
  std::map<std::pair<Nat, Nat>, std::vector<Nat>> d;
  for (const auto& [k, c] : desc)
    if (c == 1) d[{std::get<0>(k), std::get<1>(k)}].push_back(std::get<2>(k));
  for (const auto& [k, ls] : d)
    if (ls.size() > 1) {
      std::ostringstream s;
      s << "desc(" << k.first << ',' << k.second << ",l)=1 for " << ls.size() << " values of l";
      out.push_back({1, s.str()});
    }
  std::map<std::tuple<Nat, Nat, Nat>, Nat> by_j, by_l;
  for (const auto& [k, c] : dom) {
    if (c != 1) continue;
    auto [i1, j, i2, l] = k;
    ++by_j[{i1, i2, j}];
    ++by_l[{i1, i2, l}];
  }
  for (const auto& [k, n] : by_j)
    if (n > 1) {
      std::ostringstream s;
      s << "dom(" << std::get<0>(k) << ',' << std::get<2>(k) << ';' << std::get<1>(k) << ",l)=1 for " << n
        << " values of l";
      out.push_back({2, s.str()});
    }
  for (const auto& [k, n] : by_l)
    if (n > 1) {
      std::ostringstream s;
      s << "dom(" << std::get<0>(k) << ",j;" << std::get<1>(k) << ',' << std::get<2>(k) << ")=1 for " << n
        << " values of j";
      out.push_back({3, s.str()});
    }
  return out;
}

}  // namespace ordram

#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordram/ordinal.hpp"
#include "ordram/structure.hpp"

namespace ordram {

// Colouring of unordered pairs.  The callable always receives (lo, hi) with
// lo < hi.  A bounded colouring also carries its vertex set.
class PairColouring {
 public:
  using Fn = std::function<Nat(const Ordinal&, const Ordinal&)>;

  PairColouring(Fn fn, Nat n_colours, std::optional<std::vector<Ordinal>> domain = std::nullopt);

  Nat operator()(const Ordinal& a, const Ordinal& b) const;
  Nat n_colours() const { return n_colours_; }
  bool bounded() const { return domain_ != nullptr; }
  const std::vector<Ordinal>& domain() const { return *domain_; }

 private:
  Fn fn_;
  Nat n_colours_;
  std::shared_ptr<const std::vector<Ordinal>> domain_;
};

PairColouring constant_colouring(Nat colour, Nat n_colours = 2);

// Colours of pairs of a finite sorted vertex list, indexed by position.
class TableColouring {
 public:
  using IndexFn = std::function<Nat(std::size_t, std::size_t)>;

  // dense table, every pair starts at colour 0
  TableColouring(std::vector<Ordinal> vertices, Nat n_colours);
  // procedural table: colour of (i, j), i < j, computed on demand
  TableColouring(std::vector<Ordinal> vertices, Nat n_colours, IndexFn fn);

  static TableColouring random(std::vector<Ordinal> vertices, Nat n_colours, std::uint64_t seed);
  static TableColouring parse(std::istream& in, Nat n_colours);

  const std::vector<Ordinal>& vertices() const { return *vertices_; }
  Nat n_colours() const { return n_colours_; }
  std::optional<std::size_t> index_of(const Ordinal& a) const;

  Nat colour(std::size_t i, std::size_t j) const;
  Nat colour(const Ordinal& a, const Ordinal& b) const;
  void set(std::size_t i, std::size_t j, Nat c);
  void set(const Ordinal& a, const Ordinal& b, Nat c);

  PairColouring as_pair_colouring() const;
  void write(std::ostream& out) const;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::shared_ptr<const std::vector<Ordinal>> vertices_;
  Nat n_colours_;
  std::shared_ptr<std::vector<unsigned char>> dense_;
  IndexFn fn_;
};

std::uint64_t splitmix64(std::uint64_t x);

// desc(i, j, l): colour of beta1 <| beta2 with beta2 in component i, rank j,
// and beta1 of rank l
using DescKey = std::tuple<Nat, Nat, Nat>;
using DescTable = std::map<DescKey, Nat>;
// dom(i1, j1; i2, l)
using DomKey = std::tuple<Nat, Nat, Nat, Nat>;
using DomTable = std::map<DomKey, Nat>;

void write_desc(std::ostream& out, const DescTable& t);
void write_dom(std::ostream& out, const DomTable& t);
// reads "desc ..." and "dom ..." lines, ignoring blanks and '#' comments
void read_tables(std::istream& in, DescTable& desc, DomTable& dom);

struct PairOfPairs {
  std::pair<Ordinal, Ordinal> first;
  std::pair<Ordinal, Ordinal> second;
};

struct NormalResult {
  bool ok = true;
  DescTable desc;
  std::optional<PairOfPairs> violation;
  std::size_t pairs_checked = 0;
};

NormalResult check_normal(const PairColouring& c, const Ordinal& delta, const Window& w);
NormalResult check_normal(const PairColouring& c, const Ordinal& delta,
                          const std::vector<Ordinal>& vertices);

using PointColouring = std::function<Nat(const Ordinal&)>;

struct RGoodFailure {
  Ordinal theta;
  Nat level;
};

struct RGoodResult {
  bool ok = true;
  std::map<std::pair<Ordinal, Nat>, Nat> assignments;
  std::vector<RGoodFailure> failures;
  std::optional<RGoodFailure> failure;  // first failure
};

RGoodResult check_r_good(const PointColouring& c, const Ordinal& delta, const Window& w, Nat r);

struct GoodnessFailure {
  Ordinal alpha;
  Nat i2;
  Nat l;
  std::string reason;
};

struct CanonicalReport {
  bool ok = true;
  bool normal = true;
  bool uniformly_good = true;
  DescTable desc;
  DomTable dom;
  std::map<DomKey, Nat> max_witness;  // largest witness r seen per dom entry
  std::optional<PairOfPairs> normal_violation;
  std::vector<GoodnessFailure> failures;
  // scope of the semi-decision
  Nat window_bound = 0;
  Nat r_max = 0;
  bool adaptive = false;  // unbounded colouring: r <= r_max + |alpha|, box = that + 2
  Nat largest_box = 0;
  std::size_t points = 0;
};

CanonicalReport check_canonical(const PairColouring& c, const Ordinal& delta, const Window& w,
                                Nat r_max);

struct ScarcityViolation {
  int item = 0;
  std::string detail;
};

std::vector<ScarcityViolation> scarcity_check(const DescTable& desc, const DomTable& dom);

}  // namespace ordram

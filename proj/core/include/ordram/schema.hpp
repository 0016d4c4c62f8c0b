#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordram/clause_graph.hpp"
#include "ordram/errors.hpp"
#include "ordram/linear.hpp"
#include "ordram/ordinal.hpp"

namespace ordram {

// a*i + b
struct AffineCoef {
  Int a = 0;
  Int b = 0;
  bool operator==(const AffineCoef&) const = default;
};

// i -> sum of w^e * (a_e*i + b_e) over i >= lower
struct AffineSeq {
  std::vector<std::pair<Nat, AffineCoef>> terms;  // decreasing exponents
  Int lower = 0;

  // "w^2*(i+1)+w*1", optionally followed by "; i>=n"
  static AffineSeq parse(std::string_view text);
  static AffineSeq constant(const Ordinal& a);
  std::string text() const;
  Ordinal at(Int i) const;
  bool is_constant() const;
  bool operator==(const AffineSeq&) const = default;
};

Ordinal symbolic_sup(const AffineSeq& s);

enum class FamilyMode { ForallForall, ForallExistsTail, ExistsInfinite };

const char* mode_name(FamilyMode m);

struct FamilyVerdict {
  bool verdict = false;
  bool exact = false;     // false: only the box up to `bound` was searched
  bool sampled = false;   // clause form outside the linear fragment
  Nat bound = 0;
  std::optional<std::pair<Int, Int>> counterexample;  // (i, j); j unused for tail mode
  std::optional<Int> witness;                         // exists-infinite
  std::string certificate;
};

// forall-forall: every pair of distinct points is an edge
// forall-exists-tail: each s(i) is adjacent to a tail of t
// exists-infinite: some s(i) has infinitely many neighbours in t
FamilyVerdict edge_on_families(const ClauseGraph& g, const AffineSeq& s, const AffineSeq& t, FamilyMode mode,
                               Nat bound = 0);

struct OppressVerdict {
  bool oppress = false;
  bool harass = false;
  bool sampled = false;
  bool rows_cofinal = false;     // all but finitely many a see a tail of B
  bool columns_cofinal = false;  // all but finitely many b see a tail of A
  std::optional<Int> infinite_row;  // an a with infinitely many neighbours in B
  std::string certificate;
};

OppressVerdict decide_oppress(const ClauseGraph& g, const AffineSeq& a, const AffineSeq& b, Nat bound = 0);

// default bound for box searches: 2 * (sum of absolute clause constants) + 8
Nat default_bound(const ClauseGraph& g);

enum class ObstructionKind {
  RankExcluded,
  NoLayerAboveTau,
  BTailDominatedByTau,
  BTailDominatedByEveryA,
  AOppressesB
};

const char* kind_name(ObstructionKind k);

struct Template {
  std::string tau;  // symbolic layer representative
  Nat tau_component = 0;
  Nat tau_rank = 0;
  Nat j_a = 0;
  Nat i_b = 0;
  Nat l_b = 0;
};

struct ObstructionReport {
  Template tmpl;
  ObstructionKind kind = ObstructionKind::RankExcluded;
  bool exact = true;
  Nat bound = 0;
  std::string certificate;

  std::string line() const;
};

class TemplateUnresolved : public Error {
 public:
  TemplateUnresolved(Template t, std::vector<ObstructionReport> so_far);
  const Template& failed() const { return t_; }
  const std::vector<ObstructionReport>& reports() const { return so_far_; }

 private:
  Template t_;
  std::vector<ObstructionReport> so_far_;
};

// theta must be w^3 + w^2*n with n >= 1 and lie below g.delta
std::vector<ObstructionReport> claim2_suite(const ClauseGraph& g, const Ordinal& theta, Nat bound = 0);

}  // namespace ordram

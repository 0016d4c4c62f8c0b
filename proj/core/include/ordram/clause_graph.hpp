#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/colouring.hpp"
#include "ordram/constraint.hpp"
#include "ordram/structure.hpp"

namespace ordram {

struct EdgeClause {
  LayerId src;  // layer of the lower point
  LayerId dst;  // layer of the higher point
  ComparisonList constraints;

  std::string name() const;
};

struct ClauseGraph {
  Ordinal delta;
  std::vector<EdgeClause> clauses;
  bool include_cover_edges = true;
};

// DSL: "DELTA <ord>", "COVER", "EDGE (i,j)->(k,l): <comparisons>", '#' comments
ClauseGraph parse_graph(std::string_view text);
ClauseGraph read_graph_file(const std::string& path);
std::string format_graph(const ClauseGraph& g);
void validate_graph(const ClauseGraph& g);

// The triangle-free graph on w^3*2 (bundled as standard_graph.clauses)
ClauseGraph standard_graph();
const char* standard_graph_text();
ClauseGraph empty_graph(const Ordinal& delta);

bool edge(const ClauseGraph& g, const Ordinal& a, const Ordinal& b);
// names of every rule that puts (a, b) in E: "cover" or a clause name
std::vector<std::string> justify(const ClauseGraph& g, const Ordinal& a, const Ordinal& b);

std::vector<Ordinal> neighbours(const ClauseGraph& g, const Ordinal& a, const Window& w);
std::vector<std::array<Ordinal, 3>> triangle_scan(const ClauseGraph& g, const Window& w);
bool independent_check(const ClauseGraph& g, const std::vector<Ordinal>& xs);

// edge colouring: 1 on edges, 0 elsewhere
PairColouring as_colouring(const ClauseGraph& g);
CanonicalReport extract_tables(const ClauseGraph& g, const Window& w, Nat r_max);

}  // namespace ordram

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordram/errors.hpp"
#include "ordram/ordinal.hpp"

namespace ordram {

using FinSet = std::vector<Nat>;  // sorted, no duplicates

FinSet make_set(std::vector<Nat> xs);
bool is_subset(const FinSet& a, const FinSet& b);
FinSet intersect(const FinSet& a, const FinSet& b);

// Indexed sets, either materialized or pulled from a generator on demand.
class FinSetFamily {
 public:
  using Generator = std::function<std::optional<FinSet>(std::size_t)>;

  FinSetFamily() = default;
  explicit FinSetFamily(std::vector<FinSet> sets);
  // the generator returns nullopt once the stream ends; limit caps the prefix
  FinSetFamily(Generator gen, std::size_t limit);

  // number of sets available, pulling the whole prefix
  std::size_t size() const;
  const FinSet& operator[](std::size_t i) const;

 private:
  void pull() const;

  mutable std::vector<FinSet> sets_;
  Generator gen_;
  std::size_t limit_ = 0;
  mutable bool done_ = true;
};

// one set per line, whitespace separated; blank and '#' lines skipped
FinSetFamily read_family(std::istream& in);
FinSetFamily read_family_file(const std::string& path);

struct SunflowerResult {
  std::vector<std::size_t> indices;
  std::vector<FinSet> cores;
  // size of the class kept at each step, out of the candidates remaining
  std::vector<std::pair<std::size_t, std::size_t>> majority;
};

class StreamExhausted : public Error {
 public:
  StreamExhausted(const std::string& what, SunflowerResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const SunflowerResult& partial() const { return partial_; }
  std::size_t achieved() const { return partial_.indices.size(); }

 private:
  SunflowerResult partial_;
};

class NotAntichain : public Error {
 public:
  NotAntichain(std::size_t i, std::size_t j)
      : Error("sets " + std::to_string(i) + " and " + std::to_string(j) + " are comparable"), i_(i), j_(j) {}
  std::pair<std::size_t, std::size_t> pair() const { return {i_, j_}; }

 private:
  std::size_t i_, j_;
};

// Selects i_n = min B_n and keeps the candidates after it whose
// intersection with A_{i_n} is the most common one.
SunflowerResult sunflowerize(const FinSetFamily& fam, std::size_t count);

// first comparable pair in (i, j) order, if any
std::optional<std::pair<std::size_t, std::size_t>> find_comparable(const FinSetFamily& fam);

struct Distinguished {
  std::size_t index;
  Nat point;
};

std::vector<Distinguished> distinguish(const FinSetFamily& fam, std::size_t count);
// each point lies in its own set and in no other listed set
bool verify_distinguished(const FinSetFamily& fam, const std::vector<Distinguished>& d);

}  // namespace ordram

#include "ordram/antichain.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace ordram {

FinSet make_set(std::vector<Nat> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool is_subset(const FinSet& a, const FinSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

FinSet intersect(const FinSet& a, const FinSet& b) {
  FinSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FinSetFamily::FinSetFamily(std::vector<FinSet> sets) {
  for (auto& s : sets) sets_.push_back(make_set(std::move(s)));
}

FinSetFamily::FinSetFamily(Generator gen, std::size_t limit) : gen_(std::move(gen)), limit_(limit), done_(false) {}

void FinSetFamily::pull() const {
  while (!done_ && sets_.size() < limit_) {
    auto s = gen_(sets_.size());
    if (!s) break;
    sets_.push_back(make_set(std::move(*s)));
  }
  done_ = true;
}

std::size_t FinSetFamily::size() const {
  pull();
  return sets_.size();
}

const FinSet& FinSetFamily::operator[](std::size_t i) const {
  pull();
  if (i >= sets_.size()) throw OutOfRange("set index beyond the stream");
  return sets_[i];
}

FinSetFamily read_family(std::istream& in) {
  std::vector<FinSet> sets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::istringstream ls(line);
    std::vector<Nat> xs;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("not a natural number '" + tok + "' on line " + std::to_string(lineno));
      xs.push_back(std::stoull(tok));
    }
    sets.push_back(std::move(xs));
  }
  return FinSetFamily(std::move(sets));
}

FinSetFamily read_family_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  return read_family(f);
}

SunflowerResult sunflowerize(const FinSetFamily& fam, std::size_t count) {
  SunflowerResult res;
  std::vector<std::size_t> b(fam.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = i;
  while (res.indices.size() < count) {
    if (b.size() < 2)
      throw StreamExhausted("stream exhausted after " + std::to_string(res.indices.size()) + " of " +
                                std::to_string(count) + " indices",
                            std::move(res));
    const std::size_t head = b.front();
    const FinSet& ah = fam[head];
    std::map<FinSet, std::vector<std::size_t>> classes;
    for (std::size_t q = 1; q < b.size(); ++q) classes[intersect(ah, fam[b[q]])].push_back(b[q]);
    // most members, then smaller intersection, then smaller first index
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it) {
      const auto& [core, members] = *it;
      const auto& [bc, bm] = *best;
      if (members.size() != bm.size()) {
        if (members.size() > bm.size()) best = it;
      } else if (core.size() != bc.size()) {
        if (core.size() < bc.size()) best = it;
      } else if (members.front() < bm.front()) {
        best = it;
      }
    }
    res.indices.push_back(head);
    res.cores.push_back(best->first);
    res.majority.emplace_back(best->second.size(), b.size() - 1);
    b = std::move(best->second);
  }
  return res;
}

std::optional<std::pair<std::size_t, std::size_t>> find_comparable(const FinSetFamily& fam) {
  const std::size_t n = fam.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const FinSet &a = fam[i], &b = fam[j];
      if (a.size() <= b.size() ? is_subset(a, b) : is_subset(b, a)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool verify_distinguished(const FinSetFamily& fam, const std::vector<Distinguished>& d) {
  for (std::size_t p = 0; p < d.size(); ++p) {
    const FinSet& own = fam[d[p].index];
    if (!std::binary_search(own.begin(), own.end(), d[p].point)) return false;
    for (std::size_t q = 0; q < d.size(); ++q) {
      if (q == p) continue;
      if (d[q].index == d[p].index) return false;
      const FinSet& other = fam[d[q].index];
      if (std::binary_search(other.begin(), other.end(), d[p].point)) return false;
    }
  }
  return true;
}

std::vector<Distinguished> distinguish(const FinSetFamily& fam, std::size_t count) {
  if (auto bad = find_comparable(fam)) throw NotAntichain(bad->first, bad->second);
  SunflowerResult sf = sunflowerize(fam, count);
  std::vector<Distinguished> out;
  for (std::size_t p = 0; p < sf.indices.size(); ++p) {
    const FinSet& a = fam[sf.indices[p]];
    FinSet rest;
    std::set_difference(a.begin(), a.end(), sf.cores[p].begin(), sf.cores[p].end(), std::back_inserter(rest));
    if (rest.empty()) throw Error("selected set equals its core");
    out.push_back({sf.indices[p], rest.front()});
  }
  if (!verify_distinguished(fam, out)) throw Error("distinguishing points failed re-verification");
  return out;
}

}  // namespace ordram

#include "cpg/intervals.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace cpg {

namespace {

// Depth-first over subfamilies, carrying the running intersection. Once the
// intersection is empty every superset is too.
bool all_subsets_odd(const IntervalSet& s, std::size_t next, const Interval& acc) {
  for (std::size_t k = next; k < s.size(); ++k) {
    auto meet = intersect(acc, s[k]);
    if (!meet) continue;
    if (meet->size() % 2 == 0) return false;
    if (!all_subsets_odd(s, k + 1, *meet)) return false;
  }
  return true;
}

}  // namespace

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval out{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (out.lo > out.hi) return std::nullopt;
  return out;
}

IntervalSet read_intervals(std::istream& in) {
  IntervalSet out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    Interval iv;
    std::string junk;
    if (!(row >> iv.lo >> iv.hi) || (row >> junk)) {
      throw InputError("line " + std::to_string(lineno) + ": expected 'a b'");
    }
    if (iv.lo > iv.hi) throw InputError("line " + std::to_string(lineno) + ": empty interval");
    out.push_back(iv);
  }
  return out;
}

IntervalSet parse_intervals(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_intervals(in);
}

Graph interval_graph(const IntervalSet& s) {
  GraphBuilder b(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].lo > s[i].hi) throw InputError("empty interval");
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (intersect(s[i], s[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return std::move(b).build();
}

bool is_odd_intersection_pairwise(const IntervalSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() % 2 == 0) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      auto meet = intersect(s[i], s[j]);
      if (meet && meet->size() % 2 == 0) return false;
    }
  }
  return true;
}

bool is_odd_intersection(const IntervalSet& s) {
  if (s.size() > 20) return is_odd_intersection_pairwise(s);
  const Interval everything{INT64_MIN / 4, INT64_MAX / 4};
  return all_subsets_odd(s, 0, everything);
}

bool check_parity_lemma(const IntervalSet& s) {
  if (!is_odd_intersection(s)) {
    throw PreconditionError("interval family is not an odd intersection family");
  }
  const Graph g = interval_graph(s);
  for (const auto& comp : connected_components(g)) {
    // Connected intervals cover a single interval with no gaps.
    Interval hull = s[comp.front()];
    for (int i : comp) {
      hull.lo = std::min(hull.lo, s[i].lo);
      hull.hi = std::max(hull.hi, s[i].hi);
    }
    if (hull.size() % 2 == 0) return false;
  }
  return true;
}

IntervalSet merge_intervals(const IntervalSet& s, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= static_cast<int>(s.size()) ||
      j >= static_cast<int>(s.size())) {
    throw InputError("merge_intervals: bad interval indices");
  }
  if (!intersect(s[i], s[j])) throw InputError("merge_intervals: intervals do not meet");
  const int keep = std::min(i, j);
  const int drop = std::max(i, j);
  IntervalSet out = s;
  out[keep] = {std::min(s[i].lo, s[j].lo), std::max(s[i].hi, s[j].hi)};
  out.erase(out.begin() + drop);
  return out;
}

}  // namespace cpg

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecgraph/core.hpp"

namespace support {

// Closed walk through named vertices; each consecutive pair must be joined by edges of one colour.
inline ecg::Trail closed_walk(const ecg::Graph& g, const std::vector<std::string>& names) {
  ecg::ColourMatrix cm(g);
  std::vector<int> vs;
  std::vector<ecg::Colour> cs;
  for (size_t i = 0; i < names.size(); ++i) {
    int a = g.vertex(names[i]), b = g.vertex(names[(i + 1) % names.size()]);
    vs.push_back(a);
    auto c = cm.mono(a, b);
    if (!c) throw std::invalid_argument("pair without a unique colour: " + names[i]);
    cs.push_back(*c);
  }
  auto t = ecg::realize_closed_walk(g, vs, cs);
  if (!t) throw std::invalid_argument("walk not realizable");
  return *t;
}

inline std::vector<int> sorted_vertices(const ecg::Graph& g, const ecg::Trail& t) {
  auto vs = ecg::trail_vertices(g, t);
  if (t.closed) vs.pop_back();
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace support

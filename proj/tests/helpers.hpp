#pragma once

#include <initializer_list>
#include <vector>

#include "cagekit/cage.hpp"

namespace th {

inline cagekit::Field Q() { return cagekit::Field::rationals(); }
inline cagekit::FieldElement r(long n, long d = 1) { return Q().from_rational(cagekit::normalize(n, d)); }

inline cagekit::Vector vec(std::initializer_list<long> values) {
  cagekit::Vector v;
  for (long x : values) v.push_back(r(x));
  return v;
}

inline cagekit::Cage axis(const std::vector<std::vector<long>>& points) {
  std::vector<cagekit::Vector> pts;
  for (const auto& p : points) {
    cagekit::Vector v;
    for (long x : p) v.push_back(r(x));
    pts.push_back(std::move(v));
  }
  return cagekit::axis_cage(Q(), pts);
}

inline cagekit::Cage square() { return axis({{0, 0}, {1, 1}}); }

inline cagekit::MultiIndex idx(std::initializer_list<int> e) { return cagekit::MultiIndex{std::vector<int>(e)}; }

// The (n, d) pairs exercised by the random suites.
inline const std::vector<std::pair<int, int>>& sizes() {
  static const std::vector<std::pair<int, int>> s{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}};
  return s;
}

}  // namespace th

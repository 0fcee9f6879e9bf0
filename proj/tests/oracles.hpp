#pragma once
// Slope arithmetic on the once-punctured torus, independent of the library's
// intersection code. Edges 0, 1, 2 of the reference cells carry slopes 1/0,
// 0/1, 1/1, so a slope p/q has normal weights (|q|, |p|, |p - q|).

#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Slope = std::pair<long, long>; // (p, q), q > 0 or (1, 0)

inline Slope normal(long p, long q) {
  long g = std::gcd(p, q);
  if (g) p /= g, q /= g;
  if (q < 0 || (q == 0 && p < 0)) p = -p, q = -q;
  return {p, q};
}

inline std::vector<int> weightsOf(Slope s) {
  return {int(std::labs(s.second)), int(std::labs(s.first)), int(std::labs(s.first - s.second))};
}

inline Slope slopeOf(const std::vector<int>& w) {
  long q = w[0], p = w[1];
  if (w[2] != std::labs(p - q)) p = -p; // opposite signs add up on the diagonal edge
  return normal(p, q);
}

inline long det(Slope a, Slope b) { return std::labs(a.first * b.second - a.second * b.first); }

inline int weightBound(Slope s) {
  auto w = weightsOf(s);
  return std::max({w[0], w[1], w[2]});
}

// ball in the Farey graph restricted to slopes of weight <= bound
struct FareyBall {
  std::set<Slope> vertices;
  std::set<std::pair<Slope, Slope>> edges; // ordered pairs, first < second
};

inline FareyBall fareyBall(Slope base, int bound, int radius) {
  std::vector<Slope> all;
  for (long q = 0; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Slope s = normal(p, q);
      if (s != Slope{p, q}) continue;
      if (weightBound(s) <= bound) all.push_back(s);
    }
  std::map<Slope, int> depth{{base, 0}};
  std::deque<Slope> queue{base};
  while (!queue.empty()) {
    Slope u = queue.front();
    queue.pop_front();
    if (depth[u] == radius) continue;
    for (auto& v : all)
      if (det(u, v) == 1 && !depth.count(v)) depth[v] = depth[u] + 1, queue.push_back(v);
  }
  FareyBall b;
  for (auto& [s, d] : depth) b.vertices.insert(s);
  for (auto& u : b.vertices)
    for (auto& v : b.vertices)
      if (u < v && det(u, v) == 1) b.edges.insert({u, v});
  return b;
}

// n-th power of the twist about v acting on x, with orientation sign eps
inline Slope twist(Slope v, Slope x, long n, int eps) {
  long d = v.first * x.second - v.second * x.first;
  return normal(x.first + eps * n * d * v.first, x.second + eps * n * d * v.second);
}

} // namespace oracle

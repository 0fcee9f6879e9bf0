#include "curvelab/lab.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/distance.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/pants.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

namespace curvelab {

using nlohmann::json;

namespace {

std::vector<NormalMulticurve> components(const NormalMulticurve& m) {
  std::vector<NormalMulticurve> out;
  for (int k = 0; k < m.size(); ++k) out.push_back(m.size() == 1 ? m : m.component(k));
  return out;
}

long totalIntersection(const NormalMulticurve& a, const NormalMulticurve& b) {
  long s = 0;
  for (auto& x : components(a))
    for (auto& y : components(b)) s += intersectionNumber(x, y);
  return s;
}

NormalMulticurve power(const TwistWord& f, const NormalMulticurve& c, int j) {
  TwistWord g = j < 0 ? f.inverse() : f;
  NormalMulticurve out = c;
  for (int k = 0; k < std::abs(j); ++k) out = applyTwist(g, out);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// pants ball around the axis basepoint, shared by the probes of one process
const AxisPath& cachedAxisPath(int bound, int radius) {
  static std::map<std::pair<int, int>, std::unique_ptr<AxisPath>> cache;
  auto& slot = cache[{bound, radius}];
  if (!slot) slot = std::make_unique<AxisPath>(localAxisPath(buildAxis(1), bound, radius));
  return *slot;
}

} // namespace

AxisSegment buildAxis(int n) {
  if (n < 1) throw LabError(Err::InvalidDescriptor, "axis needs n >= 1");
  const PseudoAnosovSeed& seed = pseudoAnosovSeed();
  AxisSegment a;
  a.n = n;
  a.f = seed.up;
  NormalMulticurve a0 = liftCurve(seed.alpha0);
  for (int j = -n; j <= n + 1; ++j) a.alpha.push_back(power(a.f, a0, j));
  // alpha_0 extended by alpha_1, the marking fills in what alpha_1 misses
  std::vector<NormalMulticurve> order{a.alpha[n + 1]};
  for (auto& m : markingCurves(puncturedCells())) order.push_back(m);
  NormalMulticurve p0 = extendMulticurve(a0, order);
  for (int j = -n; j <= n; ++j) a.pants.push_back(power(a.f, p0, j));
  return a;
}

Report axisBuildDriver(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "axis-build";
  const PseudoAnosovSeed& seed = pseudoAnosovSeed();
  int n = cfg.steps < 3 ? 3 : cfg.steps;
  AxisSegment axis = buildAxis(n);
  int i01 = intersectionNumber(applyTwist(seed.down, seed.alpha0), seed.alpha0);
  r.table.push_back({"j", "pants", "closed image", "contains alpha_j", "X region", "f P_j = P_j+1", "max weight"});
  json rows = json::array();
  bool allOk = i01 == 4;
  NormalMulticurve alphaDown = power(seed.down, seed.alpha0, -n);
  for (int j = -n; j <= n; ++j, alphaDown = applyTwist(seed.down, alphaDown)) {
    const NormalMulticurve& p = axis.at(j);
    bool pants = isPantsDecomposition(p);
    NormalMulticurve down = s20MergeParallel(forgetBoundary(p));
    auto dc = components(down);
    bool closedPants = dc.size() == 3;
    for (size_t a = 0; a < dc.size() && closedPants; ++a)
      for (size_t b = a + 1; b < dc.size(); ++b)
        if (intersectionNumber(dc[a], dc[b]) != 0 || s20SameClass(dc[a], dc[b])) closedPants = false;
    bool hasAlpha = false;
    for (auto& c : dc) hasAlpha = hasAlpha || s20SameClass(c, alphaDown);
    bool region = regionContains(axis.alpha[j + n], p) && xRegionContains(alphaDown, p);
    bool translate = true;
    if (j < n) translate = applyTwist(axis.f, p).weights == axis.at(j + 1).weights;
    bool ok = pants && closedPants && hasAlpha && region && translate;
    allOk = allOk && ok;
    rows.push_back({{"j", j},
                    {"pants", pants},
                    {"closed_pants", closedPants},
                    {"contains_alpha", hasAlpha},
                    {"region", region},
                    {"translate", translate},
                    {"max_weight", maxWeight(p)}});
    r.table.push_back({std::to_string(j), pants ? "yes" : "no", closedPants ? "3 curves" : "no",
                       hasAlpha ? "yes" : "no", region ? "yes" : "no", j < n ? (translate ? "yes" : "no") : "-",
                       std::to_string(maxWeight(p))});
  }
  // forgetting the puncture commutes with the lifted map
  const auto& pool = enumerateCurves(puncturedCells().sig, cfg.weightBound, CurveFilter::All, cfg.cap);
  int commuteFail = 0;
  for (auto& c : pool)
    if (!s20SameClass(forgetBoundary(applyTwist(seed.up, c)), applyTwist(seed.down, forgetBoundary(c)))) ++commuteFail;
  allOk = allOk && commuteFail == 0;
  r.pass = allOk;
  r.data = {{"config", configJson(cfg)},
            {"map", seed.up.str()},
            {"i_f_alpha0_alpha0", i01},
            {"segment", rows},
            {"commute_checked", pool.size()},
            {"commute_failures", commuteFail},
            {"basepoint", fingerprint(axis.at(0))}};
  r.notes.push_back("i(f(alpha_0), alpha_0) = " + std::to_string(i01) + " on the closed surface");
  r.notes.push_back("forgetting the puncture commutes with the map on " + std::to_string(pool.size()) +
                    " curves, failures " + std::to_string(commuteFail));
  return r;
}

AxisPath localAxisPath(const AxisSegment& axis, int bound, int radius) {
  AxisPath path;
  path.radius = radius;
  path.snap = buildPantsSnapshot(axis.at(0), bound, radius);
  const GraphSnapshot& s = path.snap;
  path.vertex.assign(2 * radius + 1, -1);
  path.vertex[radius] = 0;
  const NormalMulticurve& ahead = axis.at(1);
  const NormalMulticurve& behind = axis.at(-1);
  // forward half: step outward toward P_1
  for (int k = 1; k <= radius; ++k) {
    int cur = path.vertex[radius + k - 1], best = -1;
    std::tuple<long, std::vector<int>> bestKey;
    for (int w : s.adj[cur]) {
      if (s.depth[w] != k) continue;
      std::tuple<long, std::vector<int>> key{totalIntersection(s.vertices[w], ahead), fingerprint(s.vertices[w])};
      if (best < 0 || key < bestKey) best = w, bestKey = key;
    }
    if (best < 0) break;
    path.vertex[radius + k] = best;
  }
  // backward half: as far from the forward point as the snapshot allows, then toward P_-1
  for (int k = 1; k <= radius; ++k) {
    int cur = path.vertex[radius - k + 1], best = -1;
    if (cur < 0 || path.vertex[radius + k] < 0) break;
    auto dAhead = s.distancesFrom(path.vertex[radius + k]);
    std::tuple<int, long, std::vector<int>> bestKey;
    for (int w : s.adj[cur]) {
      if (s.depth[w] != k) continue;
      std::tuple<int, long, std::vector<int>> key{-dAhead[w], totalIntersection(s.vertices[w], behind),
                                                  fingerprint(s.vertices[w])};
      if (best < 0 || key < bestKey) best = w, bestKey = key;
    }
    if (best < 0) break;
    path.vertex[radius - k] = best;
  }
  return path;
}

DivergenceRow divergenceProbe(const AxisPath& path, int r, int epsNum, int epsDen) {
  if (r < 0 || r > path.radius || path.at(r) < 0 || path.at(-r) < 0)
    throw LabError(Err::RadiusExceedsSnapshot,
                   "r = " + std::to_string(r) + " but the snapshot radius is " + std::to_string(path.radius));
  const GraphSnapshot& s = path.snap;
  DivergenceRow row;
  row.r = r;
  row.forbidden = (epsNum * r + epsDen - 1) / epsDen; // ceil(eps r)
  int from = path.at(-r), to = path.at(r);
  row.distance = s.distancesFrom(from)[to];
  row.slack = 2 * r - row.distance;
  auto d0 = s.distancesFrom(path.at(0));
  std::vector<char> gone(s.vertices.size(), 0);
  for (size_t v = 0; v < s.vertices.size(); ++v)
    if (d0[v] < row.forbidden) gone[v] = 1, ++row.removed;
  if (gone[from] || gone[to]) return row;
  std::vector<int> d(s.vertices.size(), -1);
  std::deque<int> q{from};
  d[from] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : s.adj[u])
      if (!gone[w] && d[w] < 0) d[w] = d[u] + 1, q.push_back(w);
  }
  row.detour = d[to];
  return row;
}

Report divergenceDriver(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "axis-diverge";
  const AxisPath& path = cachedAxisPath(cfg.weightBound, cfg.radius);
  r.table.push_back({"r", "forbidden radius", "removed", "d(g(-r),g(r))", "slack", "detour", ">= 2r - slack"});
  json rows = json::array();
  bool ok = true;
  int last = -1;
  bool seenUnreachable = false;
  std::vector<double> xs, ys;
  int top = std::max(1, cfg.radius - 1);
  for (int k = 1; k <= top; ++k) {
    DivergenceRow row = divergenceProbe(path, k, cfg.epsNum, cfg.epsDen);
    bool defined = row.detour >= 0;
    bool lower = defined && row.detour >= 2 * k - row.slack;
    if (!defined) seenUnreachable = true;
    if (defined && seenUnreachable) ok = false; // reachable after an unreachable row
    if (!defined || !lower || row.detour < last) ok = false;
    if (defined) last = row.detour, xs.push_back(std::log(double(k))), ys.push_back(std::log(double(row.detour)));
    rows.push_back({{"r", k},
                    {"forbidden", row.forbidden},
                    {"removed", row.removed},
                    {"distance", row.distance},
                    {"slack", row.slack},
                    {"detour", defined ? json(row.detour) : json("unreachable")}});
    r.table.push_back({std::to_string(k), std::to_string(row.forbidden), std::to_string(row.removed),
                       std::to_string(row.distance), std::to_string(row.slack),
                       defined ? std::to_string(row.detour) : "unreachable", lower ? "yes" : "no"});
  }
  double exponent = NAN;
  if (xs.size() >= 2) exponent = upperEnvelope(xs, ys).slope;
  r.pass = ok;
  json verts = json::array();
  for (int v : path.vertex) verts.push_back(v < 0 ? json(nullptr) : json(fingerprint(path.snap.vertices[v])));
  r.data = {{"config", configJson(cfg)},
            {"snapshot", path.snap.digest()},
            {"snapshot_vertices", path.snap.vertices.size()},
            {"path", verts},
            {"rows", rows},
            {"fitted_exponent", std::isnan(exponent) ? json(nullptr) : json(std::round(exponent * 1e3) / 1e3)}};
  r.notes.push_back("gamma is a snapshot path from P_0 toward P_1 and P_-1, one BFS layer per step");
  r.notes.push_back("fitted exponent " + (std::isnan(exponent) ? std::string("n/a") : fmt(exponent)) +
                    " is informational only; a finite table says nothing about asymptotic divergence");
  return r;
}

Report contractionDriver(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "axis-contract";
  const AxisPath& path = cachedAxisPath(cfg.weightBound, cfg.radius);
  const GraphSnapshot& s = path.snap;
  int k = std::max(1, cfg.radius - 1);
  std::vector<int> axisV;
  for (int j = -k; j <= k; ++j)
    if (path.at(j) >= 0) axisV.push_back(path.at(j));
  // distances from each axis vertex
  std::vector<std::vector<int>> fromAxis;
  for (int v : axisV) fromAxis.push_back(s.distancesFrom(v));
  std::set<int> onAxis(axisV.begin(), axisV.end());
  std::vector<int> off;
  for (size_t v = 0; v < s.vertices.size(); ++v)
    if (!onAxis.count(int(v))) off.push_back(int(v));
  std::shuffle(off.begin(), off.end(), std::mt19937_64(cfg.seed));
  if (int(off.size()) > cfg.samples) off.resize(cfg.samples);
  struct Proj {
    int dist = -1, point = -1, setDiam = 0;
  };
  auto project = [&](int x) {
    Proj p;
    std::vector<int> best;
    for (size_t a = 0; a < axisV.size(); ++a) {
      int d = fromAxis[a][x];
      if (d < 0) continue;
      if (p.dist < 0 || d < p.dist) p.dist = d, best.clear();
      if (d == p.dist) best.push_back(int(a));
    }
    if (best.empty()) return p;
    p.point = best.front(); // ties go to the smaller parameter
    for (int a : best)
      for (int b : best) p.setDiam = std::max(p.setDiam, fromAxis[a][axisV[b]]);
    return p;
  };
  int selfCheck = 0;
  for (size_t a = 0; a < axisV.size(); ++a)
    if (project(axisV[a]).point != int(a)) ++selfCheck;
  std::vector<Proj> proj;
  for (int x : off) proj.push_back(project(x));
  int maxSet = 0;
  for (auto& p : proj) maxSet = std::max(maxSet, p.setDiam);
  // pairs with d(x, y) <= d(x, axis) / 2
  int pairs = 0, c = 0;
  for (size_t a = 0; a < off.size(); ++a) {
    if (proj[a].point < 0) continue;
    auto dx = s.distancesFrom(off[a]);
    for (size_t b = 0; b < off.size(); ++b) {
      if (a == b || proj[b].point < 0 || dx[off[b]] < 0 || 2 * dx[off[b]] > proj[a].dist) continue;
      ++pairs;
      c = std::max(c, fromAxis[proj[a].point][axisV[proj[b].point]]);
    }
  }
  // projections of the axis vertices to separating subsurfaces
  std::vector<Subsurface> ys;
  for (auto& y : subsurfaceUniverse(puncturedCells().sig, cfg.universeBound))
    if (!y.frontier.empty() && classifySubsurface(y.desc) == SubsurfaceKind::Separating) ys.push_back(y);
  ProjectionDistances pd(cfg.universeBound);
  int maxDiam = 0, uncertified = 0, empty = 0, refinedCount = 0;
  std::map<int, int> hist;
  for (auto& y : ys) {
    std::vector<NormalMulticurve> all;
    std::set<std::vector<int>> seen;
    for (int v : axisV)
      for (auto& c2 : pd.projection(y, s.vertices[v]))
        if (seen.insert(c2.weights).second) all.push_back(c2);
    if (all.empty()) {
      ++empty;
      continue;
    }
    int d = pd.graph(y).diameter(all);
    for (int extra = 1; d < 0 && extra <= 2; ++extra) {
      CurveGraphIn bigger(y, cfg.universeBound + extra);
      d = bigger.diameter(all);
      if (d >= 0) ++refinedCount;
    }
    if (d < 0) {
      ++uncertified;
      continue;
    }
    ++hist[d];
    maxDiam = std::max(maxDiam, d);
  }
  r.pass = selfCheck == 0 && uncertified == 0 && !ys.empty();
  json h = json::object();
  for (auto& [d, n] : hist) h[std::to_string(d)] = n;
  r.data = {{"config", configJson(cfg)},
            {"snapshot", s.digest()},
            {"axis_vertices", axisV.size()},
            {"sampled_off_axis", off.size()},
            {"axis_self_projection_failures", selfCheck},
            {"max_projection_set_diameter", maxSet},
            {"ball_pairs", pairs},
            {"fitted_b", 0.5},
            {"fitted_c", c},
            {"separating_subsurfaces", ys.size()},
            {"missed_by_axis", empty},
            {"uncertified", uncertified},
            {"refined_on_larger_pool", refinedCount},
            {"max_projection_diameter", maxDiam},
            {"projection_diameter_histogram", h}};
  r.table = {{"quantity", "value"},
             {"axis vertices", std::to_string(axisV.size())},
             {"sampled points off the axis", std::to_string(off.size())},
             {"max nearest-point set diameter", std::to_string(maxSet)},
             {"pairs with d(x,y) <= d(x,axis)/2", std::to_string(pairs)},
             {"c (projection moves, b = 1/2)", std::to_string(c)},
             {"separating subsurfaces", std::to_string(ys.size())},
             {"  missed by the axis", std::to_string(empty)},
             {"  connected only on a larger pool", std::to_string(refinedCount)},
             {"  not connected at the bound", std::to_string(uncertified)},
             {"recorded constant: max diam pi_Y(axis)", std::to_string(maxDiam)}};
  return r;
}

int pantsDistanceSearch(const NormalMulticurve& from, const NormalMulticurve& to, int bound, int maxRadius) {
  if (from.weights == to.weights) return 0;
  std::set<std::vector<int>> seen{from.weights};
  std::vector<NormalMulticurve> layer{from};
  for (int d = 1; d <= maxRadius && !layer.empty(); ++d) {
    std::vector<NormalMulticurve> next;
    for (auto& p : layer)
      for (auto& q : pantsNeighbors(p, bound)) {
        if (q.weights == to.weights) return d;
        if (seen.insert(q.weights).second) next.push_back(q);
      }
    layer = std::move(next);
  }
  return -1;
}

Report thickChainDriver(const ExperimentConfig& cfg) {
  AxisSegment axis = buildAxis(1);
  return thickChainWitness(axis.alpha[1], axis.alpha[2], cfg);
}

Report thickChainWitness(const NormalMulticurve& alpha, const NormalMulticurve& alphaP, const ExperimentConfig& cfg) {
  Report r;
  r.driver = "axis-chain";
  if (alpha.tri != &puncturedCells() || alphaP.tri != &puncturedCells())
    throw LabError(Err::SurfaceMismatch, "chain witness runs on S2,1");
  if (!isSeparatingMulticurve(alpha) || !isSeparatingMulticurve(alphaP) || alpha.size() != 1 || alphaP.size() != 1)
    throw LabError(Err::NotSeparating, "chain witness needs two separating curves");
  int i = intersectionNumber(alpha, alphaP);
  if (i != 4) throw LabError(Err::WrongIntersection, "chain needs i = 4, got " + std::to_string(i));
  // P1 = alpha extended by alpha' and then the marking; P1' = alpha' extended by P1
  std::vector<NormalMulticurve> first{alphaP};
  for (auto& m : markingCurves(puncturedCells())) first.push_back(m);
  NormalMulticurve p1 = extendMulticurve(alpha, first);
  std::vector<NormalMulticurve> order = components(p1);
  NormalMulticurve p1p = extendMulticurve(alphaP, order);
  NormalMulticurve alphaDown = forgetBoundary(alpha), alphaPDown = forgetBoundary(alphaP);
  int bound = std::max({cfg.weightBound, maxWeight(p1), maxWeight(p1p)});
  int maxR = std::max(cfg.radius, 1);
  int d0 = pantsDistanceSearch(p1, p1p, bound, maxR);
  bool ok = d0 >= 0 && xRegionContains(alphaDown, p1) && xRegionContains(alphaPDown, p1p);
  // the push word with the smallest images
  const Triangulation& tri = puncturedCells();
  TwistWord g;
  int gWeight = -1;
  for (int e = 0; e < tri.nedges(); ++e) {
    TwistWord w;
    try {
      w = pointPush(tri, edgeLoop(tri, e), 1, std::to_string(e));
    } catch (const LabError&) {
      continue;
    }
    int m = std::max(maxWeight(applyTwist(w, p1)), maxWeight(applyTwist(w, p1p)));
    if (gWeight < 0 || m < gWeight) gWeight = m, g = w;
  }
  json rows = json::array();
  r.table.push_back({"n", "max weight", "bound", "d(g^n P1, g^n P1')", "g^n P1 in X_alpha", "g^n P1' in X_alpha'"});
  r.table.push_back({"0", std::to_string(std::max(maxWeight(p1), maxWeight(p1p))), std::to_string(bound),
                     d0 < 0 ? "unreached" : std::to_string(d0), "yes", "yes"});
  rows.push_back({{"n", 0}, {"distance", d0}, {"bound", bound}});
  NormalMulticurve q = p1, qp = p1p;
  for (int n = 1; n <= cfg.steps && d0 >= 0; ++n) {
    q = applyTwist(g, q), qp = applyTwist(g, qp);
    int b = std::max({bound, maxWeight(q), maxWeight(qp)});
    int d = pantsDistanceSearch(q, qp, b, d0);
    bool inX = xRegionContains(alphaDown, q), inXp = xRegionContains(alphaPDown, qp);
    ok = ok && d == d0 && inX && inXp;
    rows.push_back({{"n", n}, {"distance", d}, {"bound", b}, {"in_x_alpha", inX}, {"in_x_alpha_prime", inXp}});
    r.table.push_back({std::to_string(n), std::to_string(std::max(maxWeight(q), maxWeight(qp))), std::to_string(b),
                       d < 0 ? "not within D" : std::to_string(d), inX ? "yes" : "no", inXp ? "yes" : "no"});
  }
  r.pass = ok;
  r.data = {{"config", configJson(cfg)},
            {"i_alpha_alpha_prime", i},
            {"push", g.str()},
            {"D", d0},
            {"rows", rows},
            {"p1", fingerprint(p1)},
            {"p1_prime", fingerprint(p1p)}};
  r.notes.push_back("P1 extends alpha by alpha' and the marking; P1' extends alpha' by the curves of P1");
  return r;
}

} // namespace curvelab

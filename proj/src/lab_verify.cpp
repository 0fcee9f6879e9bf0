#include "curvelab/lab.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/distance.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/pants.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace curvelab {

using nlohmann::json;

namespace {

std::string str(double x, int prec = 3) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

// rounded so the text in the bundle does not depend on printing digits
double rounded(double x) { return std::isnan(x) ? x : std::round(x * 1e6) / 1e6; }
json num(double x) { return std::isnan(x) ? json(nullptr) : json(rounded(x)); }

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  size_t below(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(g); }
};

NormalMulticurve emptyOn(const Triangulation& tri) {
  NormalMulticurve e;
  e.tri = &tri;
  e.weights.assign(tri.nedges(), 0);
  return e;
}

NormalMulticurve markingPants(SurfaceSig sig) {
  const Triangulation& tri = referenceTriangulation(sig);
  return extendMulticurve(emptyOn(tri), markingCurves(tri));
}

std::string fpText(const NormalMulticurve& c) {
  std::string s;
  for (int x : fingerprint(c)) s += (s.empty() ? "" : ".") + std::to_string(x);
  return s;
}

// labels of the separating components; the merged image downstairs when there are none
std::string multicurveLabel(const NormalMulticurve& m) {
  std::set<std::string> labels;
  for (int k = 0; k < m.size(); ++k) {
    NormalMulticurve c = m.size() == 1 ? m : m.component(k);
    if (isSeparatingMulticurve(c)) labels.insert(labelComponent(c));
  }
  if (labels.empty()) return "merged:" + fpText(s20MergeParallel(forgetBoundary(m)));
  std::string s;
  for (auto& l : labels) s += (s.empty() ? "" : "|") + l;
  return s;
}

} // namespace

Report verifyFarey(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "farey";
  const Triangulation& tri = referenceTriangulation({1, 1});
  // the curve parallel to each edge; slopes 1/0, 0/1, 1/1 are assigned to edges 0, 1, 2
  std::vector<NormalMulticurve> edgeCurve;
  for (int e = 0; e < 3; ++e) {
    std::vector<int> w{1, 1, 1};
    w[e] = 0;
    edgeCurve.push_back(canonicalize(w, tri));
  }
  auto slopeOf = [&](const NormalMulticurve& c) {
    long q = intersectionNumber(c, edgeCurve[0]), p = intersectionNumber(c, edgeCurve[1]);
    long d = intersectionNumber(c, edgeCurve[2]);
    if (d != std::labs(p - q)) p = -p;
    if (q == 0) p = 1;
    return std::make_pair(p, q);
  };
  auto& base = enumerateCurves({1, 1}, 1).front();
  GraphSnapshot s = buildCurveSnapshot(base, cfg.weightBound, cfg.radius);
  std::set<std::pair<long, long>> slopes;
  std::vector<std::pair<long, long>> sl;
  for (auto& v : s.vertices) {
    sl.push_back(slopeOf(v));
    slopes.insert(sl.back());
  }
  int badEdges = 0, missingEdges = 0;
  for (size_t u = 0; u < sl.size(); ++u)
    for (size_t v = u + 1; v < sl.size(); ++v) {
      long det = std::labs(sl[u].first * sl[v].second - sl[u].second * sl[v].first);
      bool edge = std::binary_search(s.adj[u].begin(), s.adj[u].end(), int(v));
      if (edge && det != 1) ++badEdges;
      if (!edge && det == 1) ++missingEdges;
    }
  // intersection against the determinant on seeded slope pairs
  Rng rng(cfg.seed);
  int pairs = 0, wrong = 0;
  auto curveOf = [&](long p, long q) {
    std::vector<int> w{int(std::labs(q)), int(std::labs(p)), int(std::labs(p - q))};
    return canonicalize(w, tri);
  };
  while (pairs < 200) {
    long p = long(rng.below(41)) - 20, q = long(rng.below(21)), a = long(rng.below(41)) - 20, b = long(rng.below(21));
    if (std::gcd(p, q) != 1 || std::gcd(a, b) != 1) continue;
    long det = std::labs(p * b - q * a);
    if (intersectionNumber(curveOf(p, q), curveOf(a, b)) != det) ++wrong;
    ++pairs;
  }
  r.pass = slopes.size() == s.vertices.size() && badEdges == 0 && missingEdges == 0 && wrong == 0;
  r.data = {{"snapshot", s.digest()},
            {"vertices", s.vertices.size()},
            {"edges", s.edgeCount()},
            {"distinct_slopes", slopes.size()},
            {"edges_without_unit_determinant", badEdges},
            {"unit_determinant_non_edges", missingEdges},
            {"slope_pairs", pairs},
            {"intersection_mismatches", wrong}};
  r.table = {{"vertices", "edges", "bad edges", "missing edges", "slope pairs", "mismatches"},
             {std::to_string(s.vertices.size()), std::to_string(s.edgeCount()), std::to_string(badEdges),
              std::to_string(missingEdges), std::to_string(pairs), std::to_string(wrong)}};
  return r;
}

Report verifyProjectionDiameter(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "projection-diameter";
  Rng rng(cfg.seed);
  int quota = (cfg.samples + int(cfg.surfaces.size()) - 1) / int(cfg.surfaces.size());
  r.table.push_back({"surface", "samples", "uncertified", "refined", "max diam", "diam 0/1/2/3", "violations"});
  json rows = json::array();
  for (SurfaceSig sig : cfg.surfaces) {
    const auto& pool = enumerateCurves(sig, cfg.weightBound, CurveFilter::All, cfg.cap);
    std::vector<Subsurface> ys;
    for (auto& y : subsurfaceUniverse(sig, cfg.universeBound))
      if (!y.frontier.empty()) ys.push_back(y);
    ProjectionDistances pd(cfg.weightBound);
    std::map<std::pair<std::string, int>, std::unique_ptr<CurveGraphIn>> refined;
    std::set<std::pair<size_t, size_t>> seen;
    int taken = 0, uncertified = 0, violations = 0, maxDiam = 0, refinedCount = 0;
    std::vector<int> hist(4);
    for (long attempt = 0; taken < quota && attempt < 200L * quota && !ys.empty(); ++attempt) {
      size_t a = rng.below(pool.size()), y = rng.below(ys.size());
      if (!seen.insert({a, y}).second) continue;
      const auto& proj = pd.projection(ys[y], pool[a]);
      if (proj.empty() || curveInside(pool[a], ys[y].desc)) continue; // only curves that cut Y
      int d = pd.graph(ys[y]).diameter(proj);
      // a bounded graph only overestimates distance; refine on larger pools before judging
      for (int extra = 1; (d < 0 || d > 3) && extra <= 2; ++extra) {
        auto& g = refined[{ys[y].key, cfg.weightBound + extra}];
        if (!g) g = std::make_unique<CurveGraphIn>(ys[y], cfg.weightBound + extra);
        int e = g->diameter(proj);
        if (e >= 0 && (d < 0 || e < d)) d = e, ++refinedCount;
      }
      if (d < 0) {
        ++uncertified;
        continue;
      }
      ++taken;
      maxDiam = std::max(maxDiam, d);
      if (d > 3) ++violations;
      else ++hist[d];
    }
    if (taken < quota) r.pass = false;
    if (violations) r.pass = false;
    rows.push_back({{"surface", sig.str()},
                    {"samples", taken},
                    {"uncertified", uncertified},
                    {"max_diameter", maxDiam},
                    {"histogram", hist},
                    {"violations", violations},
                    {"refined_on_larger_pool", refinedCount},
                    {"subsurfaces", ys.size()}});
    r.table.push_back({sig.str(), std::to_string(taken), std::to_string(uncertified), std::to_string(refinedCount),
                       std::to_string(maxDiam),
                       std::to_string(hist[0]) + "/" + std::to_string(hist[1]) + "/" + std::to_string(hist[2]) + "/" +
                           std::to_string(hist[3]),
                       std::to_string(violations)});
  }
  r.data = {{"config", configJson(cfg)}, {"rows", rows}, {"bound", 3}};
  r.notes.push_back("uncertified samples have projections not connected inside the bounded curve graph of Y");
  r.notes.push_back("samples above 3 at the weight bound are recomputed with pools up to weight bound + 2");
  return r;
}

Report verifyBehrstock(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "behrstock";
  SurfaceSig sig = cfg.surface();
  GraphSnapshot s = buildPantsSnapshot(markingPants(sig), cfg.weightBound, cfg.radius);
  std::vector<Subsurface> ys;
  for (auto& y : subsurfaceUniverse(sig, cfg.universeBound))
    if (!y.frontier.empty()) ys.push_back(y);
  ProjectionDistances pd(cfg.weightBound);
  Rng rng(cfg.seed);
  int taken = 0, uncertified = 0, violations = 0, maxMin = 0;
  std::map<int, int> hist;
  for (long attempt = 0; taken < cfg.samples && attempt < 500L * cfg.samples && ys.size() > 1; ++attempt) {
    size_t p = rng.below(s.vertices.size()), w = rng.below(ys.size()), v = rng.below(ys.size());
    if (w == v || !overlaps(ys[w], ys[v])) continue;
    try {
      auto [a, b] = behrstockGap(s.vertices[p], ys[w], ys[v], pd);
      int m = std::min(a, b);
      ++taken;
      ++hist[m];
      maxMin = std::max(maxMin, m);
      if (m > 10) ++violations;
    } catch (const LabError& e) {
      if (e.code() != Err::UniverseTooSmall) throw;
      ++uncertified;
    }
  }
  r.pass = taken >= cfg.samples && violations == 0;
  json h = json::object();
  for (auto& [k, n] : hist) h[std::to_string(k)] = n;
  r.data = {{"config", configJson(cfg)}, {"snapshot", s.digest()},   {"snapshot_vertices", s.vertices.size()},
            {"subsurfaces", ys.size()},  {"samples", taken},         {"uncertified", uncertified},
            {"max_min", maxMin},         {"min_histogram", h},       {"violations", violations},
            {"bound", 10}};
  r.table = {{"samples", "uncertified", "max of min", "violations (> 10)"},
             {std::to_string(taken), std::to_string(uncertified), std::to_string(maxMin), std::to_string(violations)}};
  return r;
}

Report verifyTwistIdentity(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "twist";
  Rng rng(cfg.seed);
  json rows = json::array();
  r.table.push_back({"surface", "pairs", "twists", "mismatches", "max i(a,b)"});
  for (SurfaceSig sig : cfg.surfaces) {
    const auto& pool = enumerateCurves(sig, cfg.weightBound, CurveFilter::All, cfg.cap);
    int pairs = 0, twists = 0, wrong = 0, maxI = 0;
    std::set<std::pair<size_t, size_t>> seen;
    for (long attempt = 0; pairs < cfg.samples && attempt < 100L * cfg.samples && pool.size() > 1; ++attempt) {
      size_t a = rng.below(pool.size()), b = rng.below(pool.size());
      if (a == b || !seen.insert({a, b}).second) continue;
      int i = intersectionNumber(pool[a], pool[b]);
      if (i == 0) continue;
      ++pairs;
      maxI = std::max(maxI, i);
      for (int n = -3; n <= 3; ++n) {
        if (n == 0) continue;
        ++twists;
        if (intersectionNumber(twistCurve(pool[b], pool[a], n), pool[a]) != std::abs(n) * i * i) ++wrong;
      }
    }
    if (pairs < cfg.samples || wrong) r.pass = false;
    rows.push_back({{"surface", sig.str()}, {"pairs", pairs}, {"twists", twists}, {"mismatches", wrong}, {"max_i", maxI}});
    r.table.push_back(
        {sig.str(), std::to_string(pairs), std::to_string(twists), std::to_string(wrong), std::to_string(maxI)});
  }
  r.data = {{"config", configJson(cfg)}, {"rows", rows}};
  return r;
}

Report verifyFiberConnectivity(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "fibers";
  const Triangulation& tri = puncturedCells();
  const auto& seps = enumerateCurves(tri.sig, cfg.weightBound, CurveFilter::Separating, cfg.cap);
  std::vector<TwistWord> pushes;
  for (int e = 0; e < tri.nedges(); ++e)
    for (int x : {1, -1}) {
      try {
        pushes.push_back(pointPush(tri, edgeLoop(tri, e), x, std::to_string(e)));
      } catch (const LabError&) {
        // the edge loop is trivial or peripheral
      }
    }
  // candidates (curve, push) visited in a seeded order
  std::vector<std::pair<size_t, size_t>> order;
  for (size_t c = 0; c < seps.size(); ++c)
    for (size_t w = 0; w < pushes.size(); ++w) order.push_back({c, w});
  std::shuffle(order.begin(), order.end(), std::mt19937_64(cfg.seed));
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  json rows = json::array();
  int failures = 0, taken = 0, exactSteps = 0;
  std::map<int, int> drops;
  r.table.push_back({"pair", "i", "steps", "i/2", "drops", "label kept", "result"});
  for (auto [ci, wi] : order) {
    if (taken >= cfg.samples) break;
    const NormalMulticurve& c = seps[ci];
    NormalMulticurve a = applyTwist(pushes[wi], c);
    int i0 = intersectionNumber(a, c);
    if (i0 == 0 || i0 > 20 || !seen.insert({a.weights, c.weights}).second) continue;
    ++taken;
    std::string label = labelComponent(c);
    bool labelKept = labelComponent(a) == label;
    std::vector<int> seq{i0};
    bool stuck = false;
    NormalMulticurve cur = a;
    while (seq.back() > 0 && int(seq.size()) <= i0) {
      try {
        cur = bigonSurgeryStep(cur, c, true);
      } catch (const LabError& e) {
        if (e.code() != Err::NoAdmissibleBigon) throw;
        stuck = true;
        break;
      }
      seq.push_back(intersectionNumber(cur, c));
      if (labelComponent(cur) != label) labelKept = false;
    }
    int steps = int(seq.size()) - 1;
    std::string dropText;
    bool byTwo = true;
    for (size_t k = 1; k < seq.size(); ++k) {
      int d = seq[k - 1] - seq[k];
      ++drops[d];
      if (d != 2) byTwo = false;
      dropText += (k > 1 ? "," : "") + std::to_string(d);
    }
    bool terminated = !stuck && seq.back() == 0;
    bool ok = terminated && labelKept && byTwo && steps == i0 / 2;
    if (steps == i0 / 2) ++exactSteps;
    if (!ok) ++failures;
    rows.push_back({{"curve", c.weights},
                    {"push", pushes[wi].str()},
                    {"i", i0},
                    {"steps", steps},
                    {"intersections", seq},
                    {"terminated", terminated},
                    {"label_kept", labelKept},
                    {"pass", ok}});
    r.table.push_back({std::to_string(taken), std::to_string(i0), std::to_string(steps), std::to_string(i0 / 2),
                       dropText.empty() ? "-" : dropText, labelKept ? "yes" : "no", ok ? "pass" : "fail"});
  }
  if (taken < cfg.samples)
    throw LabError(Err::SampleExhausted, "only " + std::to_string(taken) + " same-fiber pairs with 0 < i <= 20 at weight bound " +
                                             std::to_string(cfg.weightBound));
  r.pass = failures == 0;
  json d = json::object();
  for (auto& [k, n] : drops) d[std::to_string(k)] = n;
  r.data = {{"config", configJson(cfg)}, {"pairs", rows},           {"failures", failures},
            {"exact_step_count", exactSteps}, {"drop_histogram", d}};
  r.notes.push_back("a step removes one bigon of the representatives; the class intersection is recomputed after each step");
  return r;
}

Report verifyComponentLabels(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "labels";
  const Triangulation& tri = puncturedCells();
  const auto& seps = enumerateCurves(tri.sig, cfg.weightBound, CurveFilter::Separating, cfg.cap);
  std::vector<std::string> label;
  std::map<std::string, int> perLabel;
  for (auto& c : seps) ++perLabel[label.emplace_back(labelComponent(c))];
  // graph of separating curves, disjointness edges
  int edges = 0, crossing = 0;
  std::vector<int> comp(seps.size(), -1);
  std::vector<std::vector<int>> adj(seps.size());
  for (size_t a = 0; a < seps.size(); ++a)
    for (size_t b = a + 1; b < seps.size(); ++b)
      if (intersectionNumber(seps[a], seps[b]) == 0) {
        ++edges;
        adj[a].push_back(b), adj[b].push_back(a);
        if (label[a] != label[b]) ++crossing;
      }
  int ncomp = 0;
  for (size_t s = 0; s < seps.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> st{int(s)};
    comp[s] = ncomp;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) comp[w] = ncomp, st.push_back(w);
    }
    ++ncomp;
  }
  // the separating-multicurve ball around the lifted seed curve
  NormalMulticurve base = liftCurve(pseudoAnosovSeed().alpha0);
  GraphSnapshot s = buildSepSnapshot(base, cfg.weightBound, cfg.radius, false);
  int sepCrossing = 0;
  std::vector<std::string> vl;
  for (auto& v : s.vertices) vl.push_back(multicurveLabel(v));
  for (auto [u, v] : s.edges())
    if (vl[u] != vl[v]) ++sepCrossing;
  int seedBound = maxWeight(base);
  int distinct = int(perLabel.size());
  r.pass = crossing == 0 && sepCrossing == 0 && distinct >= 3 && cfg.weightBound >= seedBound;
  r.data = {{"config", configJson(cfg)},
            {"separating_curves", seps.size()},
            {"curve_graph_edges", edges},
            {"curve_graph_components", ncomp},
            {"curve_graph_crossing_edges", crossing},
            {"distinct_labels", distinct},
            {"seed_bound", seedBound},
            {"sep_snapshot", s.digest()},
            {"sep_snapshot_vertices", s.vertices.size()},
            {"sep_snapshot_crossing_edges", sepCrossing}};
  r.table = {{"check", "value"},
             {"separating curves", std::to_string(seps.size())},
             {"disjointness edges", std::to_string(edges)},
             {"components", std::to_string(ncomp)},
             {"distinct labels", std::to_string(distinct)},
             {"edges joining labels", std::to_string(crossing)},
             {"sep ball vertices", std::to_string(s.vertices.size())},
             {"sep ball edges joining labels", std::to_string(sepCrossing)}};
  r.notes.push_back("label = fingerprint of the image on the closed surface; a multicurve carries the labels of its separating components");
  return r;
}

Report verifySepOverlap(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "overlap";
  NormalMulticurve base = liftCurve(pseudoAnosovSeed().alpha0);
  GraphSnapshot s = buildSepSnapshot(base, cfg.weightBound, cfg.radius, false);
  int n = int(s.vertices.size());
  std::vector<std::vector<Subsurface>> pieces(n);
  for (int v = 0; v < n; ++v)
    for (auto& d : essentialComplement(s.vertices[v])) pieces[v].push_back(makeSubsurface(d));
  long far = 0, counter = 0, nonOverlapping = 0;
  int maxNonOverlap = 0, diam = 0;
  std::map<int, long> hist;
  for (int u = 0; u < n; ++u) {
    auto d = s.distancesFrom(u);
    for (int v = u + 1; v < n; ++v) {
      ++hist[d[v]];
      diam = std::max(diam, d[v]);
      bool all = true;
      for (auto& a : pieces[u]) {
        for (auto& b : pieces[v])
          if (!overlaps(a, b)) {
            all = false;
            break;
          }
        if (!all) break;
      }
      if (!all) {
        ++nonOverlapping;
        maxNonOverlap = std::max(maxNonOverlap, d[v]);
      }
      if (d[v] >= 4) {
        ++far;
        if (!all) ++counter;
      }
    }
  }
  r.pass = counter == 0;
  json h = json::object();
  for (auto& [k, c] : hist) h[std::to_string(k)] = c;
  r.data = {{"config", configJson(cfg)},
            {"snapshot", s.digest()},
            {"vertices", n},
            {"distance_histogram", h},
            {"pairs_at_distance_4_or_more", far},
            {"counterexamples", counter},
            {"pairs_with_non_overlapping_pieces", nonOverlapping},
            {"max_distance_of_non_overlapping_pair", maxNonOverlap}};
  r.table = {{"vertices", "diameter", "pairs d>=4", "counterexamples", "non-overlapping pairs", "their max d"},
             {std::to_string(n), std::to_string(diam), std::to_string(far), std::to_string(counter),
              std::to_string(nonOverlapping), std::to_string(maxNonOverlap)}};
  if (far == 0) r.notes.push_back("no pair is at distance 4 or more in this snapshot; the implication holds vacuously");
  return r;
}

Report verifyBilipschitz(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "bilipschitz";
  NormalMulticurve base = liftCurve(pseudoAnosovSeed().alpha0);
  GraphSnapshot s = buildSepSnapshot(base, cfg.weightBound, cfg.radius, false);
  GraphSnapshot sp = buildSepSnapshot(base, cfg.weightBound, cfg.radius, true);
  std::vector<int> toPrime(s.vertices.size());
  for (size_t v = 0; v < s.vertices.size(); ++v) toPrime[v] = sp.find(s.vertices[v]);
  long pairs = 0, violations = 0, unreachable = 0;
  std::map<std::pair<int, int>, long> table;
  for (size_t u = 0; u < s.vertices.size(); ++u) {
    if (toPrime[u] < 0) continue;
    auto d = s.distancesFrom(u);
    auto dp = sp.distancesFrom(toPrime[u]);
    for (size_t v = u + 1; v < s.vertices.size(); ++v) {
      if (toPrime[v] < 0) continue;
      int a = d[v], b = dp[toPrime[v]];
      if (b < 0) {
        ++unreachable;
        continue;
      }
      ++pairs;
      ++table[{a, b}];
      if (!(a <= b && b <= 2 * a)) ++violations;
    }
  }
  r.pass = violations == 0 && pairs > 0;
  json t = json::array();
  r.table.push_back({"d_sep", "d_sep_prime", "pairs"});
  for (auto& [k, c] : table) {
    t.push_back({{"d", k.first}, {"d_prime", k.second}, {"pairs", c}});
    r.table.push_back({std::to_string(k.first), std::to_string(k.second), std::to_string(c)});
  }
  r.data = {{"config", configJson(cfg)},
            {"sep_snapshot", s.digest()},
            {"sep_prime_snapshot", sp.digest()},
            {"sep_vertices", s.vertices.size()},
            {"sep_prime_vertices", sp.vertices.size()},
            {"pairs", pairs},
            {"unreachable_in_prime_snapshot", unreachable},
            {"violations", violations},
            {"joint_distribution", t}};
  return r;
}

Report estimateDriver(const ExperimentConfig& cfg) {
  Report r;
  r.driver = "estimate";
  SurfaceSig sig = cfg.surface();
  GraphSnapshot s = buildPantsSnapshot(markingPants(sig), cfg.weightBound, cfg.radius);
  auto universe = subsurfaceUniverse(sig, cfg.universeBound);
  ProjectionDistances pd(cfg.weightBound);
  int maxM = std::max(cfg.threshold + 1, 5);
  std::vector<double> dist;
  std::vector<std::vector<double>> est(maxM + 1);
  long tooSmall = 0;
  for (size_t u = 0; u < s.vertices.size(); ++u) {
    auto d = s.distancesFrom(u);
    for (size_t v = u + 1; v < s.vertices.size(); ++v) {
      DistanceEstimate e;
      try {
        e = distanceFormulaEstimate(s.vertices[u], s.vertices[v], 1, universe, pd);
      } catch (const LabError& ex) {
        if (ex.code() != Err::UniverseTooSmall) throw;
        ++tooSmall;
        continue;
      }
      dist.push_back(d[v]);
      for (int m = 1; m <= maxM; ++m) {
        int sum = 0;
        for (auto& t : e.terms)
          if (t.distance >= m) sum += t.distance;
        est[m].push_back(sum);
      }
    }
  }
  const auto& e = est[cfg.threshold];
  AffineBound upper = upperEnvelope(dist, e), lower = upperEnvelope(e, dist);
  double rho = spearman(dist, e);
  r.pass = tooSmall == 0 && !std::isnan(rho) && rho >= 0.8;
  json sweep = json::array();
  r.table.push_back({"M", "spearman", "mean estimate", "est <= A d + B", "d <= A' est + B'"});
  for (int m = 1; m <= maxM; ++m) {
    AffineBound up = upperEnvelope(dist, est[m]), lo = upperEnvelope(est[m], dist);
    double mean = est[m].empty() ? 0 : std::accumulate(est[m].begin(), est[m].end(), 0.0) / est[m].size();
    double rm = spearman(dist, est[m]);
    sweep.push_back({{"threshold", m}, {"spearman", num(rm)}, {"mean_estimate", num(mean)},
                     {"A", num(up.slope)}, {"B", num(up.offset)}, {"A_prime", num(lo.slope)}, {"B_prime", num(lo.offset)}});
    r.table.push_back({std::to_string(m) + (m == cfg.threshold ? " *" : ""), str(rm), str(mean),
                       "A=" + str(up.slope) + " B=" + str(up.offset), "A'=" + str(lo.slope) + " B'=" + str(lo.offset)});
  }
  std::map<int, std::pair<double, int>> byD;
  for (size_t i = 0; i < dist.size(); ++i) byD[int(dist[i])].first += e[i], byD[int(dist[i])].second++;
  json means = json::object();
  for (auto& [d, v] : byD) means[std::to_string(d)] = num(v.first / v.second);
  r.data = {{"config", configJson(cfg)},
            {"snapshot", s.digest()},
            {"vertices", s.vertices.size()},
            {"pairs", dist.size()},
            {"universe", universe.size()},
            {"universe_too_small", tooSmall},
            {"threshold", cfg.threshold},
            {"spearman", num(rho)},
            {"A", num(upper.slope)},
            {"B", num(upper.offset)},
            {"A_prime", num(lower.slope)},
            {"B_prime", num(lower.offset)},
            {"mean_estimate_by_distance", means},
            {"threshold_sweep", sweep}};
  r.notes.push_back("rows other than the configured threshold (*) are informational");
  return r;
}

} // namespace curvelab

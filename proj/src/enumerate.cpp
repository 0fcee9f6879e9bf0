#include "curvelab/enumerate.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace curvelab {

int maxWeight(const NormalMulticurve& c) { return *std::max_element(c.weights.begin(), c.weights.end()); }

void forEachAdmissible(const Triangulation& tri, int bound, long cap,
                       const std::function<void(const std::vector<int>&)>& fn) {
  const int E = tri.nedges();
  // triangles become checkable once their last edge is assigned
  std::vector<std::vector<int>> closes(E);
  for (int t = 0; t < tri.ntri(); ++t) {
    const auto& e = tri.edge[t];
    closes[std::max({e[0], e[1], e[2]})].push_back(t);
  }
  std::vector<int> w(E, 0);
  long visited = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      fn(w);
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      if (++visited > cap)
        throw LabError(Err::BudgetExceeded, "candidate cap " + std::to_string(cap) + " exceeded at weight bound " +
                                                std::to_string(bound));
      w[e] = x;
      bool ok = true;
      for (int t : closes[e]) {
        const auto& te = tri.edge[t];
        int a = w[te[0]], b = w[te[1]], c = w[te[2]];
        if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) ok = false;
      }
      if (ok) rec(e + 1);
    }
    w[e] = 0;
  };
  rec(0);
}

namespace {

bool passes(const NormalMulticurve& c, CurveFilter f) {
  if (f == CurveFilter::All) return true;
  bool sep = isSeparatingMulticurve(c);
  return f == CurveFilter::Separating ? sep : !sep;
}

bool lighter(const NormalMulticurve& a, const NormalMulticurve& b) {
  int sa = std::accumulate(a.weights.begin(), a.weights.end(), 0);
  int sb = std::accumulate(b.weights.begin(), b.weights.end(), 0);
  return std::tie(sa, a.weights) < std::tie(sb, b.weights);
}

std::vector<NormalMulticurve> singleCurves(const Triangulation& tri, int bound, long cap) {
  std::vector<NormalMulticurve> out;
  forEachAdmissible(tri, bound, cap, [&](const std::vector<int>& w) {
    TraceReport rep = traceWeights(tri, w);
    if (rep.essential.size() != 1 || rep.peripheral != 0) return;
    out.push_back(canonicalize(w, tri));
  });
  std::sort(out.begin(), out.end(), lighter);
  return out;
}

std::vector<NormalMulticurve> closedClasses(int bound, long cap) {
  const Triangulation& down = closedCells();
  auto lifts = singleCurves(puncturedCells(), bound, cap);
  // bucket by fingerprint, then split buckets by the exact class test
  std::map<std::vector<int>, std::vector<NormalMulticurve>> buckets;
  std::vector<NormalMulticurve> reps;
  for (auto& l : lifts) {
    NormalMulticurve c = canonicalize(l.weights, down);
    auto& b = buckets[fingerprint(c)];
    bool known = false;
    for (auto& r : b)
      if (s20SameClass(r, c)) {
        known = true;
        break;
      }
    if (!known) {
      b.push_back(c);
      reps.push_back(c);
    }
  }
  std::sort(reps.begin(), reps.end(), lighter);
  return reps;
}

} // namespace

const std::vector<NormalMulticurve>& enumerateCurves(SurfaceSig sig, int bound, CurveFilter filter, long cap) {
  if (bound < 1) throw LabError(Err::InvalidDescriptor, "weight bound must be at least 1");
  static std::mutex mu;
  static std::map<std::tuple<SurfaceSig, int, int>, std::unique_ptr<std::vector<NormalMulticurve>>> cache;
  auto key = std::make_tuple(sig, bound, static_cast<int>(filter));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const Triangulation& tri = referenceTriangulation(sig);
  std::vector<NormalMulticurve> all;
  if (filter != CurveFilter::All) {
    for (auto& c : enumerateCurves(sig, bound, CurveFilter::All, cap))
      if (passes(c, filter)) all.push_back(c);
  } else {
    all = tri.closed ? closedClasses(bound, cap) : singleCurves(tri, bound, cap);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<std::vector<NormalMulticurve>>(std::move(all));
  return *slot;
}

const std::vector<NormalMulticurve>& enumerateMulticurves(SurfaceSig sig, int bound, bool separatingOnly, long cap) {
  if (bound < 1) throw LabError(Err::InvalidDescriptor, "weight bound must be at least 1");
  static std::mutex mu;
  static std::map<std::tuple<SurfaceSig, int, bool>, std::unique_ptr<std::vector<NormalMulticurve>>> cache;
  auto key = std::make_tuple(sig, bound, separatingOnly);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const Triangulation& tri = referenceTriangulation(sig);
  if (tri.closed) throw LabError(Err::UnsupportedSurface, "multicurve enumeration runs on punctured surfaces");
  std::vector<NormalMulticurve> all;
  forEachAdmissible(tri, bound, cap, [&](const std::vector<int>& w) {
    TraceReport rep = traceWeights(tri, w);
    if (rep.essential.empty() || rep.peripheral != 0) return;
    for (size_t i = 1; i < rep.essential.size(); ++i)
      if (rep.essential[i].weights == rep.essential[i - 1].weights) return; // parallel copies
    NormalMulticurve m = canonicalize(w, tri);
    if (separatingOnly && !isSeparatingMulticurve(m)) return;
    all.push_back(std::move(m));
  });
  std::sort(all.begin(), all.end(), lighter);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<std::vector<NormalMulticurve>>(std::move(all));
  return *slot;
}

} // namespace curvelab

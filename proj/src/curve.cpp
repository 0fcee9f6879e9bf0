#include "curvelab/curve.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace curvelab {

int cornerCount(const Triangulation& tri, const std::vector<int>& w, int t, int c) {
  const auto& e = tri.edge[t];
  int twice = w[e[(c + 2) % 3]] + w[e[c]] - w[e[(c + 1) % 3]];
  return twice / 2;
}

bool admissible(const Triangulation& tri, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != tri.nedges()) return false;
  for (int x : w)
    if (x < 0) return false;
  for (int t = 0; t < tri.ntri(); ++t)
    for (int c = 0; c < 3; ++c) {
      const auto& e = tri.edge[t];
      int twice = w[e[(c + 2) % 3]] + w[e[c]] - w[e[(c + 1) % 3]];
      if (twice < 0 || twice % 2 != 0) return false;
    }
  return true;
}

Side across(const Triangulation& tri, Side x) { return tri.glue[x.t][x.s]; }

Path reversed(const Triangulation& tri, const Path& p) {
  Path r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p.size() - 1 - i] = across(tri, p[i]);
  return r;
}

Path rotated(const Path& p, int start) {
  Path r(p.size());
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) r[i] = p[(start + i) % n];
  return r;
}

bool validClosedPath(const Triangulation& tri, const Path& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    const Side& nx = p[(i + 1) % p.size()];
    if (across(tri, p[i]).t != nx.t) return false;
  }
  return true;
}

Path reducePath(const Triangulation& tri, const Path& p) {
  Path st;
  st.reserve(p.size());
  for (const Side& x : p) {
    // leaving through the side we just came in by cancels the last step
    if (!st.empty() && across(tri, st.back()) == x) st.pop_back();
    else st.push_back(x);
  }
  size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && across(tri, st[hi - 1]) == st[lo]) {
    ++lo;
    --hi;
  }
  return Path(st.begin() + lo, st.begin() + hi);
}

std::vector<int> pathWeights(const Triangulation& tri, const Path& p) {
  std::vector<int> w(tri.nedges(), 0);
  for (const Side& x : p) ++w[tri.edge[x.t][x.s]];
  return w;
}

Path vertexLoop(const Triangulation& tri, int t, int c, bool forward) {
  Path out;
  int ct = t, cc = c;
  do {
    if (forward) {
      out.push_back({ct, cc});
      Side o = tri.glue[ct][cc];
      ct = o.t;
      cc = (o.s + 1) % 3;
    } else {
      int s = (cc + 2) % 3;
      out.push_back({ct, s});
      Side o = tri.glue[ct][s];
      ct = o.t;
      cc = o.s;
    }
  } while (!(ct == t && cc == c));
  return out;
}

namespace {

struct Tracer {
  const Triangulation& tri;
  const std::vector<int>& w;
  std::vector<std::array<int, 3>> corner;

  Tracer(const Triangulation& tr, const std::vector<int>& ww) : tri(tr), w(ww) {
    corner.resize(tri.ntri());
    for (int t = 0; t < tri.ntri(); ++t)
      for (int c = 0; c < 3; ++c) corner[t][c] = cornerCount(tri, w, t, c);
  }
  int width(int t, int s) const { return w[tri.edge[t][s]]; }
  // the other end of the normal arc through position p of side s
  std::pair<int, int> inner(int t, int s, int p) const {
    int ns = corner[t][s];
    if (p < ns) {
      int sm = (s + 2) % 3;
      return {sm, width(t, sm) - 1 - p};
    }
    int k = width(t, s) - 1 - p;
    return {(s + 1) % 3, k};
  }
  int edgePos(int t, int s, int p) const {
    int e = tri.edge[t][s];
    if (tri.edgeSides[e][0] == Side{t, s}) return p;
    return w[e] - 1 - p;
  }
};

using Exit = std::tuple<int, int, int>;

Component orient(const Triangulation& tri, const std::vector<int>& w, Path path, std::vector<int> pos) {
  const int n = static_cast<int>(path.size());
  Exit best{1 << 30, 0, 0};
  int bestIdx = 0;
  bool bestRev = false;
  for (int i = 0; i < n; ++i) {
    Exit f{path[i].t, path[i].s, pos[i]};
    Side o = across(tri, path[i]);
    Exit r{o.t, o.s, w[tri.edge[o.t][o.s]] - 1 - pos[i]};
    if (f < best) best = f, bestIdx = i, bestRev = false;
    if (r < best) best = r, bestIdx = i, bestRev = true;
  }
  if (bestRev) {
    Path rp(n);
    std::vector<int> rpos(n);
    for (int i = 0; i < n; ++i) {
      Side o = across(tri, path[i]);
      rp[n - 1 - i] = o;
      rpos[n - 1 - i] = w[tri.edge[o.t][o.s]] - 1 - pos[i];
    }
    bestIdx = n - 1 - bestIdx;
    path.swap(rp);
    pos.swap(rpos);
  }
  Component c;
  c.path = rotated(path, bestIdx);
  c.pos.resize(n);
  for (int i = 0; i < n; ++i) c.pos[i] = pos[(bestIdx + i) % n];
  c.weights = pathWeights(tri, c.path);
  return c;
}

// turning the same way at every triangle means circling a single vertex
bool peripheralComponent(const Triangulation& tri, const Path& p) {
  int dir = -1;
  for (size_t i = 0; i < p.size(); ++i) {
    Side in = across(tri, p[i]);
    const Side& out = p[(i + 1) % p.size()];
    int d = out.s == (in.s + 1) % 3 ? 1 : 0;
    if (dir < 0) dir = d;
    else if (dir != d) return false;
  }
  return true;
}

} // namespace

TraceReport traceWeights(const Triangulation& tri, const std::vector<int>& w) {
  if (!admissible(tri, w)) throw LabError(Err::NotAdmissible, "weights violate the triangle conditions");
  Tracer tr(tri, w);
  std::vector<std::vector<char>> seen(tri.nedges());
  for (int e = 0; e < tri.nedges(); ++e) seen[e].assign(w[e], 0);
  TraceReport rep;
  for (int e = 0; e < tri.nedges(); ++e) {
    for (int q = 0; q < w[e]; ++q) {
      if (seen[e][q]) continue;
      Side st = tri.edgeSides[e][0];
      Path path;
      std::vector<int> pos;
      int t = st.t, s = st.s, p = q;
      do {
        path.push_back({t, s});
        pos.push_back(p);
        int ee = tri.edge[t][s];
        seen[ee][tr.edgePos(t, s, p)] = 1;
        Side o = tri.glue[t][s];
        int pp = w[ee] - 1 - p;
        auto [s2, p2] = tr.inner(o.t, o.s, pp);
        t = o.t;
        s = s2;
        p = p2;
      } while (!(t == st.t && s == st.s && p == q));
      if (peripheralComponent(tri, path)) {
        ++rep.peripheral;
        continue;
      }
      rep.essential.push_back(orient(tri, w, std::move(path), std::move(pos)));
    }
  }
  // positions refer to the whole picture; sort components for a stable order
  std::sort(rep.essential.begin(), rep.essential.end(),
            [](const Component& a, const Component& b) { return a.weights < b.weights; });
  return rep;
}

NormalMulticurve canonicalize(const std::vector<int>& raw, const Triangulation& tri, TraceReport& report) {
  if (static_cast<int>(raw.size()) != tri.nedges())
    throw LabError(Err::NotAdmissible, "weight vector has wrong length");
  report = traceWeights(tri, raw);
  if (report.essential.empty()) throw LabError(Err::EmptyAfterReduction, "no essential component");
  bool dup = false;
  for (size_t i = 1; i < report.essential.size(); ++i)
    dup = dup || report.essential[i].weights == report.essential[i - 1].weights;
  if (dup) {
    // parallel copies collapse to one component
    std::vector<int> w(tri.nedges(), 0);
    for (size_t i = 0; i < report.essential.size(); ++i) {
      if (i > 0 && report.essential[i].weights == report.essential[i - 1].weights) continue;
      for (int e = 0; e < tri.nedges(); ++e) w[e] += report.essential[i].weights[e];
    }
    int stripped = report.peripheral;
    report = traceWeights(tri, w);
    report.peripheral = stripped;
  }
  NormalMulticurve m;
  m.tri = &tri;
  m.weights.assign(tri.nedges(), 0);
  for (auto& c : report.essential)
    for (int e = 0; e < tri.nedges(); ++e) m.weights[e] += c.weights[e];
  m.comps = report.essential;
  if (tri.closed) m = s20MergeParallel(m);
  return m;
}

NormalMulticurve canonicalize(const std::vector<int>& raw, const Triangulation& tri) {
  TraceReport rep;
  return canonicalize(raw, tri, rep);
}

NormalMulticurve NormalMulticurve::component(int i) const { return canonicalize(comps[i].weights, *tri); }

NormalMulticurve fromComponents(const Triangulation& tri, std::vector<Component> comps) {
  std::vector<int> w(tri.nedges(), 0);
  for (auto& c : comps)
    for (int e = 0; e < tri.nedges(); ++e) w[e] += c.weights[e];
  return canonicalize(w, tri);
}

NormalMulticurve unionOf(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.tri != b.tri) throw LabError(Err::MixedTriangulations, "union of curves on different triangulations");
  std::vector<int> w = a.weights;
  for (size_t e = 0; e < w.size(); ++e) w[e] += b.weights[e];
  return canonicalize(w, *a.tri);
}

bool forEachRun(const Triangulation& tri, const Path& a, const Path& b, const std::function<void(const Run&)>& fn) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  if (n == 0 || m == 0) return true;
  auto code = [](const Side& x) { return x.t * 3 + x.s; };
  std::vector<std::vector<int>> occ(tri.ntri() * 3);
  for (int j = 0; j < m; ++j) occ[code(b[j])].push_back(j);
  bool distinct = true;
  for (int i = 0; i < n; ++i) {
    for (int j : occ[code(a[i])]) {
      const Side& ap = a[(i + n - 1) % n];
      const Side& bp = b[(j + m - 1) % m];
      if (ap == bp) continue;
      int len = 1;
      while (len < n + m && a[(i + len) % n] == b[(j + len) % m]) ++len;
      if (len >= n + m) {
        distinct = false;
        continue;
      }
      Run r;
      r.i = i;
      r.j = j;
      r.len = len;
      int sb = across(tri, bp).s;
      int x = a[i].s;
      r.aLeftStart = (x == (sb + 1) % 3);
      int y = across(tri, a[(i + len - 1) % n]).s;
      int ub = b[(j + len) % m].s;
      r.aLeftEnd = (ub == (y + 1) % 3);
      fn(r);
    }
  }
  return distinct;
}

int pathIntersection(const Triangulation& tri, const Path& a, const Path& b) {
  int count = 0;
  auto tally = [&](const Run& r) {
    if (r.crosses()) ++count;
  };
  forEachRun(tri, a, b, tally);
  forEachRun(tri, a, reversed(tri, b), tally);
  return count;
}

namespace {
bool properPower(const Path& a) {
  const int n = static_cast<int>(a.size());
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[i] == a[(i + d) % n];
    if (ok) return true;
  }
  return false;
}
} // namespace

int selfIntersection(const Triangulation& tri, const Path& a) {
  if (properPower(a)) return 1 << 20;
  return pathIntersection(tri, a, a) / 2;
}

int rawIntersection(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.tri != b.tri) throw LabError(Err::MixedTriangulations, a.tri->id() + " vs " + b.tri->id());
  int total = 0;
  for (auto& x : a.comps)
    for (auto& y : b.comps) total += pathIntersection(*a.tri, x.path, y.path);
  return total;
}

int intersectionNumber(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.tri != b.tri) throw LabError(Err::MixedTriangulations, a.tri->id() + " vs " + b.tri->id());
  if (a.tri->closed) return s20Intersection(a, b);
  return rawIntersection(a, b);
}

bool sameClass(const NormalMulticurve& a, const NormalMulticurve& b) {
  if (a.tri != b.tri) throw LabError(Err::MixedTriangulations, a.tri->id() + " vs " + b.tri->id());
  if (a.tri->closed) return s20SameClass(a, b);
  return a.weights == b.weights;
}

NormalMulticurve curveFromPath(const Triangulation& tri, const Path& p) {
  Path r = reducePath(tri, p);
  if (r.empty()) throw LabError(Err::EmptyAfterReduction, "path is null-homotopic");
  if (selfIntersection(tri, r) != 0) throw LabError(Err::NotSimpleLoop, "path is not homotopic to a simple curve");
  return canonicalize(pathWeights(tri, r), tri);
}

const std::vector<NormalMulticurve>& markingCurves(const Triangulation& tri) {
  static std::mutex mu;
  static std::map<const Triangulation*, std::vector<NormalMulticurve>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&tri);
  if (it != cache.end()) return it->second;
  std::vector<NormalMulticurve> out;
  for (auto& w : tri.marking) out.push_back(canonicalize(w, tri));
  return cache.emplace(&tri, std::move(out)).first->second;
}

std::vector<int> fingerprint(const NormalMulticurve& c) {
  const auto& marks = markingCurves(*c.tri);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < c.size(); ++i) {
    NormalMulticurve ci = c.size() == 1 ? c : c.component(i);
    std::vector<int> row;
    for (auto& m : marks) row.push_back(intersectionNumber(ci, m));
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> fp{c.size()};
  for (auto& r : rows) fp.insert(fp.end(), r.begin(), r.end());
  for (auto& s : cutAlong(c).signature()) {
    fp.push_back(s.genus);
    fp.push_back(s.boundary);
  }
  return fp;
}

std::string curveLine(const NormalMulticurve& c) {
  std::ostringstream out;
  out << "surface=" << c.tri->sig.genus << "," << c.tri->sig.boundary << " tri=" << c.tri->version << " w=[";
  for (size_t i = 0; i < c.weights.size(); ++i) out << (i ? "," : "") << c.weights[i];
  out << "]";
  return out.str();
}

NormalMulticurve parseCurveLine(const std::string& line) {
  auto field = [&](const std::string& key) {
    auto p = line.find(key + "=");
    if (p == std::string::npos) throw LabError(Err::DataFormat, "curve line lacks '" + key + "': " + line);
    auto start = p + key.size() + 1;
    auto end = line.find(' ', start);
    return line.substr(start, end == std::string::npos ? std::string::npos : end - start);
  };
  SurfaceSig sig = parseSig(field("surface"));
  const Triangulation& tri = referenceTriangulation(sig);
  if (field("tri") != tri.version) throw LabError(Err::DataFormat, "curve line uses triangulation version " + field("tri"));
  std::string ws = field("w");
  if (ws.size() < 2 || ws.front() != '[' || ws.back() != ']') throw LabError(Err::DataFormat, "bad weight list: " + ws);
  std::vector<int> w;
  std::stringstream in(ws.substr(1, ws.size() - 2));
  std::string tok;
  while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
  return canonicalize(w, tri);
}

} // namespace curvelab

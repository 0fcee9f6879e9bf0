#include "curvelab/complexes.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/pants.hpp"
#include "curvelab/projection.hpp"
#include "curvelab/sep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace curvelab {

using nlohmann::json;

const char* kindName(GraphKind k) {
  switch (k) {
  case GraphKind::Curve: return "curve";
  case GraphKind::Pants: return "pants";
  case GraphKind::Sep: return "sep";
  case GraphKind::SepPrime: return "sep_prime";
  }
  return "?";
}

GraphKind parseKind(const std::string& s) {
  if (s == "curve") return GraphKind::Curve;
  if (s == "pants") return GraphKind::Pants;
  if (s == "sep") return GraphKind::Sep;
  if (s == "sep_prime") return GraphKind::SepPrime;
  throw LabError(Err::DataFormat, "unknown snapshot kind '" + s + "'");
}

unsigned long long fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(unsigned long long v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", v);
  return buf;
}

namespace {

std::string joinInts(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "." : "") + std::to_string(v[i]);
  return out;
}

} // namespace

size_t GraphSnapshot::edgeCount() const {
  size_t n = 0;
  for (auto& a : adj) n += a.size();
  return n / 2;
}

std::vector<std::pair<int, int>> GraphSnapshot::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int GraphSnapshot::find(const NormalMulticurve& c) const {
  auto it = index.find(c.weights);
  return it == index.end() ? -1 : it->second;
}

std::vector<int> GraphSnapshot::distancesFrom(int v) const {
  std::vector<int> d(vertices.size(), -1);
  std::deque<int> q{v};
  d[v] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : adj[u])
      if (d[w] < 0) d[w] = d[u] + 1, q.push_back(w);
  }
  return d;
}

std::string GraphSnapshot::basepointFingerprint() const {
  return vertices.empty() ? "" : joinInts(fingerprint(vertices[0]));
}

std::string GraphSnapshot::headerJson() const {
  json h;
  h["kind"] = kindName(kind);
  h["surface"] = surface.str();
  h["weight_bound"] = weightBound;
  h["radius"] = radius;
  h["data_version"] = dataVersion;
  h["basepoint"] = basepointFingerprint();
  return h.dump();
}

std::string GraphSnapshot::digest() const { return hex64(fnv1a(headerJson())); }

bool snapshotMember(GraphKind kind, const NormalMulticurve& c) {
  switch (kind) {
  case GraphKind::Curve: return c.size() == 1;
  case GraphKind::Pants: return isPantsDecomposition(c);
  default: return !c.empty() && isSeparatingMulticurve(c);
  }
}

bool snapshotAdjacent(GraphKind kind, const NormalMulticurve& a, const NormalMulticurve& b) {
  switch (kind) {
  case GraphKind::Curve: return curveAdjacent(a, b);
  case GraphKind::Sep: return sepAdjacent(a, b);
  case GraphKind::SepPrime: return sepPrimeAdjacent(a, b);
  case GraphKind::Pants: {
    if (a.size() != b.size() || a.weights == b.weights) return false;
    std::vector<int> onlyA, onlyB;
    for (int k = 0; k < a.size(); ++k) {
      bool shared = false;
      for (auto& c : b.comps) shared = shared || c.weights == a.comps[k].weights;
      if (!shared) onlyA.push_back(k);
    }
    for (int k = 0; k < b.size(); ++k) {
      bool shared = false;
      for (auto& c : a.comps) shared = shared || c.weights == b.comps[k].weights;
      if (!shared) onlyB.push_back(k);
    }
    if (onlyA.size() != 1 || onlyB.size() != 1) return false;
    NormalMulticurve x = a.size() == 1 ? a : a.component(onlyA[0]);
    NormalMulticurve y = b.size() == 1 ? b : b.component(onlyB[0]);
    std::vector<int> rest;
    for (int k = 0; k < a.size(); ++k)
      if (k != onlyA[0]) rest.push_back(k);
    SurfaceSig sig = a.tri->sig;
    if (!rest.empty()) {
      NormalMulticurve r = subMulticurve(a, rest);
      CutSurface cut = cutAlong(r);
      int p = locateCurve(x, r, cut);
      if (p < 0) return false;
      sig = cut.pieces[p].sig;
    }
    return curveAdjacentIn(sig, x, y);
  }
  }
  return false;
}

GraphSnapshot buildSnapshot(GraphKind kind, const NormalMulticurve& base, int bound, int radius, const NeighborFn& nbrs) {
  if (!snapshotMember(kind, base))
    throw LabError(Err::InvalidDescriptor, std::string("basepoint is not a vertex of the ") + kindName(kind) + " graph");
  GraphSnapshot s;
  s.kind = kind;
  s.surface = base.tri->sig;
  s.weightBound = bound;
  s.radius = radius;
  s.dataVersion = kDataVersion;
  s.vertices.push_back(base);
  s.depth.push_back(0);
  s.index[base.weights] = 0;
  std::vector<std::vector<NormalMulticurve>> found; // neighbour lists per vertex
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  auto expand = [&](size_t from, size_t to) {
    found.resize(to);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && from + w < to; ++w)
      pool.emplace_back([&, w] {
        for (size_t v = from + w; v < to; v += workers) found[v] = nbrs(s.vertices[v]);
      });
    for (auto& t : pool) t.join();
  };

  size_t layerStart = 0;
  for (int d = 0; d <= radius; ++d) {
    size_t layerEnd = s.vertices.size();
    expand(layerStart, layerEnd);
    if (d == radius) break;
    std::map<std::vector<int>, NormalMulticurve> fresh; // fingerprint -> vertex
    for (size_t v = layerStart; v < layerEnd; ++v)
      for (auto& c : found[v])
        if (!s.index.count(c.weights)) {
          std::vector<int> key = fingerprint(c);
          key.insert(key.end(), c.weights.begin(), c.weights.end());
          fresh.emplace(key, c);
        }
    for (auto& [key, c] : fresh) {
      if (s.index.count(c.weights)) continue;
      s.index[c.weights] = static_cast<int>(s.vertices.size());
      s.vertices.push_back(c);
      s.depth.push_back(d + 1);
    }
    layerStart = layerEnd;
    if (layerStart == s.vertices.size()) break;
  }
  expand(found.size(), s.vertices.size());
  s.adj.assign(s.vertices.size(), {});
  for (size_t v = 0; v < s.vertices.size(); ++v)
    for (auto& c : found[v]) {
      int u = s.find(c);
      if (u < 0 || u == static_cast<int>(v)) continue;
      s.adj[v].push_back(u);
      s.adj[u].push_back(static_cast<int>(v));
    }
  for (auto& a : s.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return s;
}

namespace {

// neighbours inside a fixed pool, with the pairwise predicate
NeighborFn poolNeighbors(GraphKind kind, const std::vector<NormalMulticurve>& pool) {
  return [kind, &pool](const NormalMulticurve& v) {
    std::vector<NormalMulticurve> out;
    for (auto& c : pool)
      if (snapshotAdjacent(kind, v, c)) out.push_back(c);
    return out;
  };
}

} // namespace

GraphSnapshot buildCurveSnapshot(const NormalMulticurve& base, int bound, int radius) {
  if (base.tri->closed) throw LabError(Err::UnsupportedSurface, "curve snapshots run on punctured surfaces");
  const auto& pool = enumerateCurves(base.tri->sig, bound);
  return buildSnapshot(GraphKind::Curve, base, bound, radius, poolNeighbors(GraphKind::Curve, pool));
}

GraphSnapshot buildPantsSnapshot(const NormalMulticurve& base, int bound, int radius) {
  return buildSnapshot(GraphKind::Pants, base, bound, radius,
                       [bound](const NormalMulticurve& p) { return pantsNeighbors(p, bound); });
}

GraphSnapshot buildSepSnapshot(const NormalMulticurve& base, int bound, int radius, bool prime) {
  if (!isSeparatingMulticurve(base)) throw LabError(Err::NotSeparating, "basepoint is not a separating multicurve");
  const auto& pool = enumerateMulticurves(base.tri->sig, bound, true);
  GraphKind kind = prime ? GraphKind::SepPrime : GraphKind::Sep;
  return buildSnapshot(kind, base, bound, radius, poolNeighbors(kind, pool));
}

int graphDistance(const GraphSnapshot& s, const NormalMulticurve& u, const NormalMulticurve& v) {
  int a = s.find(u), b = s.find(v);
  if (a < 0 || b < 0) throw LabError(Err::UnknownVertex, "vertex not in snapshot " + s.digest());
  int d = s.distancesFrom(a)[b];
  if (d < 0) throw LabError(Err::Unreachable, "no path inside snapshot " + s.digest());
  return d;
}

namespace {

json bodyJson(const GraphSnapshot& s) {
  json vs = json::array();
  for (size_t v = 0; v < s.vertices.size(); ++v)
    vs.push_back({{"w", s.vertices[v].weights}, {"depth", s.depth[v]}});
  json es = json::array();
  for (auto& [u, v] : s.edges()) es.push_back({u, v});
  return {{"vertices", vs}, {"edges", es}};
}

} // namespace

std::string snapshotJson(const GraphSnapshot& s) {
  json j;
  j["header"] = json::parse(s.headerJson());
  j["digest"] = s.digest();
  json body = bodyJson(s);
  j["body_digest"] = hex64(fnv1a(body.dump()));
  j["vertices"] = body["vertices"];
  j["edges"] = body["edges"];
  return j.dump(1);
}

GraphSnapshot snapshotFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw LabError(Err::DataFormat, std::string("snapshot is not valid JSON: ") + e.what());
  }
  std::string digest = j.value("digest", std::string("?"));
  try {
    GraphSnapshot s;
    const json& h = j.at("header");
    s.kind = parseKind(h.at("kind").get<std::string>());
    s.surface = parseSig(h.at("surface").get<std::string>());
    s.weightBound = h.at("weight_bound").get<int>();
    s.radius = h.at("radius").get<int>();
    s.dataVersion = h.at("data_version").get<std::string>();
    if (hex64(fnv1a(h.dump())) != digest) throw LabError(Err::DataFormat, "header does not match its digest");
    json body{{"vertices", j.at("vertices")}, {"edges", j.at("edges")}};
    if (hex64(fnv1a(body.dump())) != j.at("body_digest").get<std::string>())
      throw LabError(Err::DataFormat, "vertex table or edge list does not match the body digest");
    if (s.dataVersion != kDataVersion)
      throw LabError(Err::DataFormat, "data version " + s.dataVersion + " is not " + kDataVersion);
    const Triangulation& tri = referenceTriangulation(s.surface);
    for (auto& v : j.at("vertices")) {
      NormalMulticurve c = canonicalize(v.at("w").get<std::vector<int>>(), tri);
      s.index[c.weights] = static_cast<int>(s.vertices.size());
      s.vertices.push_back(c);
      s.depth.push_back(v.at("depth").get<int>());
    }
    s.adj.assign(s.vertices.size(), {});
    for (auto& e : j.at("edges")) {
      int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= static_cast<int>(s.vertices.size()) || v >= static_cast<int>(s.vertices.size()))
        throw LabError(Err::DataFormat, "edge endpoint out of range");
      s.adj[u].push_back(v);
      s.adj[v].push_back(u);
    }
    for (auto& a : s.adj) std::sort(a.begin(), a.end());
    if (s.basepointFingerprint() != h.at("basepoint").get<std::string>())
      throw LabError(Err::DataFormat, "basepoint fingerprint mismatch");
    return s;
  } catch (const LabError& e) {
    throw LabError(Err::DataFormat, "snapshot " + digest + " failed to load: " + e.what());
  } catch (const json::exception& e) {
    throw LabError(Err::DataFormat, "snapshot " + digest + " failed to load: " + e.what());
  }
}

std::string saveSnapshot(const GraphSnapshot& s, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::string path = (std::filesystem::path(dir) / (std::string(kindName(s.kind)) + "-" + s.digest() + ".json")).string();
  std::ofstream out(path);
  if (!out) throw LabError(Err::Io, "cannot write " + path);
  out << snapshotJson(s) << "\n";
  return path;
}

GraphSnapshot loadSnapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LabError(Err::Io, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return snapshotFromJson(buf.str());
}

} // namespace curvelab

#include "curvelab/surface.hpp"

#include "curvelab/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace curvelab {

const char* const kDataVersion = "cl-tri-1";

std::string SurfaceSig::str() const {
  return "S" + std::to_string(genus) + "," + std::to_string(boundary);
}

int complexity(SurfaceSig s) { return 3 * s.genus - 3 + s.boundary; }
int eulerChar(SurfaceSig s) { return 2 - 2 * s.genus - s.boundary; }

bool hasReferenceTriangulation(SurfaceSig s) {
  static const SurfaceSig known[] = {{1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 0}, {2, 1}, {0, 3}};
  for (auto k : known)
    if (k == s) return true;
  return false;
}

SurfaceSig parseSig(const std::string& text) {
  SurfaceSig s;
  char comma = 0;
  std::istringstream in(!text.empty() && (text[0] == 'S' || text[0] == 's') ? text.substr(1) : text);
  if (!(in >> s.genus >> comma >> s.boundary) || comma != ',' || s.genus < 0 || s.boundary < 0)
    throw LabError(Err::UnsupportedSurface, "cannot parse surface '" + text + "'");
  return s;
}

namespace {

struct Letter {
  int pair;
  int sign;
};

std::vector<Letter> polygonWord(int g, int n) {
  std::vector<Letter> w;
  int id = 0;
  for (int i = 0; i < g; ++i) {
    int a = id++, b = id++;
    w.push_back({a, 1});
    w.push_back({b, 1});
    w.push_back({a, -1});
    w.push_back({b, -1});
  }
  for (int j = 0; j + 1 < n; ++j) {
    int c = id++;
    w.push_back({c, 1});
    w.push_back({c, -1});
  }
  return w;
}

int findRoot(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool tryApex(const std::vector<Letter>& word, int apex, Triangulation& tri) {
  const int N = static_cast<int>(word.size());
  const int npairs = N / 2;
  const int T = N - 2;
  tri.edge.assign(T, {-1, -1, -1});
  tri.glue.assign(T, {});
  // polygon side k (vertex k -> k+1) lives in exactly one triangle
  std::vector<Side> sideOfPoly(N);
  int nextId = npairs;
  std::vector<int> diag(N, -1); // id of diagonal apex -> apex+i
  for (int i = 2; i <= N - 2; ++i) diag[i] = nextId++;
  for (int i = 1; i <= N - 2; ++i) {
    int t = i - 1;
    // side 0: apex -> apex+i, side 1: apex+i -> apex+i+1, side 2: apex+i+1 -> apex
    if (i == 1) {
      sideOfPoly[apex % N] = {t, 0};
      tri.edge[t][0] = word[apex % N].pair;
    } else {
      tri.edge[t][0] = diag[i];
    }
    sideOfPoly[(apex + i) % N] = {t, 1};
    tri.edge[t][1] = word[(apex + i) % N].pair;
    if (i + 1 == N - 1) {
      sideOfPoly[(apex + N - 1) % N] = {t, 2};
      tri.edge[t][2] = word[(apex + N - 1) % N].pair;
    } else {
      tri.edge[t][2] = diag[i + 1];
    }
  }
  for (int t = 0; t < T; ++t) {
    auto& e = tri.edge[t];
    if (e[0] == e[1] || e[1] == e[2] || e[0] == e[2]) return false; // self-folded
  }
  for (int i = 2; i <= N - 2; ++i) {
    Side a{i - 2, 2}, b{i - 1, 0};
    tri.glue[a.t][a.s] = b;
    tri.glue[b.t][b.s] = a;
  }
  std::vector<int> first(npairs, -1);
  for (int k = 0; k < N; ++k) {
    int p = word[k].pair;
    if (first[p] < 0) {
      first[p] = k;
      continue;
    }
    Side a = sideOfPoly[first[p]], b = sideOfPoly[k];
    tri.glue[a.t][a.s] = b;
    tri.glue[b.t][b.s] = a;
  }
  int E = npairs + (N - 3);
  tri.edgeSides.assign(E, {Side{-1, -1}, Side{-1, -1}});
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      auto& es = tri.edgeSides[tri.edge[t][s]];
      if (es[0].t < 0) es[0] = {t, s};
      else es[1] = {t, s};
    }
  std::vector<int> parent(3 * T);
  std::iota(parent.begin(), parent.end(), 0);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      Side o = tri.glue[t][s];
      int a = findRoot(parent, 3 * t + s), b = findRoot(parent, 3 * o.t + (o.s + 1) % 3);
      parent[a] = b;
    }
  std::map<int, int> cls;
  tri.vertex.assign(T, {});
  for (int t = 0; t < T; ++t)
    for (int c = 0; c < 3; ++c) {
      int r = findRoot(parent, 3 * t + c);
      auto it = cls.emplace(r, static_cast<int>(cls.size())).first;
      tri.vertex[t][c] = it->second;
    }
  tri.nverts = static_cast<int>(cls.size());
  return true;
}

} // namespace

Triangulation buildCells(SurfaceSig sig) {
  if (!hasReferenceTriangulation(sig))
    throw LabError(Err::UnsupportedSurface, sig.str() + " has no reference triangulation");
  Triangulation tri;
  tri.sig = sig;
  tri.version = kDataVersion;
  tri.closed = sig.boundary == 0;
  int n = tri.closed ? 1 : sig.boundary; // closed surfaces reuse the once-punctured cells
  auto word = polygonWord(sig.genus, n);
  bool ok = false;
  for (int apex = 0; apex < static_cast<int>(word.size()) && !ok; ++apex) ok = tryApex(word, apex, tri);
  if (!ok) throw LabError(Err::UnsupportedSurface, "no fan without self-folded triangles for " + sig.str());
  int chi = 2 - 2 * sig.genus - n;
  if (tri.nverts != n || tri.ntri() != -2 * chi || tri.nedges() != -3 * chi)
    throw LabError(Err::DataFormat, "cell structure check failed for " + sig.str());
  return tri;
}

std::string dataDir() {
  if (const char* env = std::getenv("CURVELAB_DATA")) return env;
#ifdef CURVELAB_DATA_DIR
  return CURVELAB_DATA_DIR;
#else
  return "data";
#endif
}

std::string triangulationJson(const Triangulation& tri) {
  nlohmann::ordered_json j;
  j["version"] = tri.version;
  j["surface"] = {tri.sig.genus, tri.sig.boundary};
  j["closed"] = tri.closed;
  auto tris = nlohmann::ordered_json::array();
  for (auto& e : tri.edge) tris.push_back({e[0], e[1], e[2]});
  j["triangles"] = tris;
  auto gl = nlohmann::ordered_json::array();
  for (int t = 0; t < tri.ntri(); ++t)
    for (int s = 0; s < 3; ++s) {
      Side o = tri.glue[t][s];
      if (std::make_pair(t, s) < std::make_pair(o.t, o.s)) gl.push_back({t, s, o.t, o.s});
    }
  j["gluings"] = gl;
  j["marking"] = tri.marking;
  return j.dump(1);
}

Triangulation triangulationFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw LabError(Err::DataFormat, std::string("bad triangulation json: ") + e.what());
  }
  if (j.value("version", std::string()) != kDataVersion)
    throw LabError(Err::DataFormat, "triangulation data version mismatch: expected " + std::string(kDataVersion));
  SurfaceSig sig{j["surface"][0].get<int>(), j["surface"][1].get<int>()};
  Triangulation tri = buildCells(sig);
  std::vector<std::array<int, 3>> edges;
  for (auto& e : j["triangles"]) edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  if (edges != tri.edge) throw LabError(Err::DataFormat, "triangles in data file differ from the pinned cells");
  for (auto& g : j["gluings"]) {
    Side a{g[0].get<int>(), g[1].get<int>()}, b{g[2].get<int>(), g[3].get<int>()};
    if (!(tri.glue[a.t][a.s] == b)) throw LabError(Err::DataFormat, "gluing mismatch in data file");
  }
  for (auto& m : j["marking"]) {
    auto w = m.get<std::vector<int>>();
    if (static_cast<int>(w.size()) != tri.nedges()) throw LabError(Err::DataFormat, "marking vector length");
    tri.marking.push_back(w);
  }
  return tri;
}

const Triangulation& referenceTriangulation(SurfaceSig sig) {
  static std::mutex mu;
  static std::map<SurfaceSig, std::unique_ptr<Triangulation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(sig);
  if (it != cache.end()) return *it->second;
  if (!hasReferenceTriangulation(sig))
    throw LabError(Err::UnsupportedSurface, sig.str() + " is outside the supported set");
  std::string path = dataDir() + "/tri_" + std::to_string(sig.genus) + "_" + std::to_string(sig.boundary) + ".json";
  std::ifstream in(path);
  std::unique_ptr<Triangulation> tri;
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    tri = std::make_unique<Triangulation>(triangulationFromJson(ss.str()));
  } else {
    tri = std::make_unique<Triangulation>(buildCells(sig)); // marking filled in by the data generator
  }
  auto& ref = *tri;
  cache.emplace(sig, std::move(tri));
  return ref;
}

} // namespace curvelab

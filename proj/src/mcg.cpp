#include "curvelab/mcg.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/s20.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <mutex>
#include <regex>
#include <sstream>

namespace curvelab {

namespace {

// positions of a component travelled backwards
std::vector<int> reversedPositions(const Triangulation& tri, const std::vector<int>& w, const Component& c) {
  const int m = static_cast<int>(c.path.size());
  std::vector<int> out(m);
  for (int k = 0; k < m; ++k) {
    Side o = across(tri, c.path[m - 1 - k]);
    out[k] = w[tri.edge[o.t][o.s]] - 1 - c.pos[m - 1 - k];
  }
  return out;
}

struct Insertion {
  int at;
  int key;
  Path loop;
};

Path twistPath(const Triangulation& tri, const Component& cc, const std::vector<int>& cw, const Path& a, int n) {
  std::vector<Insertion> ins;
  const Path cf = cc.path;
  const Path cr = reversed(tri, cf);
  const std::vector<int> posf = cc.pos, posr = reversedPositions(tri, cw, cc);
  const int m = static_cast<int>(cf.size());
  for (int dir = 0; dir < 2; ++dir) {
    const Path& cp = dir == 0 ? cf : cr;
    const auto& pos = dir == 0 ? posf : posr;
    forEachRun(tri, a, cp, [&](const Run& r) {
      if (!r.crosses()) return;
      // crossing direction measured against c itself
      bool rightToLeft = dir == 0 ? (!r.aLeftStart && r.aLeftEnd) : (r.aLeftStart && !r.aLeftEnd);
      Path loop = rotated(cp, r.j); // c or c^-1 based where a meets it
      bool loopIsForwardC = dir == 0;
      bool wantForward = n > 0 ? !rightToLeft : rightToLeft;
      if (wantForward != loopIsForwardC) loop = reversed(tri, loop);
      Path rep;
      for (int k = 0; k < std::abs(n); ++k) rep.insert(rep.end(), loop.begin(), loop.end());
      int x = a[r.i].s;
      int z = across(tri, cp[(r.j + m - 1) % m]).s;
      int key = z == (x + 2) % 3 ? -pos[r.j] : pos[r.j];
      ins.push_back({r.i, key, std::move(rep)});
    });
  }
  std::stable_sort(ins.begin(), ins.end(), [](const Insertion& p, const Insertion& q) {
    return std::tie(p.at, p.key) < std::tie(q.at, q.key);
  });
  Path out;
  size_t k = 0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    for (; k < ins.size() && ins[k].at == i; ++k) out.insert(out.end(), ins[k].loop.begin(), ins[k].loop.end());
    out.push_back(a[i]);
  }
  return reducePath(tri, out);
}

} // namespace

NormalMulticurve twistCurve(const NormalMulticurve& c, const NormalMulticurve& a, int n) {
  if (c.tri != a.tri) throw LabError(Err::SurfaceMismatch, "twist curve and target on different surfaces");
  if (n == 0) return a;
  if (c.size() != 1) throw LabError(Err::InvalidDescriptor, "twisting curve must be connected");
  const Triangulation& down = *a.tri;
  // closed surfaces are twisted on lifts; the result is read back downstairs
  const NormalMulticurve cl = asLift(c), al = asLift(a);
  const Triangulation& tri = *cl.tri;
  std::vector<int> w(tri.nedges(), 0);
  for (const auto& comp : al.comps) {
    Path p = twistPath(tri, cl.comps[0], cl.weights, comp.path, n);
    auto pw = pathWeights(tri, p);
    for (int e = 0; e < tri.nedges(); ++e) w[e] += pw[e];
  }
  return canonicalize(w, down);
}

PunctureLoop edgeLoop(const Triangulation& tri, int edge) {
  if (edge < 0 || edge >= tri.nedges()) throw LabError(Err::InvalidDescriptor, "no edge " + std::to_string(edge));
  Side s = tri.edgeSides[edge][0];
  return PunctureLoop{s.t, s.s, {}, (s.s + 1) % 3};
}

namespace {

// walk around the vertex from corner (t,c) until corner (t1,c1)
Path partialLoop(const Triangulation& tri, int t, int c, int t1, int c1, bool forward) {
  Path out;
  int ct = t, cc = c;
  for (int guard = 0; !(ct == t1 && cc == c1); ++guard) {
    if (guard > 3 * tri.ntri()) throw LabError(Err::NotSimpleLoop, "loop corners lie at different punctures");
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
  }
  return out;
}

std::vector<int> curveWeightsOrEmpty(const Triangulation& tri, const Path& raw) {
  Path p = reducePath(tri, raw);
  if (p.empty()) return {};
  if (selfIntersection(tri, p) != 0) throw LabError(Err::NotSimpleLoop, "push-off is not simple");
  auto w = pathWeights(tri, p);
  TraceReport rep = traceWeights(tri, w);
  if (rep.essential.empty()) return {};
  return w;
}

} // namespace

std::pair<std::vector<int>, std::vector<int>> pushOffWeights(const Triangulation& tri, const PunctureLoop& loop) {
  int tEnd = loop.crossings.empty() ? loop.startTri : across(tri, loop.crossings.back()).t;
  if (!loop.crossings.empty() && loop.crossings.front().t != loop.startTri)
    throw LabError(Err::InvalidDescriptor, "loop crossings do not start in the start triangle");
  Path plus = loop.crossings, minus = loop.crossings;
  Path f = partialLoop(tri, tEnd, loop.endCorner, loop.startTri, loop.startCorner, true);
  Path b = partialLoop(tri, tEnd, loop.endCorner, loop.startTri, loop.startCorner, false);
  plus.insert(plus.end(), f.begin(), f.end());
  minus.insert(minus.end(), b.begin(), b.end());
  return {curveWeightsOrEmpty(tri, plus), curveWeightsOrEmpty(tri, minus)};
}

TwistWord pointPush(const Triangulation& tri, const PunctureLoop& loop, int exp, const std::string& id) {
  if (tri.closed || tri.sig.boundary != 1)
    throw LabError(Err::SurfaceMismatch, "point pushing needs a once-punctured surface");
  auto [plus, minus] = pushOffWeights(tri, loop);
  TwistWord w;
  w.surface = tri.sig;
  if (plus.empty() || minus.empty()) return w; // a trivial push-off means a null loop
  NormalMulticurve gp = canonicalize(plus, tri), gm = canonicalize(minus, tri);
  if (gp.weights == gm.weights) return w;
  // exponent k: (T+ T-^-1)^k, the two twists commute
  w.letters.push_back({TwistLetter::Twist, id + "+", gp, {}, exp});
  w.letters.push_back({TwistLetter::Twist, id + "-", gm, {}, -exp});
  return w;
}

TwistWord TwistWord::inverse() const {
  TwistWord w{surface, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    TwistLetter l = *it;
    l.exp = -l.exp;
    w.letters.push_back(l);
  }
  return w;
}

std::string TwistWord::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < letters.size(); ++i)
    out << (i ? " " : "") << (letters[i].kind == TwistLetter::Twist ? "T[" : "P[") << letters[i].id << "]^"
        << letters[i].exp;
  return out.str();
}

NormalMulticurve applyTwist(const TwistWord& w, const NormalMulticurve& c) {
  if (w.surface != c.tri->sig)
    throw LabError(Err::SurfaceMismatch, "word on " + w.surface.str() + " applied to a curve on " + c.tri->sig.str());
  NormalMulticurve cur = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->kind == TwistLetter::Twist) {
      cur = twistCurve(it->curve, cur, it->exp);
    } else {
      TwistWord push = pointPush(*c.tri, it->loop, it->exp, it->id);
      cur = applyTwist(push, cur);
    }
  }
  return cur;
}

TwistWord parseWord(const std::string& text, SurfaceSig sig, const std::map<std::string, NormalMulticurve>& curves) {
  static const std::regex letter(R"(([TP])\[([^\]]+)\]\^(-?\d+))");
  TwistWord w;
  w.surface = sig;
  std::istringstream in(text);
  std::string tok;
  const Triangulation& tri = referenceTriangulation(sig);
  while (in >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, letter)) throw LabError(Err::DataFormat, "bad word letter '" + tok + "'");
    TwistLetter l;
    l.id = m[2];
    l.exp = std::stoi(m[3]);
    if (l.exp == 0) throw LabError(Err::DataFormat, "zero exponent in '" + tok + "'");
    if (m[1] == "T") {
      auto it = curves.find(l.id);
      if (it == curves.end()) throw LabError(Err::DataFormat, "unknown curve id '" + l.id + "'");
      if (it->second.tri != &tri) throw LabError(Err::SurfaceMismatch, "curve '" + l.id + "' lives elsewhere");
      l.curve = it->second;
    } else {
      l.kind = TwistLetter::Push;
      l.loop = edgeLoop(tri, std::stoi(l.id));
    }
    w.letters.push_back(l);
  }
  return w;
}

const PseudoAnosovSeed& pseudoAnosovSeed() {
  static std::once_flag once;
  static std::unique_ptr<PseudoAnosovSeed> seed;
  std::call_once(once, [] {
    std::string path = dataDir() + "/seed_2_0.json";
    std::ifstream in(path);
    if (!in) throw LabError(Err::Io, "cannot open " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw LabError(Err::DataFormat, path + ": " + e.what());
    }
    if (j.value("version", std::string()) != kDataVersion) throw LabError(Err::DataFormat, path + ": version mismatch");
    auto s = std::make_unique<PseudoAnosovSeed>();
    const Triangulation& down = closedCells();
    for (auto& [k, v] : j["curves"].items()) s->curves[k] = canonicalize(v.get<std::vector<int>>(), down);
    s->alpha0 = s->curves.at("alpha0");
    s->down = parseWord(j["word"].get<std::string>(), {2, 0}, s->curves);
    std::map<std::string, NormalMulticurve> lifted;
    for (auto& [k, v] : s->curves) lifted[k] = liftCurve(v);
    s->up = parseWord(j["word"].get<std::string>(), {2, 1}, lifted);
    seed = std::move(s);
  });
  return *seed;
}

} // namespace curvelab

// Regenerates the shipped data files: reference cells with their marking
// systems, and the genus-two twist curves used by the pseudo-Anosov seed.
#include "curvelab/cut.hpp"
#include "curvelab/enumerate.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/mcg.hpp"
#include "curvelab/s20.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>

using namespace curvelab;

namespace {

using Table = std::vector<std::vector<int>>; // table[target][candidate]

// greedy: add the candidate splitting the most target pairs until all are apart
std::vector<int> pickMarking(const Table& tab, size_t ncand) {
  const size_t nt = tab.size();
  std::vector<int> chosen;
  std::vector<std::vector<int>> key(nt);
  auto classes = [&](const std::vector<std::vector<int>>& k) {
    std::set<std::vector<int>> s(k.begin(), k.end());
    return s.size();
  };
  auto filled = [&](const std::vector<int>& ch) {
    for (size_t t = 0; t < nt; ++t) {
      bool hit = false;
      for (int c : ch) hit = hit || tab[t][c] > 0;
      if (!hit) return false;
    }
    return true;
  };
  while (classes(key) < nt || !filled(chosen)) {
    int best = -1;
    size_t bestScore = 0;
    int bestHits = -1;
    for (size_t c = 0; c < ncand; ++c) {
      if (std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end()) continue;
      auto k2 = key;
      int hits = 0;
      for (size_t t = 0; t < nt; ++t) {
        k2[t].push_back(tab[t][c]);
        hits += tab[t][c] > 0;
      }
      size_t sc = classes(k2);
      if (best < 0 || sc > bestScore || (sc == bestScore && hits > bestHits)) {
        best = static_cast<int>(c);
        bestScore = sc;
        bestHits = hits;
      }
    }
    if (best < 0) throw LabError(Err::DataFormat, "candidates cannot separate the targets");
    chosen.push_back(best);
    for (size_t t = 0; t < nt; ++t) key[t].push_back(tab[t][best]);
  }
  return chosen;
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw LabError(Err::Io, "cannot write " + path);
  out << text << "\n";
  std::cout << "wrote " << path << "\n";
}

struct ClosedClasses {
  std::vector<NormalMulticurve> reps;
};

// classes downstairs of the lifts with weights <= bound, bucketed by probes
ClosedClasses closedClasses(int bound, const std::vector<NormalMulticurve>& probes) {
  ClosedClasses out;
  std::map<std::vector<int>, std::vector<int>> buckets;
  for (auto& l : enumerateCurves({2, 1}, bound)) {
    NormalMulticurve c = canonicalize(l.weights, closedCells());
    std::vector<int> key;
    for (auto& p : probes) key.push_back(intersectionNumber(c, p));
    auto& b = buckets[key];
    bool known = false;
    for (int r : b) known = known || sameClass(out.reps[r], c);
    if (known) continue;
    b.push_back(static_cast<int>(out.reps.size()));
    out.reps.push_back(c);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate curvelab data files"};
  std::string outDir = dataDir();
  // injectivity targets per surface; covers the bounds the tests and suite use
  std::map<std::string, int> verifyBound{{"S1,1", 12}, {"S0,4", 10}, {"S0,5", 6}, {"S1,2", 6}, {"S2,1", 6}};
  app.add_option("--out", outDir, "output directory");
  CLI11_PARSE(app, argc, argv);
  try {
    for (SurfaceSig sig : std::vector<SurfaceSig>{{0, 3}, {1, 1}, {0, 4}, {0, 5}, {1, 2}, {2, 1}}) {
      Triangulation tri = buildCells(sig);
      if (complexity(sig) > 0) {
        const auto& targets = enumerateCurves(sig, verifyBound.at(sig.str()));
        const auto& cands = enumerateCurves(sig, 2);
        Table tab(targets.size(), std::vector<int>(cands.size()));
        for (size_t t = 0; t < targets.size(); ++t)
          for (size_t c = 0; c < cands.size(); ++c) tab[t][c] = intersectionNumber(targets[t], cands[c]);
        for (int c : pickMarking(tab, cands.size())) tri.marking.push_back(cands[c].weights);
        std::cout << sig.str() << ": marking of " << tri.marking.size() << " curves over " << targets.size()
                  << " targets\n";
      }
      writeFile(outDir + "/tri_" + std::to_string(sig.genus) + "_" + std::to_string(sig.boundary) + ".json",
                triangulationJson(tri));
    }
    // genus two: probes are the classes of the lightest lifts
    ClosedClasses small = closedClasses(2, {});
    ClosedClasses targets = closedClasses(3, small.reps);
    Table tab(targets.reps.size(), std::vector<int>(small.reps.size()));
    for (size_t t = 0; t < targets.reps.size(); ++t)
      for (size_t c = 0; c < small.reps.size(); ++c) tab[t][c] = intersectionNumber(targets.reps[t], small.reps[c]);
    Triangulation closed = buildCells({2, 0});
    for (int c : pickMarking(tab, small.reps.size())) closed.marking.push_back(small.reps[c].weights);
    std::cout << "S2,0: marking of " << closed.marking.size() << " curves over " << targets.reps.size()
              << " classes\n";
    writeFile(outDir + "/tri_2_0.json", triangulationJson(closed));

    // chain a1 b1 a2 b2 a3 of nonseparating curves, consecutive ones meeting once
    const auto& reps = small.reps;
    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<int>> I(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) I[i][j] = intersectionNumber(reps[i], reps[j]);
    std::vector<char> nonsep(n);
    for (int i = 0; i < n; ++i) nonsep[i] = !isSeparatingMulticurve(reps[i]);
    std::vector<int> chain;
    std::function<bool()> grow = [&]() {
      if (chain.size() == 5) return true;
      for (int c = 0; c < n; ++c) {
        if (!nonsep[c]) continue;
        bool ok = true;
        for (size_t k = 0; k < chain.size() && ok; ++k) {
          int want = k + 1 == chain.size() ? 1 : 0;
          ok = chain[k] != c && I[chain[k]][c] == want;
        }
        if (!ok) continue;
        chain.push_back(c);
        if (grow()) return true;
        chain.pop_back();
      }
      return false;
    };
    if (!grow()) throw LabError(Err::DataFormat, "no chain of five curves among the light classes");
    const char* names[] = {"a1", "b1", "a2", "b2", "a3"};
    std::map<std::string, NormalMulticurve> curves;
    for (int k = 0; k < 5; ++k) curves[names[k]] = reps[chain[k]];
    const std::string word = "T[a3]^1 T[b2]^-1 T[b1]^-1 T[a2]^1 T[a1]^1";
    TwistWord f = parseWord(word, {2, 0}, curves);
    ClosedClasses wide = closedClasses(4, reps);
    NormalMulticurve alpha0;
    bool found = false;
    for (auto& c : wide.reps) {
      if (!isSeparatingMulticurve(c)) continue;
      NormalMulticurve fc = applyTwist(f, c);
      if (intersectionNumber(fc, c) == 4) {
        alpha0 = c;
        found = true;
        break;
      }
    }
    if (!found) throw LabError(Err::DataFormat, "no separating curve moved to intersection four");
    nlohmann::ordered_json j;
    j["version"] = kDataVersion;
    j["surface"] = {2, 0};
    j["word"] = word;
    nlohmann::ordered_json cj;
    for (auto k : {"a1", "a2", "a3", "b1", "b2"}) cj[k] = curves[k].weights;
    cj["alpha0"] = alpha0.weights;
    j["curves"] = cj;
    writeFile(outDir + "/seed_2_0.json", j.dump(1));
  } catch (const LabError& e) {
    std::cerr << "error: " << errName(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

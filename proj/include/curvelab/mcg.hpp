#pragma once

#include "curvelab/curve.hpp"

#include <map>
#include <string>
#include <vector>

namespace curvelab {

// Arc from the puncture back to itself: leaves corner startCorner of the
// first triangle, follows the crossings, ends at endCorner of the last one.
struct PunctureLoop {
  int startTri = 0, startCorner = 0;
  Path crossings;
  int endCorner = 0;
};
PunctureLoop edgeLoop(const Triangulation& tri, int edge);

struct TwistLetter {
  enum Kind { Twist, Push } kind = Twist;
  std::string id;
  NormalMulticurve curve; // Twist
  PunctureLoop loop;      // Push
  int exp = 1;
};

// letters.back() acts first, as in T_a T_b (b first)
struct TwistWord {
  SurfaceSig surface;
  std::vector<TwistLetter> letters;
  TwistWord inverse() const;
  std::string str() const;
};

// T_c^n(a); positive n is the left-handed twist convention recorded in the README
NormalMulticurve twistCurve(const NormalMulticurve& c, const NormalMulticurve& a, int n);
NormalMulticurve applyTwist(const TwistWord& w, const NormalMulticurve& c);

// the two boundary curves of a neighbourhood of loop + puncture; null if trivial
std::pair<std::vector<int>, std::vector<int>> pushOffWeights(const Triangulation& tri, const PunctureLoop& loop);
TwistWord pointPush(const Triangulation& tri, const PunctureLoop& loop, int exp = 1, const std::string& id = "loop");

struct PseudoAnosovSeed {
  TwistWord down;                                // on S2,0
  TwistWord up;                                  // on S2,1, lifted twisting curves
  std::map<std::string, NormalMulticurve> curves; // a1 a2 a3 b1 b2 alpha0 on S2,0
  NormalMulticurve alpha0;
};
const PseudoAnosovSeed& pseudoAnosovSeed();

// "T[a1]^1 P[3]^-1 ..." read right to left; ids resolve against curves, push ids are edge numbers
TwistWord parseWord(const std::string& text, SurfaceSig sig, const std::map<std::string, NormalMulticurve>& curves);

} // namespace curvelab

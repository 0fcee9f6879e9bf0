#include "curvelab/lab.hpp"

#include "curvelab/cut.hpp"
#include "curvelab/errors.hpp"
#include "curvelab/s20.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace curvelab {

using nlohmann::json;

void ExperimentConfig::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw LabError(Err::InvalidDescriptor, std::string("config field must be positive: ") + what);
  };
  need(!surfaces.empty(), "surface");
  need(weightBound > 0, "weight_bound");
  need(radius > 0, "radius");
  need(samples > 0, "samples");
  need(threshold > 0, "threshold");
  need(epsNum > 0 && epsDen > 0, "epsilon");
  need(universeBound > 0, "universe_bound");
  need(steps > 0, "steps");
  need(cap > 0, "cap");
}

static void parseEpsilon(const std::string& s, int& num, int& den) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      num = std::stoi(s), den = 1;
    } else {
      num = std::stoi(s.substr(0, slash));
      den = std::stoi(s.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw LabError(Err::InvalidDescriptor, "epsilon must look like p/q: " + s);
  }
}

ExperimentConfig configFromJson(const json& j, const ExperimentConfig& base) {
  ExperimentConfig c = base;
  if (!j.is_object()) throw LabError(Err::DataFormat, "config must be a JSON object");
  try {
    if (j.contains("surface")) {
      const json& s = j["surface"];
      c.surfaces.clear();
      if (s.is_array())
        for (auto& x : s) c.surfaces.push_back(parseSig(x.get<std::string>()));
      else
        c.surfaces.push_back(parseSig(s.get<std::string>()));
    }
    if (j.contains("weight_bound")) c.weightBound = j["weight_bound"].get<int>();
    if (j.contains("radius")) c.radius = j["radius"].get<int>();
    if (j.contains("samples")) c.samples = j["samples"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threshold")) c.threshold = j["threshold"].get<int>();
    if (j.contains("epsilon")) parseEpsilon(j["epsilon"].get<std::string>(), c.epsNum, c.epsDen);
    if (j.contains("universe_bound")) c.universeBound = j["universe_bound"].get<int>();
    if (j.contains("steps")) c.steps = j["steps"].get<int>();
    if (j.contains("cap")) c.cap = j["cap"].get<long>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw LabError(Err::DataFormat, std::string("bad config value: ") + e.what());
  }
  return c;
}

json loadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LabError(Err::Io, "cannot open config " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw LabError(Err::DataFormat, "config " + path + ": " + e.what());
  }
}

ExperimentConfig driverConfig(const json& file, const std::string& driver, const ExperimentConfig& base) {
  if (file.contains("drivers") && file["drivers"].contains(driver)) return configFromJson(file["drivers"][driver], base);
  return base;
}

json configJson(const ExperimentConfig& c) {
  json s = json::array();
  for (auto& x : c.surfaces) s.push_back(x.str());
  return {{"surface", s},
          {"weight_bound", c.weightBound},
          {"radius", c.radius},
          {"samples", c.samples},
          {"seed", c.seed},
          {"threshold", c.threshold},
          {"epsilon", std::to_string(c.epsNum) + "/" + std::to_string(c.epsDen)},
          {"universe_bound", c.universeBound},
          {"steps", c.steps},
          {"data_version", kDataVersion}};
}

std::string renderTable(const Report& r) {
  std::ostringstream os;
  os << r.driver << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (!r.table.empty()) {
    std::vector<size_t> width;
    for (auto& row : r.table)
      for (size_t k = 0; k < row.size(); ++k) {
        if (width.size() <= k) width.push_back(0);
        width[k] = std::max(width[k], row[k].size());
      }
    for (size_t i = 0; i < r.table.size(); ++i) {
      const auto& row = r.table[i];
      for (size_t k = 0; k < row.size(); ++k) {
        os << (k ? "  " : "") << row[k];
        if (k + 1 < row.size()) os << std::string(width[k] - row[k].size(), ' ');
      }
      os << "\n";
      if (i == 0) {
        size_t total = 0;
        for (size_t k = 0; k < width.size(); ++k) total += width[k] + (k ? 2 : 0);
        os << std::string(total, '-') << "\n";
      }
    }
  }
  for (auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

void writeReport(const Report& r, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw LabError(Err::Io, "cannot create report directory " + dir);
  json j = r.data;
  j["driver"] = r.driver;
  j["pass"] = r.pass;
  j["notes"] = r.notes;
  std::string base = dir + "/" + r.driver;
  std::ofstream js(base + ".json"), txt(base + ".txt");
  if (!js || !txt) throw LabError(Err::Io, "cannot write report " + base);
  js << j.dump(2) << "\n";
  txt << renderTable(r);
}

static std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<size_t> id(x.size());
  std::iota(id.begin(), id.end(), 0);
  std::stable_sort(id.begin(), id.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  for (size_t i = 0; i < id.size();) {
    size_t j = i;
    while (j < id.size() && x[id[j]] == x[id[i]]) ++j;
    for (size_t k = i; k < j; ++k) r[id[k]] = (i + j - 1) / 2.0; // average rank of the tie block
    i = j;
  }
  return r;
}

static double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  double n = a.size(), ma = 0, mb = 0;
  for (size_t i = 0; i < a.size(); ++i) ma += a[i], mb += b[i];
  ma /= n, mb /= n;
  double s = 0, sa = 0, sb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    s += (a[i] - ma) * (b[i] - mb);
    sa += (a[i] - ma) * (a[i] - ma);
    sb += (b[i] - mb) * (b[i] - mb);
  }
  if (sa == 0 || sb == 0) return std::nan("");
  return s / std::sqrt(sa * sb);
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2) return std::nan("");
  return pearson(ranks(a), ranks(b));
}

AffineBound upperEnvelope(const std::vector<double>& x, const std::vector<double>& y) {
  AffineBound f;
  if (x.empty()) return f;
  double n = x.size(), mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n, my /= n;
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  f.slope = sxx > 0 ? sxy / sxx : 0;
  f.offset = -INFINITY;
  for (size_t i = 0; i < x.size(); ++i) f.offset = std::max(f.offset, y[i] - f.slope * x[i]);
  return f;
}

std::string labelComponent(const NormalMulticurve& c) {
  if (c.size() != 1 || !isSeparatingMulticurve(c)) throw LabError(Err::NotSeparating, "label needs a separating curve");
  NormalMulticurve down = c.tri->closed ? c : forgetBoundary(c);
  std::string s;
  for (int x : fingerprint(down)) s += (s.empty() ? "" : ".") + std::to_string(x);
  return s;
}

} // namespace curvelab

#pragma once
#include "cjac/cabled.hpp"
#include "cjac/shuffle.hpp"

#include <json.hpp>

#include <string>

namespace cjac {

using nlohmann::json;

inline std::string str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// terms sorted by (q,t), coefficients as decimal strings
inline json to_json(const QTPoly& p) {
  json terms = json::array();
  for (auto& [k, c] : p.terms()) terms.push_back({{"q", k.first}, {"t", k.second}, {"c", c.str()}});
  return {{"vars", {"q", "t"}}, {"terms", terms}};
}

inline QTPoly qtpoly_from_json(const json& j) {
  QTPoly p;
  for (auto& t : j.at("terms")) p.add(t.at("q").get<int>(), t.at("t").get<int>(), Int(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const UPoly& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms()) terms.push_back({{"t", e}, {"c", c.str()}});
  return {{"vars", {"t"}}, {"terms", terms}};
}

inline UPoly upoly_from_json(const json& j) {
  UPoly p;
  for (auto& t : j.at("terms")) p.add(t.at("t").get<int>(), Int(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const Subset& D) {
  const auto& p = D.params();
  return {{"n", p.n}, {"m", p.m}, {"d", p.d}, {"gens", D.gens()}};
}

inline Subset subset_from_json(const json& j, int s = 1) {
  Params p{j.at("n").get<int>(), j.at("m").get<int>(), j.at("d").get<int>(), s};
  return Subset::from_generators(p, j.at("gens").get<std::vector<long>>());
}

inline json to_json(const ClassDecomposition& dec) {
  json comps = json::array();
  for (auto& c : dec.comps) comps.push_back({{"theta_gens", c.theta0.gens()}, {"shift", c.shift}, {"residue", c.residue}});
  return {{"n", dec.params.n}, {"m", dec.params.m}, {"d", dec.params.d}, {"components", comps}};
}

inline json to_json(const BicoloredDigraph& g) {
  json edges = json::array();
  for (auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"color", e.color == Color::blue ? "blue" : "green"}});
  return edges;
}

inline json to_json(const Normalization& nz) {
  json j = to_json(nz.decomposition);
  json mins = json::array();
  for (auto& c : nz.minimal.comps) mins.push_back(c.shift);
  j["minimal_shifts"] = mins;
  j["digraph"] = to_json(nz.graph);
  j["path"] = nz.path;
  j["normalized"] = to_json(nz.result);
  return j;
}

inline json to_json(const CabledPath& cp) {
  json runs = json::array();
  for (auto& r : cp.runs) runs.push_back(to_json(decompose(r)));
  return {{"pattern", {{"v", cp.pattern.v}, {"h", cp.pattern.h}}}, {"runs", runs}};
}

inline CabledPath cabled_from_json(const json& j, int n, int m, int d, int s) {
  CabledPath cp;
  cp.pattern = {d, s, j.at("pattern").at("v").get<std::vector<int>>(), j.at("pattern").at("h").get<std::vector<int>>()};
  for (auto& r : j.at("runs")) {
    Params rp{n, m, r.at("d").get<int>(), 1};
    ClassDecomposition dec{rp, {}};
    for (auto& c : r.at("components"))
      dec.comps.push_back({Theta(n, m, c.at("theta_gens").get<std::vector<long>>()), c.at("shift").get<long>(), c.at("residue").get<int>()});
    cp.runs.push_back(reconstruct(dec));
  }
  return cp;
}

inline json to_json(const IdentityReport& r) {
  json pts = json::array(), lhs = json::array(), rhs = json::array();
  for (auto& [q, t] : r.points) pts.push_back({{"q", str(q)}, {"t", str(t)}});
  for (auto& v : r.lhs) lhs.push_back(str(v));
  for (auto& v : r.rhs) rhs.push_back(str(v));
  return {{"identity", "syt_sum_equals_qt_catalan"},
          {"params", {{"n", r.n}, {"m", r.m}, {"d", r.d}}},
          {"points", pts},
          {"lhs", lhs},
          {"rhs", rhs},
          {"pass", r.pass}};
}

}  // namespace cjac

#include "lct/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lct/errors.hpp"

namespace lct {

std::size_t WeightedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i].name == name) return i;
  throw InputError("no coordinate named " + name);
}

std::string WeightedSpace::display() const {
  std::string s = "P(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i].weight);
  }
  return s + ")";
}

std::int64_t Monomial::degree(const WeightedSpace& S) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * S.weight(i);
  return d;
}

std::string Monomial::display(const WeightedSpace& S) const {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += S.coords[i].name;
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

WeightedSpace validate_space(std::vector<Coordinate> coords) {
  if (coords.empty()) throw InputError("empty coordinate list");
  std::set<std::string> names;
  for (const auto& c : coords) {
    if (c.weight <= 0)
      throw InputError("nonpositive weight for coordinate " + c.name);
    if (!names.insert(c.name).second)
      throw InputError("duplicate coordinate name " + c.name);
  }
  std::stable_sort(coords.begin(), coords.end(),
                   [](const Coordinate& a, const Coordinate& b) {
                     return a.weight < b.weight;
                   });
  WeightedSpace S;
  S.coords = std::move(coords);
  // Well-formed iff dropping any one coordinate leaves weights with gcd 1.
  S.well_formed = true;
  for (std::size_t skip = 0; skip < S.coords.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t i = 0; i < S.coords.size(); ++i)
      if (i != skip) g = std::gcd(g, S.coords[i].weight);
    if (g != 1) {
      S.well_formed = false;
      break;
    }
  }
  return S;
}

namespace {

void enumerate(const WeightedSpace& S, std::size_t i, std::int64_t rem,
               Monomial& cur, std::vector<Monomial>& out) {
  if (i == S.coords.size()) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  std::int64_t w = S.weight(i);
  for (std::int64_t e = 0; e * w <= rem; ++e) {
    cur.exps[i] = e;
    enumerate(S, i + 1, rem - e * w, cur, out);
  }
  cur.exps[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const WeightedSpace& S,
                                          std::int64_t d) {
  if (d < 0) throw InputError("negative degree");
  std::vector<Monomial> out;
  Monomial cur;
  cur.exps.assign(S.coords.size(), 0);
  enumerate(S, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return a.exps < b.exps;
  });
  return out;
}

Rat anticanonical_degree_wci(const FamilyRecord& F) {
  if (!F.is_wci2() || F.degrees.size() != 2)
    throw InputError("anticanonical_degree_wci needs a wci2 family");
  Rat v(F.degrees[0]);
  v *= Rat(F.degrees[1]);
  for (const auto& c : F.space.coords) v /= Rat(c.weight);
  return v;
}

std::int64_t h0_anticanonical(const FamilyRecord& F) {
  std::int64_t n = 0;
  for (const auto& c : F.space.coords)
    if (c.weight == 1) ++n;
  return n;
}

}  // namespace lct

#include "lct/singularities.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lct/errors.hpp"

namespace lct {

std::optional<QuotientType> normalize_quotient_type(std::int64_t r,
                                                    std::int64_t b1,
                                                    std::int64_t b2,
                                                    std::int64_t b3) {
  if (r < 2) return std::nullopt;
  std::int64_t bs[3] = {((b1 % r) + r) % r, ((b2 % r) + r) % r,
                        ((b3 % r) + r) % r};
  for (std::int64_t b : bs)
    if (b == 0 || std::gcd(b, r) != 1) return std::nullopt;
  std::optional<std::int64_t> best;
  for (std::int64_t u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    std::int64_t e[3] = {u * bs[0] % r, u * bs[1] % r, u * bs[2] % r};
    // Look for a permutation (1, a, r-a).
    for (int i = 0; i < 3; ++i) {
      if (e[i] != 1) continue;
      std::int64_t p = e[(i + 1) % 3], q = e[(i + 2) % 3];
      if ((p + q) % r == 0) {
        std::int64_t a = std::min(p, q);
        if (!best || a < *best) best = a;
      }
    }
  }
  if (!best) return std::nullopt;
  QuotientType t;
  t.r = r;
  t.a = *best;
  return t;
}

bool is_terminal(const QuotientType& t) {
  return t.r >= 2 && t.a >= 1 && t.a < t.r && std::gcd(t.a, t.r) == 1;
}

std::vector<Stratum> singular_strata(const WeightedSpace& S) {
  std::set<std::int64_t> candidates;
  for (const auto& c : S.coords)
    for (std::int64_t r = 2; r <= c.weight; ++r)
      if (c.weight % r == 0) candidates.insert(r);
  std::vector<Stratum> out;
  for (std::int64_t r : candidates) {
    Stratum s;
    s.r = r;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < S.coords.size(); ++i) {
      if (S.weight(i) % r == 0) {
        s.coords.push_back(i);
        g = std::gcd(g, S.weight(i));
      }
    }
    if (!s.coords.empty() && g == r) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const Stratum& a, const Stratum& b) { return a.r > b.r; });
  return out;
}

namespace {

// Is d a non-negative integer combination of the given weights?
bool representable(std::int64_t d, const std::vector<std::int64_t>& ws) {
  if (d == 0) return true;
  std::vector<char> dp(std::size_t(d) + 1, 0);
  dp[0] = 1;
  for (std::int64_t w : ws)
    for (std::int64_t v = w; v <= d; ++v)
      if (dp[std::size_t(v - w)]) dp[std::size_t(v)] = 1;
  return dp[std::size_t(d)] != 0;
}

}  // namespace

StratumRestriction stratum_orbifold_degree(const FamilyRecord& F,
                                           const Stratum& s) {
  if (!F.is_wci2())
    throw InputError("stratum_orbifold_degree needs a wci2 family");
  std::vector<std::int64_t> ws;
  for (std::size_t i : s.coords) ws.push_back(F.space.weight(i));
  StratumRestriction res;
  for (std::int64_t d : F.degrees)
    if (representable(d, ws)) res.effective_degrees.push_back(d);
  std::size_t n = s.coords.size();
  std::size_t eff = res.effective_degrees.size();
  if (eff > n - 1) {
    res.kind = StratumKind::OverDetermined;
    res.note = "more effective equations than stratum dimension";
    return res;
  }
  if (eff == n - 1) {
    res.kind = StratumKind::Points;
    Rat v(1);
    for (std::int64_t d : res.effective_degrees) v *= Rat(d);
    for (std::int64_t w : ws) v /= Rat(w);
    res.orbifold_degree = v;
    return res;
  }
  res.kind = StratumKind::Curve;
  res.note = "stratum not cut to dimension zero";
  return res;
}

namespace {

// Coordinate killed by an equation of degree d that restricts to zero on
// the stratum: smallest index c outside the stratum and outside `used`
// with d - a_c a monomial degree of the stratum weights.
std::optional<std::size_t> tangent_coordinate(
    const FamilyRecord& F, const Stratum& s, std::int64_t d,
    const std::set<std::size_t>& used) {
  std::vector<std::int64_t> ws;
  for (std::size_t i : s.coords) ws.push_back(F.space.weight(i));
  std::set<std::size_t> in_stratum(s.coords.begin(), s.coords.end());
  for (std::size_t c = 0; c < F.space.coords.size(); ++c) {
    if (in_stratum.count(c) || used.count(c)) continue;
    std::int64_t rem = d - F.space.weight(c);
    if (rem >= 0 && representable(rem, ws)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<SingularPointRecord> basket_wci(const FamilyRecord& F) {
  if (!F.is_wci2()) throw InputError("basket_wci needs a wci2 family");
  auto strata = singular_strata(F.space);  // decreasing r
  struct Entry {
    std::int64_t r;
    std::int64_t count;
    QuotientType type;
  };
  std::vector<Entry> entries;
  for (const auto& s : strata) {
    auto res = stratum_orbifold_degree(F, s);
    if (res.kind == StratumKind::OverDetermined) continue;
    if (res.kind == StratumKind::Curve)
      throw BasketError("one-dimensional singular locus on stratum r=" +
                        std::to_string(s.r));
    // Subtract points of strictly larger index lying on this stratum.
    Rat remaining = res.orbifold_degree;
    for (const auto& e : entries)
      if (e.r % s.r == 0) remaining -= Rat(e.count) * Rat(1, e.r);
    Rat count = Rat(s.r) * remaining;
    if (!count.is_integer() || count.sign() < 0)
      throw BasketError("non-integral point count " + count.str() +
                        " on stratum r=" + std::to_string(s.r) +
                        " of family " + F.id);
    if (count.is_zero()) continue;
    // Quotient type: remove the stratum coordinates and one tangent
    // coordinate per equation restricting to zero on the stratum.
    std::set<std::size_t> removed(s.coords.begin(), s.coords.end());
    for (std::int64_t d : F.degrees) {
      bool eff = std::find(res.effective_degrees.begin(),
                           res.effective_degrees.end(),
                           d) != res.effective_degrees.end();
      if (eff) continue;
      auto c = tangent_coordinate(F, s, d, removed);
      if (!c)
        throw BasketError("no tangent coordinate for degree " +
                          std::to_string(d) + " on stratum r=" +
                          std::to_string(s.r) + " of family " + F.id);
      removed.insert(*c);
    }
    std::vector<std::int64_t> transverse;
    for (std::size_t i = 0; i < F.space.coords.size(); ++i)
      if (!removed.count(i)) transverse.push_back(F.space.weight(i));
    if (transverse.size() != 3)
      throw BasketError("expected 3 transverse weights on stratum r=" +
                        std::to_string(s.r));
    auto t = normalize_quotient_type(s.r, transverse[0], transverse[1],
                                     transverse[2]);
    if (!t || !is_terminal(*t))
      throw BasketError("non-terminal quotient type on stratum r=" +
                        std::to_string(s.r) + " of family " + F.id);
    entries.push_back({s.r, count.num(), *t});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.type < b.type;
  });
  std::vector<SingularPointRecord> basket;
  for (const auto& e : entries) basket.push_back({e.type, e.count});
  return basket;
}

KawamataNumbers kawamata_numbers(const QuotientType& t, const Rat& a3) {
  if (!is_terminal(t)) throw InputError("kawamata_numbers needs terminal type");
  KawamataNumbers k;
  k.e3 = Rat(t.r * t.r, t.a * (t.r - t.a));
  k.b3 = a3 - Rat(1, t.r * t.a * (t.r - t.a));
  return k;
}

std::int64_t rr_presentation_b(const QuotientType& t) {
  if (!is_terminal(t)) throw InputError("rr_presentation_b needs terminal type");
  std::int64_t r = t.r;
  std::int64_t w[3] = {1, t.a, r - t.a};
  std::optional<std::int64_t> best;
  for (std::int64_t u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    std::int64_t e[3] = {u % r, u * w[1] % r, u * w[2] % r};
    // Match {1, r-1, b} for some b: pick indices for 1 and r-1.
    for (int i = 0; i < 3; ++i) {
      if (e[i] != 1) continue;
      for (int j = 0; j < 3; ++j) {
        if (j == i || e[j] != r - 1) continue;
        std::int64_t b = e[3 - i - j];
        if (!best || b < *best) best = b;
      }
    }
  }
  if (!best) throw BasketError("no 1/r(1,r-1,b) presentation for " +
                               t.display());
  return *best;
}

RRCheck rr_consistency(const Rat& a3, std::int64_t h0,
                       const std::vector<SingularPointRecord>& basket) {
  RRCheck c;
  c.h0 = h0;
  Rat rhs = a3 / Rat(2) + Rat(3);
  for (const auto& p : basket) {
    std::int64_t b = rr_presentation_b(p.type);
    rhs -= Rat(p.count) * Rat(b * (p.type.r - b), 2 * p.type.r);
  }
  c.rhs = rhs;
  c.consistent = (rhs == Rat(h0));
  return c;
}

Rat curve_class_degree(const Rat& a3, std::int64_t m1, std::int64_t m2) {
  return Rat(m1) * Rat(m2) * a3;
}

}  // namespace lct

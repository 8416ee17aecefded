#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lct/errors.hpp"
#include "lct/wps.hpp"

using namespace lct;

namespace {

WeightedSpace space(std::vector<std::int64_t> ws) {
  std::vector<Coordinate> cs;
  const char* names = "abcdefg";
  for (std::size_t i = 0; i < ws.size(); ++i)
    cs.push_back({std::string(1, names[i]), ws[i]});
  return validate_space(std::move(cs));
}

FamilyRecord wci(std::vector<std::int64_t> ws, std::int64_t d1,
                 std::int64_t d2) {
  FamilyRecord f;
  f.id = "t";
  f.kind = "wci2";
  f.space = space(std::move(ws));
  f.degrees = {d1, d2};
  return f;
}

// Generating-function oracle: coefficient of t^d in prod 1/(1 - t^w).
std::int64_t count_oracle(const std::vector<std::int64_t>& ws,
                          std::int64_t d) {
  std::vector<std::int64_t> c(std::size_t(d) + 1, 0);
  c[0] = 1;
  for (std::int64_t w : ws)
    for (std::int64_t t = w; t <= d; ++t) c[t] += c[t - w];
  return c[std::size_t(d)];
}

struct Lcg {
  std::uint64_t s;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("validate_space sorts by weight and flags well-formedness") {
  WeightedSpace S = space({3, 1, 2, 1});
  CHECK(S.weight(0) == 1);
  CHECK(S.weight(3) == 3);
  CHECK(S.coords[0].name == "b");  // stable sort keeps input order on ties
  CHECK(S.coords[1].name == "d");
  CHECK(S.well_formed);
  CHECK_FALSE(space({2, 2, 4}).well_formed);
  CHECK(space({1, 2, 2, 3}).well_formed);
  CHECK_THROWS_AS(space({0, 1}), InputError);
}

TEST_CASE("monomial enumeration: fixed example") {
  // P(1,1,2,2,2,3), degree 3: x^3, x^2y, xy^2, y^3, xz, xs, xt, yz, ys,
  // yt, u  -- 11 monomials.
  WeightedSpace S = space({1, 1, 2, 2, 2, 3});
  auto ms = monomials_of_degree(S, 3);
  CHECK(ms.size() == 11);
  for (const auto& m : ms) CHECK(m.degree(S) == 3);
  CHECK(count_oracle({1, 1, 2, 2, 2, 3}, 3) == 11);
}

TEST_CASE("monomial enumeration matches the generating-function oracle") {
  Lcg rng{987654321};
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = std::size_t(rng.range(2, 6));
    std::vector<std::int64_t> ws;
    for (std::size_t i = 0; i < n; ++i) ws.push_back(rng.range(1, 8));
    std::int64_t d = rng.range(1, 30);
    WeightedSpace S = space(ws);
    // validate_space sorts the weights; the count is permutation-invariant.
    auto ms = monomials_of_degree(S, d);
    CHECK(std::int64_t(ms.size()) == count_oracle(ws, d));
    for (const auto& m : ms) CHECK(m.degree(S) == d);
    // ascending lex order of exponent vectors, no duplicates
    for (std::size_t i = 1; i < ms.size(); ++i)
      CHECK(ms[i - 1].exps < ms[i].exps);
  }
}

TEST_CASE("anticanonical degree of complete intersections") {
  CHECK(anticanonical_degree_wci(wci({1, 1, 2, 2, 2, 3}, 4, 6)) == Rat(1));
  CHECK(anticanonical_degree_wci(wci({2, 3, 4, 5, 6, 7}, 12, 14)) ==
        Rat(1, 30));
  CHECK(anticanonical_degree_wci(wci({1, 6, 8, 9, 10, 15}, 18, 30)) ==
        Rat(1, 120));
  CHECK(anticanonical_degree_wci(wci({1, 8, 9, 10, 12, 15}, 24, 30)) ==
        Rat(1, 180));
}

TEST_CASE("h0 of the anticanonical class counts weight-1 coordinates") {
  CHECK(h0_anticanonical(wci({1, 1, 2, 2, 2, 3}, 4, 6)) == 2);
  CHECK(h0_anticanonical(wci({1, 2, 2, 2, 3, 3}, 6, 6)) == 1);
  CHECK(h0_anticanonical(wci({2, 3, 4, 5, 6, 7}, 12, 14)) == 0);
  FamilyRecord pf;
  pf.id = "p";
  pf.kind = "pfaffian3";
  pf.space = space({1, 5, 6, 7, 8, 9, 10});
  CHECK(h0_anticanonical(pf) == 1);
}

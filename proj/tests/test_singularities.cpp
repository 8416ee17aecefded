#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lct/singularities.hpp"
#include "lct/wps.hpp"

using namespace lct;

namespace {

FamilyRecord wci(std::vector<std::int64_t> ws, std::int64_t d1,
                 std::int64_t d2) {
  FamilyRecord f;
  f.id = "t";
  f.kind = "wci2";
  std::vector<Coordinate> cs;
  const char* names = "xyzstu";
  for (std::size_t i = 0; i < ws.size(); ++i)
    cs.push_back({std::string(1, names[i]), ws[i]});
  f.space = validate_space(std::move(cs));
  f.degrees = {d1, d2};
  f.stored_a3 = anticanonical_degree_wci(f);
  return f;
}

using Basket = std::vector<SingularPointRecord>;

Basket sorted(Basket b) {
  std::sort(b.begin(), b.end(),
            [](const SingularPointRecord& x, const SingularPointRecord& y) {
              return x.type < y.type;
            });
  return b;
}

bool same(const Basket& a, const Basket& bb) {
  Basket x = sorted(a), y = sorted(bb);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i].type == y[i].type && x[i].count == y[i].count)) return false;
  return true;
}

Basket mk(std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> v) {
  Basket b;
  for (auto [r, a, c] : v) b.push_back({QuotientType{r, a}, c});
  return b;
}

}  // namespace

TEST_CASE("singular strata of the ambient space") {
  FamilyRecord f = wci({1, 2, 2, 3, 3, 4}, 6, 8);
  auto strata = singular_strata(f.space);
  // r values in decreasing order, each with the coordinates of weight
  // divisible by r whose gcd is exactly r.
  std::vector<std::int64_t> rs;
  for (const auto& s : strata) rs.push_back(s.r);
  CHECK(std::is_sorted(rs.rbegin(), rs.rend()));
  for (const auto& s : strata) {
    CHECK(s.r >= 2);
    for (std::size_t i : s.coords) CHECK(f.space.weight(i) % s.r == 0);
  }
}

TEST_CASE("baskets frozen from independent stratum computations") {
  // family 8
  CHECK(same(basket_wci(wci({1, 1, 2, 2, 2, 3}, 4, 6)), mk({{2, 1, 6}})));
  // family 20
  CHECK(same(basket_wci(wci({1, 2, 2, 3, 3, 4}, 6, 8)),
             mk({{2, 1, 6}, {3, 1, 2}})));
  // family 47
  CHECK(same(basket_wci(wci({1, 3, 4, 4, 5, 6}, 10, 12)),
             mk({{2, 1, 1}, {3, 1, 2}, {4, 1, 3}})));
  // family 60
  CHECK(same(basket_wci(wci({2, 3, 4, 5, 6, 7}, 12, 14)),
             mk({{2, 1, 7}, {3, 1, 2}, {5, 2, 1}})));
  // family 71: the computation gives two 1/4 points (the printed table
  // says three; see the database annotation)
  CHECK(same(basket_wci(wci({1, 4, 5, 6, 7, 8}, 14, 16)),
             mk({{2, 1, 1}, {4, 1, 2}, {5, 2, 1}, {6, 1, 1}})));
  // family 85
  CHECK(same(basket_wci(wci({1, 8, 9, 10, 12, 15}, 24, 30)),
             mk({{2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 2, 1}, {9, 1, 1}})));
}

TEST_CASE("riemann-roch consistency") {
  // family 85: 1/360 + 3 - 721/360 = 1 = h0
  RRCheck c = rr_consistency(
      Rat(1, 180), 1,
      mk({{2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {5, 2, 1}, {9, 1, 1}}));
  CHECK(c.consistent);
  CHECK(c.rhs == Rat(1));

  // family 60 has no weight-1 coordinate: h0 = 0
  c = rr_consistency(Rat(1, 30), 0, mk({{2, 1, 7}, {3, 1, 2}, {5, 2, 1}}));
  CHECK(c.consistent);
  CHECK(c.rhs == Rat(0));

  // family 71 printed basket (three 1/4 points) fails with rhs = 5/8
  c = rr_consistency(Rat(1, 30), 1,
                     mk({{2, 1, 1}, {4, 1, 3}, {5, 2, 1}, {6, 1, 1}}));
  CHECK_FALSE(c.consistent);
  CHECK(c.rhs == Rat(5, 8));
  // the computed basket (two 1/4 points) passes
  c = rr_consistency(Rat(1, 30), 1,
                     mk({{2, 1, 1}, {4, 1, 2}, {5, 2, 1}, {6, 1, 1}}));
  CHECK(c.consistent);

  // Pfaffian 1/42: 1/84 + 3 - (1/4 + 1/3 + 2/5 + 3/5 + 3/7) = 1
  c = rr_consistency(Rat(1, 42), 1,
                     mk({{2, 1, 1}, {3, 1, 1}, {5, 1, 1}, {5, 2, 1},
                         {7, 1, 1}}));
  CHECK(c.consistent);
  CHECK(c.rhs == Rat(1));
}

TEST_CASE("kawamata blowup numbers") {
  KawamataNumbers k = kawamata_numbers(QuotientType{2, 1}, Rat(1));
  CHECK(k.e3 == Rat(4));
  CHECK(k.b3 == Rat(1, 2));  // family 8: B^3 > 0

  k = kawamata_numbers(QuotientType{2, 1}, Rat(1, 2));
  CHECK(k.b3 == Rat(0));  // family 14: flagged not-plus

  k = kawamata_numbers(QuotientType{5, 2}, Rat(1, 20));
  CHECK(k.e3 == Rat(25, 6));
  CHECK(k.b3 == Rat(1, 60));  // Pfaffian 1/20: the unique positive case

  k = kawamata_numbers(QuotientType{5, 1}, Rat(2, 15));
  CHECK(k.b3 == Rat(1, 12));  // family 37 involution point
}

TEST_CASE("curve class degree") {
  CHECK(curve_class_degree(Rat(1, 10), 1, 2) == Rat(1, 5));
  CHECK(curve_class_degree(Rat(1, 12), 1, 2) == Rat(1, 6));
}

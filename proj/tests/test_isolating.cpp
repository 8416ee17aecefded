#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lct/errors.hpp"
#include "lct/isolating.hpp"
#include "lct/wps.hpp"

using namespace lct;

namespace {

FamilyRecord fam(const std::string& kind, std::vector<std::int64_t> ws,
                 const Rat& a3) {
  FamilyRecord f;
  f.id = "t";
  f.kind = kind;
  std::vector<Coordinate> cs;
  const char* names = "xyzstuv";
  for (std::size_t i = 0; i < ws.size(); ++i)
    cs.push_back({std::string(1, names[i]), ws[i]});
  f.space = validate_space(std::move(cs));
  f.stored_a3 = a3;
  return f;
}

std::int64_t lcm_cell(const FamilyRecord& f, const std::string& pi,
                      std::size_t j) {
  return lcm_isolating_class(f.space, projection_kept(f.space, pi), j);
}

}  // namespace

TEST_CASE("lcm isolating degrees reproduce the table") {
  // family 45: P(1,2,4,5,5,6), remove u
  FamilyRecord f45 = fam("wci2", {1, 2, 4, 5, 5, 6}, Rat(1, 10));
  CHECK(lcm_cell(f45, "u", 0) == 5);
  CHECK(lcm_cell(f45, "u", 1) == 10);
  // family 64: P(1,2,5,6,7,8), remove s,u -> 7 and 14
  FamilyRecord f64 = fam("wci2", {1, 2, 5, 6, 7, 8}, Rat(2, 35));
  CHECK(lcm_cell(f64, "su", 0) == 7);
  CHECK(lcm_cell(f64, "su", 1) == 14);
  // family 85: P(1,8,9,10,12,15), remove t,u -> 10 and 72
  FamilyRecord f85 = fam("wci2", {1, 8, 9, 10, 12, 15}, Rat(1, 180));
  CHECK(lcm_cell(f85, "tu", 0) == 10);
  CHECK(lcm_cell(f85, "tu", 1) == 72);
  // family 20: P(1,2,2,3,3,4), remove u: the projection bound is 6,
  // strictly weaker than the printed 3
  FamilyRecord f20 = fam("wci2", {1, 2, 2, 3, 3, 4}, Rat(1, 3));
  CHECK(lcm_cell(f20, "u", 1) == 6);
  // family 37: P(1,2,3,4,5,6), remove s,u: bound 10 vs printed 6
  FamilyRecord f37 = fam("wci2", {1, 2, 3, 4, 5, 6}, Rat(2, 15));
  CHECK(lcm_cell(f37, "su", 1) == 10);
}

TEST_CASE("projection_kept and input validation") {
  FamilyRecord f = fam("wci2", {1, 2, 4, 5, 5, 6}, Rat(1, 10));
  auto kept = projection_kept(f.space, "su");
  CHECK(kept == std::vector<std::size_t>{0, 1, 2, 4});
  CHECK(projection_kept(f.space, "").size() == 6);
  CHECK_THROWS_AS(projection_kept(f.space, "w"), InputError);
  // center must be kept
  CHECK_THROWS_AS(
      lcm_isolating_class(f.space, projection_kept(f.space, "x"), 0),
      InputError);
}

TEST_CASE("isolating_row verifies lcm-sourced cells") {
  FamilyRecord f = fam("wci2", {1, 2, 4, 5, 5, 6}, Rat(1, 10));
  StoredIsolating st;
  st.printed_off_hx = 5;
  st.printed_on_hx = 10;
  st.pi = "u";
  st.source_off_hx = "lcm";
  st.source_on_hx = "lcm";
  IsolatingRow row = isolating_row(f, st);
  CHECK(row.off_hx == 5);
  CHECK(row.on_hx == 10);

  st.printed_on_hx = 9;  // wrong on purpose
  CHECK_THROWS_AS(isolating_row(f, st), TableMismatchError);

  st.printed_on_hx = 9;
  st.source_on_hx = "fact";  // citation-backed cells are taken as stored
  row = isolating_row(f, st);
  CHECK(row.on_hx == 9);

  st.source_on_hx = "absent";
  row = isolating_row(f, st);
  CHECK_FALSE(row.on_hx.has_value());
}

TEST_CASE("pfaffian isolating degrees") {
  auto p = pfaffian_isolating(fam("pfaffian3", {1, 5, 6, 7, 8, 9, 10},
                                  Rat(1, 42)));
  CHECK(p.on_hx == 42);
  CHECK(p.off_hx == 7);
  p = pfaffian_isolating(fam("pfaffian3", {1, 5, 5, 6, 7, 8, 9}, Rat(1, 30)));
  CHECK(p.on_hx == 30);
  CHECK(p.off_hx == 6);
  p = pfaffian_isolating(fam("pfaffian3", {1, 4, 5, 5, 6, 7, 8}, Rat(1, 20)));
  CHECK(p.on_hx == 20);
  CHECK(p.off_hx == 5);
}

TEST_CASE("pfaffian isolating input validation") {
  CHECK_THROWS_AS(
      pfaffian_isolating(fam("wci2", {1, 2, 4, 5, 5, 6}, Rat(1, 10))),
      InputError);
  // degree must have numerator 1
  CHECK_THROWS_AS(
      pfaffian_isolating(fam("pfaffian3", {1, 5, 6, 7, 8, 9, 10}, Rat(2, 35))),
      DataError);
}

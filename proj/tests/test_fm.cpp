#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "lct/fm.hpp"

using namespace lct;

namespace {

LinearConstraint con(std::vector<Rat> coeffs, Rat b, CmpOp op) {
  LinearConstraint c;
  c.coeffs = std::move(coeffs);
  c.b = b;
  c.op = op;
  return c;
}

struct Lcg {
  std::uint64_t s;
  std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

}  // namespace

TEST_CASE("simple feasible and infeasible systems") {
  // x > 0 and x < 0
  CHECK(fm_infeasible(1, {con({Rat(1)}, Rat(0), CmpOp::GT),
                          con({Rat(-1)}, Rat(0), CmpOp::GT)}));
  // x >= 1 and x <= 1 forces x = 1
  FmResult res = fm_solve(1, {con({Rat(1)}, Rat(-1), CmpOp::GE),
                              con({Rat(-1)}, Rat(1), CmpOp::GE)});
  REQUIRE(res.feasible);
  CHECK(res.witness == std::vector<Rat>{Rat(1)});
  // strict boundary: x >= 1 and x < 1
  CHECK(fm_infeasible(1, {con({Rat(1)}, Rat(-1), CmpOp::GE),
                          con({Rat(1)}, Rat(-1), CmpOp::LT)}));
  // equality splits into both directions
  res = fm_solve(2, {con({Rat(1), Rat(1)}, Rat(-2), CmpOp::EQ),
                     con({Rat(1), Rat(-1)}, Rat(0), CmpOp::EQ)});
  REQUIRE(res.feasible);
  CHECK(res.witness == std::vector<Rat>{Rat(1), Rat(1)});
  // constraints with no variables at all
  CHECK(fm_infeasible(1, {con({Rat(0)}, Rat(-1, 2), CmpOp::GT)}));
}

TEST_CASE("threshold systems from the dataset resolve as recorded") {
  // two-variable system: gamma_i >= 0, gamma_1 + gamma_2 <= 1,
  // 4/5 gamma_1 - 1/5 gamma_2 > 4/5  -- infeasible
  CHECK(fm_infeasible(
      2, {con({Rat(1), Rat(0)}, Rat(0), CmpOp::GE),
          con({Rat(0), Rat(1)}, Rat(0), CmpOp::GE),
          con({Rat(-1, 10), Rat(-1, 10)}, Rat(1, 10), CmpOp::GE),
          con({Rat(4, 5), Rat(-1, 5)}, Rat(-4, 5), CmpOp::GT)}));
  // one-variable version: gamma <= 1 and gamma > 1
  CHECK(fm_infeasible(1, {con({Rat(1)}, Rat(0), CmpOp::GE),
                          con({Rat(-1, 12)}, Rat(1, 12), CmpOp::GE),
                          con({Rat(5, 6)}, Rat(-5, 6), CmpOp::GT)}));
  // the satisfiable case: gamma_1 <= 1 and gamma_1 < 1 admit gamma_1 = 0
  FmResult res =
      fm_solve(2, {con({Rat(1), Rat(0)}, Rat(0), CmpOp::GE),
                   con({Rat(0), Rat(1)}, Rat(0), CmpOp::GE),
                   con({Rat(-1), Rat(0)}, Rat(1), CmpOp::GE),
                   con({Rat(-1), Rat(0)}, Rat(1), CmpOp::GT)});
  REQUIRE(res.feasible);
  for (const auto& c :
       std::vector<LinearConstraint>{con({Rat(-1), Rat(0)}, Rat(1), CmpOp::GT)})
    CHECK(c.satisfied(res.witness));
}

TEST_CASE("witnesses satisfy all constraints") {
  Lcg rng{424242};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LinearConstraint> cs;
    int n = int(rng.range(1, 4));
    for (int i = 0; i < n; ++i) {
      Rat a(rng.range(-2, 2)), b(rng.range(-2, 2)), c(rng.range(-2, 2));
      CmpOp op = std::vector<CmpOp>{CmpOp::GE, CmpOp::GT, CmpOp::LE,
                                    CmpOp::LT, CmpOp::EQ}[rng.range(0, 4)];
      cs.push_back(con({a, b}, c, op));
    }
    FmResult res = fm_solve(2, cs);
    if (res.feasible) {
      REQUIRE(res.witness.size() == 2);
      for (const auto& c : cs) CHECK(c.satisfied(res.witness));
    }
  }
}

TEST_CASE("infeasibility agrees with a grid-sampling oracle") {
  // If any grid point satisfies every constraint the system is feasible,
  // so fm_solve must not report infeasible.
  Lcg rng{8675309};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LinearConstraint> cs;
    int n = int(rng.range(1, 3));
    for (int i = 0; i < n; ++i) {
      Rat a(rng.range(-2, 2)), b(rng.range(-2, 2)), c(rng.range(-1, 1));
      CmpOp op = std::vector<CmpOp>{CmpOp::GE, CmpOp::GT, CmpOp::LE,
                                    CmpOp::LT}[rng.range(0, 3)];
      cs.push_back(con({a, b}, c, op));
    }
    bool grid_feasible = false;
    for (int i = -6; i <= 6 && !grid_feasible; ++i)
      for (int j = -6; j <= 6 && !grid_feasible; ++j) {
        std::vector<Rat> x{Rat(i, 2), Rat(j, 2)};
        bool ok = true;
        for (const auto& c : cs) ok = ok && c.satisfied(x);
        grid_feasible = ok;
      }
    FmResult res = fm_solve(2, cs);
    if (grid_feasible) CHECK(res.feasible);
    if (res.feasible)
      for (const auto& c : cs) CHECK(c.satisfied(res.witness));
  }
}

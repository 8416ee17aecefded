#ifndef LCT_FM_HPP
#define LCT_FM_HPP

#include <string>
#include <vector>

#include "lct/rational.hpp"

namespace lct {

enum class CmpOp { GE, GT, LE, LT, EQ };

CmpOp parse_cmp(const std::string& s);
std::string cmp_str(CmpOp op);

/// Linear constraint  sum(coeffs[i] * x[i]) + b  OP  0.
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat b;
  CmpOp op = CmpOp::GE;

  bool satisfied(const std::vector<Rat>& x) const;
};

struct FmResult {
  bool feasible = false;
  std::vector<Rat> witness;  // a solution when feasible
};

/// Exact Fourier-Motzkin elimination with strict/non-strict tracking.
/// Supports up to 3 unknowns and 16 constraints.
FmResult fm_solve(std::size_t nvars,
                  const std::vector<LinearConstraint>& constraints);

inline bool fm_infeasible(std::size_t nvars,
                          const std::vector<LinearConstraint>& cs) {
  return !fm_solve(nvars, cs).feasible;
}

}  // namespace lct

#endif

#include "lct/fm.hpp"

#include <algorithm>

#include "lct/errors.hpp"

namespace lct {

CmpOp parse_cmp(const std::string& s) {
  if (s == ">=") return CmpOp::GE;
  if (s == ">") return CmpOp::GT;
  if (s == "<=") return CmpOp::LE;
  if (s == "<") return CmpOp::LT;
  if (s == "=" || s == "==") return CmpOp::EQ;
  throw InputError("unknown comparison operator " + s);
}

std::string cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::GE: return ">=";
    case CmpOp::GT: return ">";
    case CmpOp::LE: return "<=";
    case CmpOp::LT: return "<";
    case CmpOp::EQ: return "=";
  }
  return "?";
}

bool LinearConstraint::satisfied(const std::vector<Rat>& x) const {
  Rat v = b;
  for (std::size_t i = 0; i < coeffs.size() && i < x.size(); ++i)
    v += coeffs[i] * x[i];
  switch (op) {
    case CmpOp::GE: return v >= Rat(0);
    case CmpOp::GT: return v > Rat(0);
    case CmpOp::LE: return v <= Rat(0);
    case CmpOp::LT: return v < Rat(0);
    case CmpOp::EQ: return v == Rat(0);
  }
  return false;
}

namespace {

// Normalized form: coeffs.x + b >= 0, strict when `strict`.
struct NC {
  std::vector<Rat> coeffs;
  Rat b;
  bool strict = false;
};

std::vector<NC> normalize(std::size_t nvars,
                          const std::vector<LinearConstraint>& cs) {
  std::vector<NC> out;
  for (const auto& c : cs) {
    std::vector<Rat> a(nvars, Rat(0));
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
      if (i >= nvars) throw InputError("constraint has too many coefficients");
      a[i] = c.coeffs[i];
    }
    auto push = [&](bool flip, bool strict) {
      NC n;
      n.coeffs = a;
      n.b = c.b;
      if (flip) {
        for (auto& v : n.coeffs) v = -v;
        n.b = -n.b;
      }
      n.strict = strict;
      out.push_back(std::move(n));
    };
    switch (c.op) {
      case CmpOp::GE: push(false, false); break;
      case CmpOp::GT: push(false, true); break;
      case CmpOp::LE: push(true, false); break;
      case CmpOp::LT: push(true, true); break;
      case CmpOp::EQ:
        push(false, false);
        push(true, false);
        break;
    }
  }
  return out;
}

}  // namespace

FmResult fm_solve(std::size_t nvars,
                  const std::vector<LinearConstraint>& constraints) {
  if (nvars > 3) throw InputError("fm_solve supports at most 3 unknowns");
  if (constraints.size() > 16)
    throw InputError("fm_solve supports at most 16 constraints");

  // stages[k] constrains variables x0..x_{k-1}.
  std::vector<std::vector<NC>> stages(nvars + 1);
  stages[nvars] = normalize(nvars, constraints);
  for (std::size_t k = nvars; k > 0; --k) {
    const auto& cur = stages[k];
    std::vector<NC> lower, upper, rest;
    for (const auto& c : cur) {
      Rat a = c.coeffs[k - 1];
      if (a.is_zero()) {
        rest.push_back(c);
        continue;
      }
      // Scale so the coefficient of x_{k-1} is +-1.
      NC s = c;
      Rat inv = Rat(1) / (a.sign() > 0 ? a : -a);
      for (auto& v : s.coeffs) v *= inv;
      s.b *= inv;
      (a.sign() > 0 ? lower : upper).push_back(std::move(s));
    }
    // lower: x + L >= 0, i.e. x >= -L;  upper: -x + U >= 0, i.e. x <= U.
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        NC n;
        n.coeffs.assign(nvars, Rat(0));
        for (std::size_t i = 0; i + 1 < k; ++i)
          n.coeffs[i] = lo.coeffs[i] + up.coeffs[i];
        n.b = lo.b + up.b;
        n.strict = lo.strict || up.strict;
        rest.push_back(std::move(n));
      }
    }
    stages[k - 1] = std::move(rest);
  }
  for (const auto& c : stages[0]) {
    if (c.strict ? !(c.b > Rat(0)) : !(c.b >= Rat(0))) return {};
  }

  FmResult res;
  res.feasible = true;
  res.witness.assign(nvars, Rat(0));
  for (std::size_t k = 1; k <= nvars; ++k) {
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo, up;
    for (const auto& c : stages[k]) {
      Rat a = c.coeffs[k - 1];
      if (a.is_zero()) continue;
      Rat rest = c.b;
      for (std::size_t i = 0; i + 1 < k; ++i)
        rest += c.coeffs[i] * res.witness[i];
      Rat bound = -(rest / a);
      if (a.sign() > 0) {  // x_{k-1} >= bound
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = c.strict;
          has_lo = true;
        } else if (bound == lo && c.strict) {
          lo_strict = true;
        }
      } else {  // x_{k-1} <= bound
        if (!has_up || bound < up) {
          up = bound;
          up_strict = c.strict;
          has_up = true;
        } else if (bound == up && c.strict) {
          up_strict = true;
        }
      }
    }
    Rat v(0);
    if (has_lo && has_up) {
      if (lo == up)
        v = lo;  // both must be non-strict, else stage 0 would have failed
      else
        v = (lo + up) / Rat(2);
    } else if (has_lo) {
      v = lo_strict ? lo + Rat(1) : lo;
    } else if (has_up) {
      v = up_strict ? up - Rat(1) : up;
    }
    res.witness[k - 1] = v;
  }
  return res;
}

}  // namespace lct

#include "lct/engine.hpp"

#include <algorithm>

#include "lct/errors.hpp"

namespace lct {

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

BlowupCtx make_blowup_ctx(const QuotientType& t, const Rat& a3) {
  BlowupCtx ctx;
  ctx.type = t;
  ctx.a3 = a3;
  ctx.e3 = kawamata_numbers(t, a3).e3;
  return ctx;
}

Rat triple_product(const BlowupCtx& ctx, const BlowupDivisorClass& c1,
                   const BlowupDivisorClass& c2,
                   const BlowupDivisorClass& c3) {
  Rat r3 = Rat(ctx.type.r) * Rat(ctx.type.r) * Rat(ctx.type.r);
  return c1.alpha * c2.alpha * c3.alpha * ctx.a3 -
         (c1.e * c2.e * c3.e / r3) * ctx.e3;
}

std::int64_t mult_bound_wps(std::int64_t m, std::int64_t e) {
  if (e < 2) throw InputError("mult_bound_wps needs e >= 2");
  if (m < 1) throw InputError("mult_bound_wps needs m >= 1");
  return 1 + (m - 1) / e;
}

namespace {

bool has_kind(const FactList& facts, const std::string& kind,
              std::vector<std::string>* used) {
  for (const auto* f : facts) {
    if (f->kind == kind) {
      if (used) used->push_back(f->id);
      return true;
    }
  }
  return false;
}

const GeometricFact* find_kind(const FactList& facts, const std::string& kind) {
  for (const auto* f : facts)
    if (f->kind == kind) return f;
  return nullptr;
}

void finish(CheckResult& r, bool numeric_ok, bool facts_ok,
            const std::string& missing) {
  if (!numeric_ok) {
    r.status = CheckStatus::Fail;
  } else if (!facts_ok) {
    r.status = CheckStatus::Indeterminate;
    r.note = "missing geometric fact: " + missing;
  } else {
    r.status = CheckStatus::Pass;
  }
}

}  // namespace

CheckResult check_exclL(const Rat& a3, const Rat& c1, const Rat& c2,
                        const FactList& facts) {
  CheckResult r;
  r.name = "exclL";
  Rat v = c1 * c2 * a3;
  r.set("c1", c1);
  r.set("c2", c2);
  r.set("c1*c2*A^3", v);
  r.tight = (v == Rat(1));
  bool ok_mult = has_kind(facts, "mult_bound", &r.facts_used);
  bool ok_irr = has_kind(facts, "irreducible_reduced", &r.facts_used);
  finish(r, v <= Rat(1), ok_mult && ok_irr,
         ok_mult ? "irreducible_reduced" : "mult_bound");
  return r;
}

CheckResult check_exclG1(const Rat& a3, const Rat& c1, const Rat& c2,
                         std::int64_t l, const FactList& facts) {
  CheckResult r;
  r.name = "exclG1";
  Rat c = std::max(c1, c2);
  Rat v = c * Rat(l) * a3;
  r.set("c", c);
  r.set("l", Rat(l));
  r.set("c*l*A^3", v);
  r.tight = (v == Rat(1));
  // Two independent divisors through the point.
  std::size_t n = 0;
  for (const auto* f : facts) {
    if (f->kind == "quasi_smooth_member" || f->kind == "irreducible_reduced" ||
        f->kind == "mult_bound") {
      r.facts_used.push_back(f->id);
      ++n;
    }
  }
  finish(r, v <= Rat(1), n >= 2, "two prime-divisor facts");
  return r;
}

CheckResult check_exclG2(const Rat& a3, const Rat& c, std::int64_t l,
                         const FactList& facts) {
  CheckResult r;
  r.name = "exclG2";
  Rat v = c * Rat(l) * a3;
  r.set("c", c);
  r.set("l", Rat(l));
  r.set("c*l*A^3", v);
  r.tight = (v == Rat(1));
  const auto* mb = find_kind(facts, "mult_bound");
  bool facts_ok = mb != nullptr && (!mb->bound || *mb->bound <= c);
  if (mb) r.facts_used.push_back(mb->id);
  finish(r, v <= Rat(1), facts_ok, "mult_bound <= c");
  return r;
}

CheckResult check_singpt_cone(const BlowupCtx& ctx, const FactList& facts) {
  CheckResult r;
  r.name = "singpt_cone";
  KawamataNumbers k = kawamata_numbers(ctx.type, ctx.a3);
  r.set("B^3", k.b3);
  r.set("E^3", k.e3);
  bool cone = has_kind(facts, "cone_boundary", &r.facts_used);
  bool lift = has_kind(facts, "proper_transform_class", &r.facts_used);
  // The argument needs B^3 <= 0 so that B^2 can fail to be interior.
  finish(r, k.b3 <= Rat(0), cone && lift,
         cone ? "proper_transform_class" : "cone_boundary");
  return r;
}

CheckResult check_singpt_nef(const BlowupCtx& ctx,
                             const BlowupDivisorClass& N,
                             const std::vector<BlowupDivisorClass>& surfaces,
                             const FactList& facts) {
  CheckResult r;
  r.name = "singpt_nef";
  std::int64_t rr = ctx.type.r;
  Rat r3 = Rat(rr) * Rat(rr) * Rat(rr);
  bool numeric_ok = true;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    Rat lhs = r3 * N.alpha * surfaces[i].alpha * ctx.a3;
    Rat rhs = N.e * surfaces[i].e * ctx.e3;
    r.set("lhs_" + std::to_string(i + 1), lhs);
    r.set("rhs_" + std::to_string(i + 1), rhs);
    if (lhs == rhs) r.tight = true;
    if (!(lhs <= rhs)) numeric_ok = false;
  }
  bool nef = has_kind(facts, "nef", &r.facts_used) ||
             has_kind(facts, "big_nef", &r.facts_used);
  finish(r, numeric_ok && !surfaces.empty(), nef, "nef");
  return r;
}

CheckResult check_singpt_cover(const BlowupCtx& ctx, const Rat& c1,
                               const Rat& c2, const FactList& facts) {
  CheckResult r;
  r.name = "singpt_cover";
  Rat v = Rat(ctx.type.r) * c1 * c2 * ctx.a3;
  r.set("r", Rat(ctx.type.r));
  r.set("c1", c1);
  r.set("c2", c2);
  r.set("r*c1*c2*A^3", v);
  r.tight = (v == Rat(1));
  const auto* ord = find_kind(facts, "ord_bound");
  const auto* cov = find_kind(facts, "cover_mult_bound");
  bool facts_ok = ord && cov;
  if (ord) {
    r.facts_used.push_back(ord->id);
    if (ord->bound && !(*ord->bound <= c1 / Rat(ctx.type.r))) facts_ok = false;
  }
  if (cov) {
    r.facts_used.push_back(cov->id);
    if (cov->bound && !(*cov->bound <= c2)) facts_ok = false;
  }
  finish(r, v <= Rat(1), facts_ok, "ord_bound and cover_mult_bound");
  return r;
}

std::vector<CheckResult> qi_verify(const FamilyRecord& F, const QIRecord& q,
                                   const FactList& facts) {
  std::vector<CheckResult> out;
  const WeightedSpace& S = F.space;
  auto w = [&](const std::string& name) {
    return S.weight(S.index_of(name));
  };
  std::int64_t a_i0 = w(q.xi0), a_i1 = w(q.xi1);
  std::int64_t a_xi = w(q.xi), a_zeta = w(q.zeta);
  std::int64_t abar = a_zeta - a_xi;
  if (F.degrees.size() != 2) throw InputError("qi_verify needs a wci2 family");
  std::int64_t d1 = std::min(F.degrees[0], F.degrees[1]);
  std::int64_t d2 = std::max(F.degrees[0], F.degrees[1]);

  {
    CheckResult r;
    r.name = "qi_degrees";
    r.set("a_xi+a_i1", Rat(a_xi + a_i1));
    r.set("2a_xi+a_i0", Rat(2 * a_xi + a_i0));
    r.set("2a_zeta", Rat(2 * a_zeta));
    bool ok = (d1 == a_xi + a_i1) && (d2 == 2 * a_xi + a_i0) &&
              (d2 == 2 * a_zeta);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.name = "qi_ng_weight";
    r.set("n_G", Rat(q.n_g));
    r.set("2*a_i1", Rat(2 * a_i1));
    r.status = (q.n_g == 2 * a_i1) ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(r));
  }
  BlowupCtx ctx = make_blowup_ctx(q.point, F.stored_a3);
  KawamataNumbers k = kawamata_numbers(q.point, F.stored_a3);
  {
    CheckResult r;
    r.name = "qi_ng_intersection";
    // B^2.E = E^3 / r^2 for B = phi^*A - (1/r)E.
    Rat b2e = ctx.e3 / Rat(q.point.r * q.point.r);
    Rat ng = Rat(2) * b2e / k.b3;
    r.set("B^2.E", b2e);
    r.set("B^3", k.b3);
    r.set("2(B^2.E)/B^3", ng);
    r.status = (ng == Rat(q.n_g)) ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.name = "qi_exceptional_space";
    // Weights of E are the two untouched coordinates plus a_zeta - a_xi.
    std::vector<std::int64_t> expect;
    for (const auto& c : S.coords)
      if (c.name != q.xi0 && c.name != q.xi1 && c.name != q.xi &&
          c.name != q.zeta)
        expect.push_back(c.weight);
    expect.push_back(abar);
    std::sort(expect.begin(), expect.end());
    std::vector<std::int64_t> got = q.exc_weights;
    std::sort(got.begin(), got.end());
    bool ok = (expect == got) && expect.size() == 3;
    Rat prod(1);
    for (std::int64_t v : expect) prod *= Rat(v);
    Rat e3_alt = Rat(a_xi * a_xi) / prod;
    r.set("E^3", ctx.e3);
    r.set("a_xi^2/(a_i2*a_i3*abar)", e3_alt);
    ok = ok && (e3_alt == ctx.e3);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.name = "qi_mult_budget";
    bool numeric_ok, fact_ok;
    if (q.point.r == 2) {
      // E is an ordinary plane; Theta is a line and Xi is nonsingular.
      r.set("budget", Rat(2));
      r.set("n_G-1", Rat(q.n_g - 1));
      numeric_ok = 2 <= q.n_g - 1;
      fact_ok = has_kind(facts, "irreducible_reduced", &r.facts_used);
    } else {
      std::int64_t N = mult_bound_wps(q.d_xi, q.point.r - 1);
      r.set("N", Rat(N));
      r.set("n_G", Rat(q.n_g));
      if (N <= q.n_g - 2) {
        numeric_ok = true;
      } else {
        // Fallback: away from Theta use N alone; on Theta use the
        // intersection number Theta.Xi to bound mult(Xi).
        Rat prod(1);
        for (std::int64_t v : q.exc_weights) prod *= Rat(v);
        Rat tx = Rat(q.d_theta) * Rat(q.d_xi) / prod;
        std::int64_t m = tx.floor();
        r.set("Theta.Xi", tx);
        numeric_ok = (N <= q.n_g - 1) && (1 + m <= q.n_g - 1);
      }
      fact_ok = has_kind(facts, "quasi_smooth_member", &r.facts_used);
    }
    finish(r, numeric_ok, fact_ok, "curve geometry on E");
    out.push_back(std::move(r));
  }
  return out;
}

std::string verdict_of(
    const std::vector<std::pair<std::string, CheckResult>>& entries,
    bool strict) {
  bool indeterminate = false;
  for (const auto& [locus, r] : entries) {
    CheckStatus s = r.status;
    if (strict && r.annotated && s == CheckStatus::Pass)
      s = CheckStatus::Fail;
    if (s == CheckStatus::Fail) return "FAILED";
    if (s == CheckStatus::Indeterminate) indeterminate = true;
  }
  return indeterminate ? "NOT_ESTABLISHED" : "LCT_GE_1";
}

}  // namespace lct

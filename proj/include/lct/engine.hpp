#ifndef LCT_ENGINE_HPP
#define LCT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lct/fm.hpp"
#include "lct/rational.hpp"
#include "lct/singularities.hpp"
#include "lct/wps.hpp"

namespace lct {

enum class CheckStatus { Pass, Fail, Indeterminate };

std::string status_str(CheckStatus s);

/// Outcome of a single lemma-shaped check.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Indeterminate;
  std::vector<std::pair<std::string, std::string>> values;  // symbol -> value
  std::vector<std::string> facts_used;
  bool tight = false;      // the deciding inequality holds with equality
  bool annotated = false;  // covered by a recorded discrepancy annotation
  std::string note;

  void set(const std::string& k, const Rat& v) {
    values.emplace_back(k, v.str());
  }
};

/// Cited geometric input that the arithmetic cannot derive.
struct Citation {
  std::string where;
  std::string quote;
};

struct GeometricFact {
  std::string id;
  std::string kind;  // mult_bound, irreducible_reduced, nef, big_nef,
                     // cone_boundary, proper_transform_class,
                     // quasi_smooth_member, finiteness, cover_mult_bound,
                     // ord_bound
  std::string subject;
  std::optional<Rat> bound;
  Citation citation;
};

using FactList = std::vector<const GeometricFact*>;

/// Divisor class alpha * phi^*A - (e/r) E on the blowup of a terminal
/// quotient point.
struct BlowupDivisorClass {
  Rat alpha;
  Rat e;
};

/// Numerical context of a Kawamata blowup.
struct BlowupCtx {
  QuotientType type;
  Rat a3;  // A^3 of the 3-fold
  Rat e3;  // E^3 = r^2/(a(r-a))
};

BlowupCtx make_blowup_ctx(const QuotientType& t, const Rat& a3);

/// a1*a2*a3*A^3 - (e1*e2*e3/r^3)*E^3.
Rat triple_product(const BlowupCtx& ctx, const BlowupDivisorClass& c1,
                   const BlowupDivisorClass& c2, const BlowupDivisorClass& c3);

/// Multiplicity bound 1 + floor((m-1)/e) for a quasi-smooth-at-vertex
/// divisor of degree m on P(1,1,e), e >= 2.
std::int64_t mult_bound_wps(std::int64_t m, std::int64_t e);

// Lemma-shaped predicates. Each verifies its numerical condition exactly
// and demands the geometric side conditions as facts; a missing fact
// downgrades Pass to Indeterminate.

/// Exclusion via a curve L in a surface S: needs c1*c2*A^3 <= 1 plus a
/// multiplicity bound on S and irreducibility of L.
CheckResult check_exclL(const Rat& a3, const Rat& c1, const Rat& c2,
                        const FactList& facts);

/// Exclusion via two divisors of degrees c1, c2 and an isolating class
/// lA: needs max(c1,c2)*l*A^3 <= 1.
CheckResult check_exclG1(const Rat& a3, const Rat& c1, const Rat& c2,
                         std::int64_t l, const FactList& facts);

/// Exclusion via one divisor of bounded multiplicity c and an isolating
/// class lA: needs c*l*A^3 <= 1.
CheckResult check_exclG2(const Rat& a3, const Rat& c, std::int64_t l,
                         const FactList& facts);

/// Singular point with B^3 <= 0: excluded when B^2 lies outside the
/// interior of the cone of effective curves; both ingredients are facts.
CheckResult check_singpt_cone(const BlowupCtx& ctx, const FactList& facts);

/// Singular point excluded through a nef class N = a phi^*A - (e/r) E:
/// requires r^3 * a * a_i * A^3 <= e * e_i * E^3 for each supplied
/// surface class, plus the nef fact.
CheckResult check_singpt_nef(const BlowupCtx& ctx,
                             const BlowupDivisorClass& N,
                             const std::vector<BlowupDivisorClass>& surfaces,
                             const FactList& facts);

/// Singular point with B^3 > 0 excluded via a double-cover trick:
/// needs r*c1*c2*A^3 <= 1, ord_F(S1) <= c1/r and a multiplicity bound
/// c2 on the covering curve.
CheckResult check_singpt_cover(const BlowupCtx& ctx, const Rat& c1,
                               const Rat& c2, const FactList& facts);

/// Data of a quadratic-involution self-link at a singular point.
struct QIRecord {
  QuotientType point;
  std::string xi0, xi1;  // tangent coordinates of the two equations
  std::string xi, zeta;  // the two highest coordinates
  std::int64_t n_g = 0;
  std::vector<std::int64_t> exc_weights;  // weights of E
  std::string c_poly;
  std::int64_t d_theta = 0;  // degree of the polynomial c
  std::int64_t d_xi = 0;     // degree of the curve Xi on E
};

/// Verifies the numerical skeleton of a quadratic-involution record:
/// degree relations, n_G identities, exceptional-space match, and the
/// multiplicity budget on E.
std::vector<CheckResult> qi_verify(const FamilyRecord& F, const QIRecord& q,
                                   const FactList& facts);

/// A single step of a certification plan.
struct PlanEntry {
  std::string locus;
  std::string templ;
  std::map<std::string, std::string> params;
  std::vector<std::string> fact_ids;
  std::string annotation;  // non-empty when a known discrepancy applies
};

struct Certificate {
  std::string family_id;
  std::vector<std::pair<std::string, CheckResult>> entries;  // locus, result
  std::string verdict;  // LCT_GE_1, NOT_ESTABLISHED, or FAILED
};

std::string verdict_of(const std::vector<std::pair<std::string, CheckResult>>&
                           entries,
                       bool strict);

}  // namespace lct

#endif

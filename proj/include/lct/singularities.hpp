#ifndef LCT_SINGULARITIES_HPP
#define LCT_SINGULARITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lct/rational.hpp"
#include "lct/wps.hpp"

namespace lct {

/// Cyclic quotient singularity 1/r(b1,b2,b3), stored normalized as
/// 1/r(1,a,r-a) with 1 <= a <= r-a.
struct QuotientType {
  std::int64_t r = 1;
  std::int64_t a = 1;  // normalized form 1/r(1,a,r-a)

  std::string display() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," +
           std::to_string(r - a) + ")";
  }
  friend bool operator==(const QuotientType& x, const QuotientType& y) {
    return x.r == y.r && x.a == y.a;
  }
  friend bool operator<(const QuotientType& x, const QuotientType& y) {
    return x.r != y.r ? x.r < y.r : x.a < y.a;
  }
};

/// A singular point class in a basket: a quotient type with multiplicity.
struct SingularPointRecord {
  QuotientType type;
  std::int64_t count = 1;
};

/// Coordinate stratum of a weighted projective space: the coordinates
/// whose weight is divisible by r, provided their gcd is exactly r.
struct Stratum {
  std::int64_t r = 1;
  std::vector<std::size_t> coords;  // indices into space.coords
};

/// Result of restricting a family to a stratum.
enum class StratumKind { Empty, Points, Curve, OverDetermined };

struct StratumRestriction {
  StratumKind kind = StratumKind::Empty;
  Rat orbifold_degree;                       // meaningful for Points
  std::vector<std::int64_t> effective_degrees;  // degrees d_j that restrict
  std::string note;
};

/// Normalizes 1/r(b1,b2,b3) to the form 1/r(1,a,r-a) by multiplying by a
/// unit mod r and permuting; returns nullopt when no normalization exists
/// (entries sharing a factor with r, or not of isolated-terminal shape).
std::optional<QuotientType> normalize_quotient_type(
    std::int64_t r, std::int64_t b1, std::int64_t b2, std::int64_t b3);

/// True for 1/r(1,a,r-a) with gcd(a,r)=1: the isolated terminal case.
bool is_terminal(const QuotientType& t);

/// All strata of the ambient space, ordered by decreasing r.
std::vector<Stratum> singular_strata(const WeightedSpace& S);

/// Restriction of the two defining equations to a stratum.
StratumRestriction stratum_orbifold_degree(const FamilyRecord& F,
                                           const Stratum& s);

/// Full basket computation for a codimension-2 complete intersection.
/// Throws BasketError on non-integral point counts or non-terminal types.
std::vector<SingularPointRecord> basket_wci(const FamilyRecord& F);

/// Kawamata blowup numerics of a terminal quotient point.
struct KawamataNumbers {
  Rat e3;  // E^3 = r^2 / (a(r-a))
  Rat b3;  // B^3 = A^3 - 1/(r a (r-a))
};
KawamataNumbers kawamata_numbers(const QuotientType& t, const Rat& a3);

/// Orbifold Riemann-Roch consistency: compares h0 against
/// A^3/2 + 3 - sum b(r-b)/(2r) over the basket re-presented as
/// 1/r(1,r-1,b).
struct RRCheck {
  Rat rhs;
  std::int64_t h0 = 0;
  bool consistent = false;
};
RRCheck rr_consistency(const Rat& a3, std::int64_t h0,
                       const std::vector<SingularPointRecord>& basket);

/// The b of the re-presentation 1/r(1,r-1,b) of a terminal type.
std::int64_t rr_presentation_b(const QuotientType& t);

/// Degree m1*m2*a3 of the curve cut by divisors of degrees m1, m2.
Rat curve_class_degree(const Rat& a3, std::int64_t m1, std::int64_t m2);

}  // namespace lct

#endif

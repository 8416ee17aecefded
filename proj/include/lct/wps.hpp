#ifndef LCT_WPS_HPP
#define LCT_WPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lct/rational.hpp"

namespace lct {

/// A coordinate of a weighted projective space.
struct Coordinate {
  std::string name;
  std::int64_t weight = 1;
};

/// Weighted projective space P(a_0,...,a_n) with named coordinates,
/// stored sorted by weight (stable, so input order breaks ties).
struct WeightedSpace {
  std::vector<Coordinate> coords;
  bool well_formed = false;

  std::int64_t weight(std::size_t i) const { return coords[i].weight; }
  std::size_t dim() const { return coords.empty() ? 0 : coords.size() - 1; }
  std::size_t index_of(const std::string& name) const;
  std::string display() const;
};

/// Monomial as an exponent vector over a space's coordinates.
struct Monomial {
  std::vector<std::int64_t> exps;

  std::int64_t degree(const WeightedSpace& S) const;
  std::string display(const WeightedSpace& S) const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps == b.exps;
  }
};

/// A family record: ambient space plus (for complete intersections)
/// the two defining degrees.
struct FamilyRecord {
  std::string id;
  std::string kind;  // "wci2" or "pfaffian3"
  WeightedSpace space;
  std::vector<std::int64_t> degrees;  // two entries for wci2, empty otherwise
  Rat stored_a3;

  bool is_wci2() const { return kind == "wci2"; }
};

/// Sorts coordinates by weight (stable), checks positivity, and computes
/// the well-formedness flag (gcd of every n-subset of weights is 1).
/// Throws InputError on nonpositive weights or duplicate names.
WeightedSpace validate_space(std::vector<Coordinate> coords);

/// All monomials of the given weighted degree, in ascending lexicographic
/// order of the exponent vector.
std::vector<Monomial> monomials_of_degree(const WeightedSpace& S,
                                          std::int64_t d);

/// (-K_X)^3 = d1*d2 / prod(weights) for a codimension-2 weighted
/// complete intersection X_{d1,d2}.
Rat anticanonical_degree_wci(const FamilyRecord& F);

/// h^0(-K_X) equals the number of weight-1 coordinates for every family
/// treated here (|-K| is cut by the linear coordinates).
std::int64_t h0_anticanonical(const FamilyRecord& F);

}  // namespace lct

#endif

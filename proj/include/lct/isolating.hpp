#ifndef LCT_ISOLATING_HPP
#define LCT_ISOLATING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lct/wps.hpp"

namespace lct {

/// Degree of an isolating class obtained from a finite coordinate
/// projection: l = max over kept k != j of lcm(a_j, a_k).
std::int64_t lcm_isolating_class(const WeightedSpace& S,
                                 const std::vector<std::size_t>& kept,
                                 std::size_t j);

/// Isolating degrees for a Pfaffian family: (d, a3) where d = 1/A^3
/// isolates points on H_x and a3*A isolates points off H_x.
struct PfaffianIsolating {
  std::int64_t on_hx = 0;
  std::int64_t off_hx = 0;
};
PfaffianIsolating pfaffian_isolating(const FamilyRecord& F);

/// Stored isolating data for one family, as shipped in the database.
struct StoredIsolating {
  // Cell values; absent cells are nullopt.
  std::optional<std::int64_t> printed_off_hx;
  std::optional<std::int64_t> printed_on_hx;
  std::string pi;  // removed coordinate names, e.g. "u", "su", "tu"; may be ""
  // "lcm" (recomputed from the projection), "fact" (citation-backed), or
  // "absent" per cell.
  std::string source_off_hx = "absent";
  std::string source_on_hx = "absent";
};

/// One row of the isolating-class table.
struct IsolatingRow {
  std::string family_id;
  std::optional<std::int64_t> off_hx;
  std::optional<std::int64_t> on_hx;
  std::string pi;
  std::vector<std::string> notes;
};

/// Computes a table row, verifying lcm-sourced cells against the stored
/// values. A disagreement on an lcm-sourced cell throws
/// TableMismatchError.
IsolatingRow isolating_row(const FamilyRecord& F, const StoredIsolating& st);

/// Kept coordinate indices for a projection named by the coordinates it
/// removes (e.g. "su" removes s and u).
std::vector<std::size_t> projection_kept(const WeightedSpace& S,
                                         const std::string& pi);

}  // namespace lct

#endif

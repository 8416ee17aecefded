#ifndef LCT_FAMDB_HPP
#define LCT_FAMDB_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lct/engine.hpp"
#include "lct/fm.hpp"
#include "lct/isolating.hpp"
#include "lct/singularities.hpp"
#include "lct/wps.hpp"

namespace lct {

/// A recorded discrepancy between the source tables/proofs and the
/// recomputation; checks covered by one report PASS with a note.
struct Annotation {
  std::string id;
  std::string where;
  std::string description;
};

/// Printed basket entry, with the B^3 > 0 flag as printed.
struct PrintedBasketEntry {
  QuotientType type;
  std::int64_t count = 1;
  bool plus = false;
};

/// Constraint system shipped verbatim for the infeasibility checker.
struct FmSystemRecord {
  std::string id;
  std::size_t nvars = 0;
  std::vector<LinearConstraint> constraints;
  std::string expect;  // "infeasible" or "feasible"
  std::string annotation;
  Citation citation;
};

/// One displayed numerical comparison from a proof: product of lhs
/// factors OP product of rhs factors.
struct InequalityRecord {
  std::string id;
  std::string family;
  std::vector<Rat> lhs;
  CmpOp op = CmpOp::LE;
  std::vector<Rat> rhs;
  Citation citation;
};

struct Family {
  FamilyRecord rec;
  std::vector<PrintedBasketEntry> printed_basket;
  std::string basket_annotation;  // annotation id, "" if none
  StoredIsolating isolating;
  std::optional<QIRecord> qi;
  std::vector<PlanEntry> plan;
};

struct Database {
  std::map<std::string, std::string> metadata;
  std::vector<Family> families;
  std::map<std::string, GeometricFact> facts;
  std::vector<FmSystemRecord> fm_systems;
  std::vector<InequalityRecord> inequalities;
  std::vector<Annotation> annotations;

  const Family& family(const std::string& id) const;
  const Family* find_family(const std::string& id) const;
  const GeometricFact& fact(const std::string& id) const;
  const FmSystemRecord& fm_system(const std::string& id) const;
  const InequalityRecord& inequality(const std::string& id) const;
  const Annotation* annotation(const std::string& id) const;
};

/// Parses and fully validates the JSON dataset. Throws DataError with a
/// JSON-pointer-ish path on schema violations or dangling references.
Database load_database(const std::string& json_text);
Database load_database_file(const std::string& path);

/// Canonical serialization; load followed by serialize is byte-identical
/// for the shipped file.
std::string serialize_database(const Database& db);

/// Cross-consistency checks over the whole database (degrees, baskets,
/// RR, plus flags, QI relations, isolating table reproduction,
/// inequality records, fm systems).
std::vector<CheckResult> validate_database(const Database& db);

/// Certification of one family by walking its plan.
Certificate assemble_certificate(const Database& db, const Family& fam,
                                 bool strict);

/// Evaluates an inequality record.
CheckResult check_inequality(const InequalityRecord& q);

/// Default dataset path: LCT_CERT_DATA env var, else the compiled-in
/// location of data/families.json.
std::string default_data_path();

}  // namespace lct

#endif

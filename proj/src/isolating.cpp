#include "lct/isolating.hpp"

#include <algorithm>
#include <numeric>

#include "lct/errors.hpp"

namespace lct {

std::int64_t lcm_isolating_class(const WeightedSpace& S,
                                 const std::vector<std::size_t>& kept,
                                 std::size_t j) {
  if (std::find(kept.begin(), kept.end(), j) == kept.end())
    throw InputError("projection center j must be a kept coordinate");
  std::int64_t l = 0;
  for (std::size_t k : kept) {
    if (k == j) continue;
    l = std::max(l, std::lcm(S.weight(j), S.weight(k)));
  }
  if (l == 0) throw InputError("need at least two kept coordinates");
  return l;
}

PfaffianIsolating pfaffian_isolating(const FamilyRecord& F) {
  if (F.kind != "pfaffian3")
    throw InputError("pfaffian_isolating needs a pfaffian family");
  if (F.space.coords.size() != 7 || F.space.weight(0) != 1)
    throw InputError("pfaffian family needs 7 coordinates, first weight 1");
  if (F.stored_a3.num() != 1)
    throw DataError("expected anticanonical degree 1/d, got " +
                    F.stored_a3.str());
  PfaffianIsolating p;
  p.on_hx = F.stored_a3.den();
  p.off_hx = F.space.weight(3);
  return p;
}

std::vector<std::size_t> projection_kept(const WeightedSpace& S,
                                         const std::string& pi) {
  std::vector<std::size_t> removed;
  for (char c : pi) removed.push_back(S.index_of(std::string(1, c)));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < S.coords.size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      kept.push_back(i);
  return kept;
}

IsolatingRow isolating_row(const FamilyRecord& F, const StoredIsolating& st) {
  IsolatingRow row;
  row.family_id = F.id;
  row.pi = st.pi;
  auto cell = [&](const std::string& source,
                  const std::optional<std::int64_t>& printed,
                  std::size_t j) -> std::optional<std::int64_t> {
    if (source == "absent") return std::nullopt;
    if (source == "fact") {
      if (!printed) throw DataError("fact-sourced cell without value");
      return printed;
    }
    if (source != "lcm") throw DataError("unknown isolating source " + source);
    auto kept = projection_kept(F.space, st.pi);
    std::int64_t l = lcm_isolating_class(F.space, kept, j);
    if (!printed || *printed != l)
      throw TableMismatchError(
          "family " + F.id + ": computed isolating degree " +
          std::to_string(l) + " disagrees with stored " +
          (printed ? std::to_string(*printed) : std::string("(absent)")));
    return l;
  };
  row.off_hx = cell(st.source_off_hx, st.printed_off_hx, 0);
  row.on_hx = cell(st.source_on_hx, st.printed_on_hx, 1);
  if (st.source_off_hx == "fact" || st.source_on_hx == "fact")
    row.notes.push_back("citation-backed value");
  return row;
}

}  // namespace lct

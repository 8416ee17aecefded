#include <algorithm>
#include <sstream>

#include "lct/errors.hpp"
#include "lct/famdb.hpp"

namespace lct {

namespace {

Rat param_rat(const PlanEntry& e, const std::string& key) {
  auto it = e.params.find(key);
  if (it == e.params.end())
    throw DataError("plan entry missing param " + key);
  try {
    return Rat::parse(it->second);
  } catch (const std::invalid_argument&) {
    throw DataError("plan param " + key + " is not a rational: " + it->second);
  }
}

std::int64_t param_int(const PlanEntry& e, const std::string& key) {
  Rat r = param_rat(e, key);
  if (!r.is_integer()) throw DataError("plan param " + key + " must be integer");
  return r.num();
}

std::string param_str(const PlanEntry& e, const std::string& key) {
  auto it = e.params.find(key);
  if (it == e.params.end())
    throw DataError("plan entry missing param " + key);
  return it->second;
}

BlowupCtx ctx_of(const PlanEntry& e, const Rat& a3) {
  QuotientType t;
  t.r = param_int(e, "r");
  t.a = param_int(e, "a");
  if (!is_terminal(t)) throw DataError("plan entry has non-terminal type");
  return make_blowup_ctx(t, a3);
}

// "alpha,e" -> class; "a1,e1;a2,e2" -> list.
BlowupDivisorClass parse_class(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw DataError("divisor class must be alpha,e: " + s);
  return {Rat::parse(s.substr(0, comma)), Rat::parse(s.substr(comma + 1))};
}

std::vector<BlowupDivisorClass> parse_classes(const std::string& s) {
  std::vector<BlowupDivisorClass> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) out.push_back(parse_class(part));
  return out;
}

CheckResult fold_qi(const std::vector<CheckResult>& subs) {
  CheckResult r;
  r.name = "qi";
  r.status = CheckStatus::Pass;
  for (const auto& s : subs) {
    for (const auto& [k, v] : s.values)
      r.values.emplace_back(s.name + "." + k, v);
    for (const auto& f : s.facts_used) r.facts_used.push_back(f);
    if (s.status == CheckStatus::Fail) {
      r.status = CheckStatus::Fail;
      r.note = "sub-check failed: " + s.name;
    } else if (s.status == CheckStatus::Indeterminate &&
               r.status == CheckStatus::Pass) {
      r.status = CheckStatus::Indeterminate;
      r.note = "sub-check indeterminate: " + s.name;
    }
  }
  return r;
}

CheckResult run_fm_entry(const Database& db, const PlanEntry& e) {
  const FmSystemRecord& sys = db.fm_system(param_str(e, "system"));
  FmResult res = fm_solve(sys.nvars, sys.constraints);
  CheckResult r;
  r.name = "fm/" + sys.id;
  r.values.emplace_back("status", res.feasible ? "Feasible" : "Infeasible");
  if (res.feasible) {
    std::string w;
    for (const auto& v : res.witness) {
      if (!w.empty()) w += ",";
      w += v.str();
    }
    r.values.emplace_back("witness", w);
  }
  if (sys.expect == "infeasible") {
    r.status = res.feasible ? CheckStatus::Fail : CheckStatus::Pass;
    if (res.feasible) r.note = "expected infeasible but found a witness";
  } else {
    // The source claims a contradiction but the printed system is
    // satisfiable; shipping expectation "feasible" keeps the record
    // honest and the annotation marks the discrepancy.
    r.status = res.feasible ? CheckStatus::Pass : CheckStatus::Fail;
    r.annotated = res.feasible;
    if (res.feasible) r.note = "system is satisfiable as printed";
  }
  if (!sys.annotation.empty()) {
    r.annotated = true;
    if (const Annotation* a = db.annotation(sys.annotation)) {
      if (!r.note.empty()) r.note += "; ";
      r.note += a->description;
    }
  }
  return r;
}

CheckResult run_plan_entry(const Database& db, const Family& fam,
                           const PlanEntry& e) {
  FactList facts;
  for (const auto& fid : e.fact_ids) facts.push_back(&db.fact(fid));
  const Rat& a3 = fam.rec.stored_a3;
  CheckResult r;
  if (e.templ == "exclL") {
    r = check_exclL(a3, param_rat(e, "c1"), param_rat(e, "c2"), facts);
  } else if (e.templ == "exclG1") {
    r = check_exclG1(a3, param_rat(e, "c1"), param_rat(e, "c2"),
                     param_int(e, "l"), facts);
  } else if (e.templ == "exclG2") {
    r = check_exclG2(a3, param_rat(e, "c"), param_int(e, "l"), facts);
  } else if (e.templ == "singpt_cone") {
    r = check_singpt_cone(ctx_of(e, a3), facts);
  } else if (e.templ == "singpt_nef") {
    r = check_singpt_nef(ctx_of(e, a3), parse_class(param_str(e, "N")),
                         parse_classes(param_str(e, "surfaces")), facts);
  } else if (e.templ == "singpt_cover") {
    r = check_singpt_cover(ctx_of(e, a3), param_rat(e, "c1"),
                           param_rat(e, "c2"), facts);
  } else if (e.templ == "qi") {
    if (!fam.qi) throw DataError("qi plan entry without a qi record");
    r = fold_qi(qi_verify(fam.rec, *fam.qi, facts));
  } else if (e.templ == "fm") {
    r = run_fm_entry(db, e);
  } else if (e.templ == "ineq") {
    r = check_inequality(db.inequality(param_str(e, "ineq")));
  } else if (e.templ == "curve_decomp") {
    r.name = "curve_decomp";
    Rat total = curve_class_degree(a3, param_int(e, "m1"), param_int(e, "m2"));
    Rat sum(0);
    std::stringstream ss(param_str(e, "components"));
    std::string part;
    while (std::getline(ss, part, ';')) {
      auto colon = part.find(':');
      if (colon == std::string::npos)
        throw DataError("curve component must be deg:mult");
      sum += Rat::parse(part.substr(0, colon)) *
             Rat::parse(part.substr(colon + 1));
    }
    r.set("class_degree", total);
    r.set("component_sum", sum);
    r.status = (total == sum) ? CheckStatus::Pass : CheckStatus::Fail;
  } else {
    throw DataError("unknown plan template " + e.templ);
  }
  if (!e.annotation.empty()) {
    r.annotated = true;
    if (const Annotation* a = db.annotation(e.annotation)) {
      if (!r.note.empty()) r.note += "; ";
      r.note += a->description;
    }
  }
  return r;
}

}  // namespace

Certificate assemble_certificate(const Database& db, const Family& fam,
                                 bool strict) {
  Certificate cert;
  cert.family_id = fam.rec.id;
  for (const auto& e : fam.plan)
    cert.entries.emplace_back(e.locus, run_plan_entry(db, fam, e));
  cert.verdict = verdict_of(cert.entries, strict);
  return cert;
}

namespace {

void push(std::vector<CheckResult>& out, const std::string& name,
          bool ok, const std::string& note = "", bool annotated = false) {
  CheckResult r;
  r.name = name;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = note;
  r.annotated = annotated;
  out.push_back(std::move(r));
}

std::string basket_str(const std::vector<SingularPointRecord>& b) {
  std::string s;
  for (const auto& e : b) {
    if (!s.empty()) s += ", ";
    if (e.count > 1) s += std::to_string(e.count) + "x";
    s += e.type.display();
  }
  return s.empty() ? "(none)" : s;
}

std::vector<SingularPointRecord> printed_as_basket(const Family& fam) {
  std::vector<SingularPointRecord> b;
  for (const auto& e : fam.printed_basket) b.push_back({e.type, e.count});
  return b;
}

void validate_family(const Database& db, const Family& fam,
                     std::vector<CheckResult>& out) {
  const std::string id = fam.rec.id;
  const Rat& a3 = fam.rec.stored_a3;

  // Fano index one.
  if (fam.rec.is_wci2()) {
    std::int64_t ws = 0, ds = 0;
    for (const auto& c : fam.rec.space.coords) ws += c.weight;
    for (std::int64_t d : fam.rec.degrees) ds += d;
    push(out, id + "/index_one", ws - ds == 1);
    push(out, id + "/degree", anticanonical_degree_wci(fam.rec) == a3);
  } else {
    push(out, id + "/index_one", h0_anticanonical(fam.rec) == 1);
  }

  std::vector<SingularPointRecord> printed = printed_as_basket(fam);
  std::vector<SingularPointRecord> computed;
  if (fam.rec.is_wci2()) {
    computed = basket_wci(fam.rec);
    bool match = computed.size() == printed.size();
    if (match)
      for (std::size_t i = 0; i < computed.size(); ++i)
        if (!(computed[i].type == printed[i].type &&
              computed[i].count == printed[i].count))
          match = false;
    if (match) {
      push(out, id + "/basket", fam.basket_annotation.empty(),
           fam.basket_annotation.empty()
               ? ""
               : "annotation present but baskets agree");
    } else if (!fam.basket_annotation.empty()) {
      const Annotation* a = db.annotation(fam.basket_annotation);
      push(out, id + "/basket", true,
           "printed " + basket_str(printed) + " vs computed " +
               basket_str(computed) +
               (a ? "; " + a->description : std::string()),
           true);
    } else {
      push(out, id + "/basket", false,
           "printed " + basket_str(printed) + " vs computed " +
               basket_str(computed));
    }
  } else {
    computed = printed;  // stored basket is the only source
  }

  std::int64_t h0 = h0_anticanonical(fam.rec);
  RRCheck rp = rr_consistency(a3, h0, printed);
  if (rp.consistent) {
    push(out, id + "/rr_printed", true);
  } else {
    push(out, id + "/rr_printed", !fam.basket_annotation.empty(),
         "rhs = " + rp.rhs.str() + " vs h0 = " + std::to_string(h0),
         !fam.basket_annotation.empty());
  }
  RRCheck rc = rr_consistency(a3, h0, computed);
  push(out, id + "/rr_computed", rc.consistent,
       rc.consistent ? "" : "rhs = " + rc.rhs.str());

  // Plus flags: exactly the flagged points have B^3 > 0.
  bool plus_ok = true;
  std::string plus_note;
  for (const auto& e : fam.printed_basket) {
    Rat b3 = kawamata_numbers(e.type, a3).b3;
    if (e.plus != (b3 > Rat(0))) {
      plus_ok = false;
      plus_note = e.type.display() + " has B^3 = " + b3.str();
    }
  }
  push(out, id + "/plus_flags", plus_ok, plus_note);

  if (fam.qi) {
    FactList facts;
    for (const auto& e : fam.plan)
      if (e.templ == "qi")
        for (const auto& fid : e.fact_ids) facts.push_back(&db.fact(fid));
    auto subs = qi_verify(fam.rec, *fam.qi, facts);
    for (const auto& s : subs) {
      CheckResult r = s;
      r.name = id + "/" + s.name;
      out.push_back(std::move(r));
    }
  }

  // Isolating data.
  if (fam.rec.is_wci2()) {
    if (fam.isolating.source_off_hx != "absent" ||
        fam.isolating.source_on_hx != "absent") {
      try {
        IsolatingRow row = isolating_row(fam.rec, fam.isolating);
        bool annotated = false;
        std::string note;
        // For fact-sourced cells with a projection, report the lcm value
        // alongside the sharper printed one.
        if (!fam.isolating.pi.empty() &&
            fam.isolating.source_on_hx == "fact") {
          auto kept = projection_kept(fam.rec.space, fam.isolating.pi);
          std::int64_t l = lcm_isolating_class(fam.rec.space, kept, 1);
          if (fam.isolating.printed_on_hx &&
              l != *fam.isolating.printed_on_hx) {
            annotated = true;
            note = "printed " + std::to_string(*fam.isolating.printed_on_hx) +
                   " is sharper than the lcm bound " + std::to_string(l);
          }
        }
        push(out, id + "/isolating", true, note, annotated);
      } catch (const TableMismatchError& e) {
        push(out, id + "/isolating", false, e.what());
      }
    }
  } else {
    PfaffianIsolating p = pfaffian_isolating(fam.rec);
    bool ok = fam.isolating.printed_on_hx &&
              *fam.isolating.printed_on_hx == p.on_hx &&
              fam.isolating.printed_off_hx &&
              *fam.isolating.printed_off_hx == p.off_hx;
    push(out, id + "/isolating", ok,
         ok ? "" : "computed (" + std::to_string(p.on_hx) + "," +
                       std::to_string(p.off_hx) + ")");
  }
}

}  // namespace

std::vector<CheckResult> validate_database(const Database& db) {
  std::vector<CheckResult> out;
  std::int64_t wci2 = 0, pfaff = 0;
  for (const auto& fam : db.families)
    (fam.rec.is_wci2() ? wci2 : pfaff) += 1;
  push(out, "db/family_counts", wci2 == 18 && pfaff == 3,
       std::to_string(wci2) + " wci2 + " + std::to_string(pfaff) +
           " pfaffian");
  push(out, "db/fact_count", db.facts.size() >= 40,
       std::to_string(db.facts.size()) + " facts");
  bool quotes_ok = true;
  for (const auto& [fid, f] : db.facts)
    if (f.citation.quote.size() < 3 || f.citation.quote.size() > 80)
      quotes_ok = false;
  push(out, "db/fact_quotes", quotes_ok);

  for (const auto& fam : db.families) validate_family(db, fam, out);

  for (const auto& sys : db.fm_systems) {
    FmResult res = fm_solve(sys.nvars, sys.constraints);
    bool matches = (sys.expect == "feasible") == res.feasible;
    bool annotated = !sys.annotation.empty();
    std::string note = res.feasible ? "Feasible" : "Infeasible";
    if (annotated) {
      if (const Annotation* a = db.annotation(sys.annotation))
        note += "; " + a->description;
    }
    push(out, "fm/" + sys.id, matches, note, annotated && matches);
  }
  for (const auto& q : db.inequalities) {
    CheckResult r = check_inequality(q);
    out.push_back(std::move(r));
  }
  for (const auto& a : db.annotations)
    push(out, "annotation/" + a.id, true, a.where + ": " + a.description,
         true);
  return out;
}

}  // namespace lct

// Command-line front end: dataset validation, table reproduction, and
// per-family certification reports.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lct/engine.hpp"
#include "lct/errors.hpp"
#include "lct/famdb.hpp"
#include "lct/isolating.hpp"
#include "lct/singularities.hpp"

namespace {

using namespace lct;

struct Options {
  std::string data_path;
  std::string format = "text";
  bool strict = false;
};

std::string basket_str(const std::vector<SingularPointRecord>& b) {
  std::string s;
  for (const auto& e : b) {
    if (!s.empty()) s += ", ";
    if (e.count > 1) s += std::to_string(e.count) + "x";
    s += e.type.display();
  }
  return s.empty() ? "(none)" : s;
}

CheckStatus effective_status(const CheckResult& r, bool strict) {
  if (strict && r.annotated && r.status == CheckStatus::Pass)
    return CheckStatus::Fail;
  if (strict && r.status == CheckStatus::Indeterminate)
    return CheckStatus::Fail;
  return r.status;
}

int emit(const std::string& command, const std::vector<CheckResult>& items,
         const Options& opt) {
  int pass = 0, fail = 0, indet = 0, annotated = 0;
  for (const auto& r : items) {
    switch (effective_status(r, opt.strict)) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Indeterminate: ++indet; break;
    }
    if (r.annotated) ++annotated;
  }
  if (opt.format == "json") {
    nlohmann::json j;
    j["command"] = command;
    j["items"] = nlohmann::json::array();
    for (const auto& r : items) {
      nlohmann::json values = nlohmann::json::object();
      for (const auto& [k, v] : r.values) values[k] = v;
      j["items"].push_back({{"annotated", r.annotated},
                            {"facts_used", r.facts_used},
                            {"name", r.name},
                            {"note", r.note},
                            {"status", status_str(r.status)},
                            {"tight", r.tight},
                            {"values", values}});
    }
    j["summary"] = {{"annotated", annotated},
                    {"fail", fail},
                    {"indeterminate", indet},
                    {"pass", pass}};
    std::cout << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "status,name,annotated,tight,note\n";
    for (const auto& r : items) {
      std::string note = r.note;
      std::replace(note.begin(), note.end(), ',', ';');
      std::replace(note.begin(), note.end(), '\n', ' ');
      std::cout << status_str(effective_status(r, opt.strict)) << ","
                << r.name << "," << (r.annotated ? "yes" : "no") << ","
                << (r.tight ? "yes" : "no") << "," << note << "\n";
    }
  } else if (opt.format == "md") {
    std::cout << "| status | check | note |\n|---|---|---|\n";
    for (const auto& r : items)
      std::cout << "| " << status_str(effective_status(r, opt.strict))
                << (r.annotated ? " (annotated)" : "") << " | " << r.name
                << " | " << r.note << " |\n";
    std::cout << "\n" << pass << " pass, " << fail << " fail, " << indet
              << " indeterminate, " << annotated << " annotated\n";
  } else {
    for (const auto& r : items) {
      std::cout << status_str(effective_status(r, opt.strict));
      if (r.annotated) std::cout << " (annotated)";
      if (r.tight) std::cout << " (tight)";
      std::cout << " " << r.name;
      if (!r.note.empty()) std::cout << " -- " << r.note;
      if (!r.values.empty()) {
        std::cout << " [";
        bool first = true;
        for (const auto& [k, v] : r.values) {
          if (!first) std::cout << ", ";
          first = false;
          std::cout << k << " = " << v;
        }
        std::cout << "]";
      }
      std::cout << "\n";
    }
    std::cout << command << ": " << pass << " pass, " << fail << " fail, "
              << indet << " indeterminate, " << annotated << " annotated\n";
  }
  if (fail > 0) return 1;
  if (indet > 0) return 3;
  return 0;
}

void push(std::vector<CheckResult>& out, const std::string& name, bool ok,
          const std::string& note = "", bool annotated = false) {
  CheckResult r;
  r.name = name;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = note;
  r.annotated = annotated;
  out.push_back(std::move(r));
}

void basket_items(const Database& db, const Family& fam,
                  std::vector<CheckResult>& out) {
  const std::string id = fam.rec.id;
  std::vector<SingularPointRecord> printed;
  for (const auto& e : fam.printed_basket)
    printed.push_back({e.type, e.count});
  std::int64_t h0 = h0_anticanonical(fam.rec);
  if (fam.rec.is_wci2()) {
    auto computed = basket_wci(fam.rec);
    bool match = computed.size() == printed.size();
    if (match)
      for (std::size_t i = 0; i < computed.size(); ++i)
        if (!(computed[i].type == printed[i].type &&
              computed[i].count == printed[i].count))
          match = false;
    std::string note = "printed " + basket_str(printed) + " vs computed " +
                       basket_str(computed);
    if (match) {
      push(out, id + "/basket", true, "basket " + basket_str(computed));
    } else if (!fam.basket_annotation.empty()) {
      if (const Annotation* a = db.annotation(fam.basket_annotation))
        note += "; " + a->description;
      push(out, id + "/basket", true, note, true);
    } else {
      push(out, id + "/basket", false, note);
    }
    RRCheck rc = rr_consistency(fam.rec.stored_a3, h0, computed);
    push(out, id + "/rr_computed", rc.consistent,
         "rhs = " + rc.rhs.str() + ", h0 = " + std::to_string(h0));
  } else {
    push(out, id + "/basket", true, "basket " + basket_str(printed));
  }
  RRCheck rp = rr_consistency(fam.rec.stored_a3, h0, printed);
  if (rp.consistent) {
    push(out, id + "/rr_printed", true,
         "rhs = " + rp.rhs.str() + ", h0 = " + std::to_string(h0));
  } else {
    bool ann = !fam.basket_annotation.empty();
    push(out, id + "/rr_printed", ann,
         "rhs = " + rp.rhs.str() + " vs h0 = " + std::to_string(h0), ann);
  }
}

void isolating_items(const Database& db, const Family& fam,
                     std::vector<CheckResult>& out) {
  (void)db;
  const std::string id = fam.rec.id;
  auto cell = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) + "A" : std::string("-");
  };
  if (fam.rec.is_wci2()) {
    if (fam.isolating.source_off_hx == "absent" &&
        fam.isolating.source_on_hx == "absent")
      return;
    try {
      IsolatingRow row = isolating_row(fam.rec, fam.isolating);
      bool annotated = false;
      std::string note = "off H_x: " + cell(row.off_hx) +
                         ", on H_x: " + cell(row.on_hx);
      if (!fam.isolating.pi.empty()) note += ", pi removes " + fam.isolating.pi;
      if (!fam.isolating.pi.empty() && fam.isolating.source_on_hx == "fact") {
        auto kept = projection_kept(fam.rec.space, fam.isolating.pi);
        std::int64_t l = lcm_isolating_class(fam.rec.space, kept, 1);
        if (fam.isolating.printed_on_hx && l != *fam.isolating.printed_on_hx) {
          annotated = true;
          note += "; printed " + std::to_string(*fam.isolating.printed_on_hx) +
                  " is sharper than the lcm bound " + std::to_string(l);
        }
      }
      push(out, id + "/isolating", true, note, annotated);
    } catch (const TableMismatchError& e) {
      push(out, id + "/isolating", false, e.what());
    }
  } else {
    PfaffianIsolating p = pfaffian_isolating(fam.rec);
    bool ok = fam.isolating.printed_on_hx &&
              *fam.isolating.printed_on_hx == p.on_hx &&
              fam.isolating.printed_off_hx &&
              *fam.isolating.printed_off_hx == p.off_hx;
    push(out, id + "/isolating", ok,
         "on H_x: " + std::to_string(p.on_hx) +
             "A, off H_x: " + std::to_string(p.off_hx) + "A");
  }
}

void certify_items(const Database& db, const Family& fam, bool strict,
                   std::vector<CheckResult>& out) {
  Certificate cert = assemble_certificate(db, fam, strict);
  for (const auto& [locus, r] : cert.entries) {
    CheckResult item = r;
    item.name = fam.rec.id + "/" + locus;
    out.push_back(std::move(item));
  }
  CheckResult v;
  v.name = fam.rec.id + "/verdict";
  v.status = cert.verdict == "FAILED"
                 ? CheckStatus::Fail
                 : (cert.verdict == "NOT_ESTABLISHED"
                        ? CheckStatus::Indeterminate
                        : CheckStatus::Pass);
  v.note = cert.verdict;
  out.push_back(std::move(v));
}

const Family& need_family(const Database& db, const std::string& id) {
  return db.family(id);  // throws InputError on unknown id
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "Exact-arithmetic verification of log canonical threshold "
      "certificates for 21 Fano 3-fold families"};
  app.require_subcommand(1);
  app.add_option("--data", opt.data_path, "Path to the dataset JSON");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "md", "json", "csv"}));
  app.add_flag("--strict", opt.strict,
               "Treat annotated discrepancies and indeterminate results as "
               "failures");

  app.fallthrough(true);  // allow global flags after the subcommand
  auto* validate = app.add_subcommand("validate", "Run all database checks");
  auto* tables = app.add_subcommand("tables", "Reproduce a summary table");
  std::string which;
  tables->add_option("--which", which, "Table to reproduce")
      ->required()
      ->check(CLI::IsMember({"degrees", "baskets", "isolating", "qi"}));
  std::string basket_id, isolate_id, certify_id;
  auto* basket = app.add_subcommand("basket", "Basket of one family");
  basket->add_option("id", basket_id, "Family id")->required();
  auto* isolate =
      app.add_subcommand("isolate", "Isolating classes of one family");
  isolate->add_option("id", isolate_id, "Family id")->required();
  auto* certify = app.add_subcommand("certify", "Certify families");
  bool all = false;
  certify->add_option("id", certify_id, "Family id");
  certify->add_flag("--all", all, "Certify every family");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string path = opt.data_path.empty() ? default_data_path()
                                             : opt.data_path;
    Database db = load_database_file(path);
    std::vector<CheckResult> items;
    std::string command;
    if (*validate) {
      command = "validate";
      items = validate_database(db);
    } else if (*tables) {
      command = "tables --which " + which;
      for (const auto& fam : db.families) {
        if (which == "degrees") {
          if (!fam.rec.is_wci2()) continue;
          Rat derived = anticanonical_degree_wci(fam.rec);
          CheckResult r;
          r.name = fam.rec.id + "/degree";
          r.set("stored", fam.rec.stored_a3);
          r.set("derived", derived);
          r.status = derived == fam.rec.stored_a3 ? CheckStatus::Pass
                                                  : CheckStatus::Fail;
          items.push_back(std::move(r));
        } else if (which == "baskets") {
          basket_items(db, fam, items);
        } else if (which == "isolating") {
          isolating_items(db, fam, items);
        } else if (which == "qi") {
          if (!fam.qi) continue;
          FactList facts;
          for (const auto& e : fam.plan)
            if (e.templ == "qi")
              for (const auto& fid : e.fact_ids)
                facts.push_back(&db.fact(fid));
          for (const auto& s : qi_verify(fam.rec, *fam.qi, facts)) {
            CheckResult r = s;
            r.name = fam.rec.id + "/" + s.name;
            items.push_back(std::move(r));
          }
        }
      }
    } else if (*basket) {
      command = "basket " + basket_id;
      basket_items(db, need_family(db, basket_id), items);
    } else if (*isolate) {
      command = "isolate " + isolate_id;
      const Family& fam = need_family(db, isolate_id);
      isolating_items(db, fam, items);
      if (items.empty())
        push(items, fam.rec.id + "/isolating", true,
             "no isolating table row for this family");
    } else if (*certify) {
      if (!all && certify_id.empty())
        throw InputError("certify needs a family id or --all");
      command = all ? "certify --all" : "certify " + certify_id;
      if (all) {
        for (const auto& fam : db.families)
          certify_items(db, fam, opt.strict, items);
      } else {
        certify_items(db, need_family(db, certify_id), opt.strict, items);
      }
    }
    return emit(command, items, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include "lct/famdb.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lct/errors.hpp"

namespace lct {

using nlohmann::json;

const Family& Database::family(const std::string& id) const {
  const Family* f = find_family(id);
  if (!f) throw InputError("unknown family id " + id);
  return *f;
}

const Family* Database::find_family(const std::string& id) const {
  for (const auto& f : families)
    if (f.rec.id == id) return &f;
  return nullptr;
}

const GeometricFact& Database::fact(const std::string& id) const {
  auto it = facts.find(id);
  if (it == facts.end()) throw DataError("dangling fact reference " + id);
  return it->second;
}

const FmSystemRecord& Database::fm_system(const std::string& id) const {
  for (const auto& s : fm_systems)
    if (s.id == id) return s;
  throw DataError("dangling fm system reference " + id);
}

const InequalityRecord& Database::inequality(const std::string& id) const {
  for (const auto& q : inequalities)
    if (q.id == id) return q;
  throw DataError("dangling inequality reference " + id);
}

const Annotation* Database::annotation(const std::string& id) const {
  for (const auto& a : annotations)
    if (a.id == id) return &a;
  return nullptr;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw DataError(path + ": " + msg);
}

const json& get(const json& j, const std::string& key,
                const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path, "missing key " + key);
  return j.at(key);
}

std::string get_str(const json& j, const std::string& key,
                    const std::string& path) {
  const json& v = get(j, key, path);
  if (!v.is_string()) fail(path + "/" + key, "expected string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& j, const std::string& key,
                     const std::string& path) {
  const json& v = get(j, key, path);
  if (!v.is_number_integer()) fail(path + "/" + key, "expected integer");
  return v.get<std::int64_t>();
}

Rat get_rat(const json& j, const std::string& key, const std::string& path) {
  std::string s = get_str(j, key, path);
  try {
    return Rat::parse(s);
  } catch (const std::invalid_argument& e) {
    fail(path + "/" + key, e.what());
  }
}

Rat rat_of(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected rational string");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Citation get_citation(const json& j, const std::string& path) {
  Citation c;
  c.where = get_str(j, "where", path);
  c.quote = get_str(j, "quote", path);
  return c;
}

QuotientType get_type(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4) fail(path, "expected [r,b1,b2,b3]");
  for (const auto& e : v)
    if (!e.is_number_integer()) fail(path, "expected integer entries");
  auto t = normalize_quotient_type(v[0].get<std::int64_t>(),
                                   v[1].get<std::int64_t>(),
                                   v[2].get<std::int64_t>(),
                                   v[3].get<std::int64_t>());
  if (!t || !is_terminal(*t)) fail(path, "not a terminal quotient type");
  return *t;
}

const std::vector<std::string> kFactKinds = {
    "mult_bound",        "irreducible_reduced",    "nef",
    "big_nef",           "cone_boundary",          "proper_transform_class",
    "quasi_smooth_member", "finiteness",           "cover_mult_bound",
    "ord_bound"};

GeometricFact parse_fact(const json& j, const std::string& path) {
  GeometricFact f;
  f.id = get_str(j, "id", path);
  f.kind = get_str(j, "kind", path);
  if (std::find(kFactKinds.begin(), kFactKinds.end(), f.kind) ==
      kFactKinds.end())
    fail(path, "unknown fact kind " + f.kind);
  f.subject = get_str(j, "subject", path);
  const json& b = get(j, "bound", path);
  if (!b.is_null()) f.bound = rat_of(b, path + "/bound");
  f.citation = get_citation(j, path);
  if (f.citation.quote.size() < 3 || f.citation.quote.size() > 80)
    fail(path, "citation quote must be 3-80 characters");
  return f;
}

LinearConstraint parse_constraint(const json& j, const std::string& path) {
  LinearConstraint c;
  const json& coeffs = get(j, "coeffs", path);
  if (!coeffs.is_array()) fail(path + "/coeffs", "expected array");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c.coeffs.push_back(rat_of(coeffs[i], path + "/coeffs"));
  c.b = get_rat(j, "b", path);
  c.op = parse_cmp(get_str(j, "op", path));
  return c;
}

Family parse_family(const json& j, const std::string& path) {
  Family fam;
  fam.rec.id = get_str(j, "id", path);
  fam.rec.kind = get_str(j, "kind", path);
  if (fam.rec.kind != "wci2" && fam.rec.kind != "pfaffian3")
    fail(path, "unknown family kind " + fam.rec.kind);
  const json& coords = get(j, "coords", path);
  if (!coords.is_array()) fail(path + "/coords", "expected array");
  std::vector<Coordinate> cs;
  for (const auto& c : coords) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
        !c[1].is_number_integer())
      fail(path + "/coords", "expected [name, weight] pairs");
    cs.push_back({c[0].get<std::string>(), c[1].get<std::int64_t>()});
  }
  try {
    fam.rec.space = validate_space(std::move(cs));
  } catch (const InputError& e) {
    fail(path + "/coords", e.what());
  }
  const json& degs = get(j, "degrees", path);
  if (!degs.is_array()) fail(path + "/degrees", "expected array");
  for (const auto& d : degs) {
    if (!d.is_number_integer() || d.get<std::int64_t>() <= 0)
      fail(path + "/degrees", "expected positive integers");
    fam.rec.degrees.push_back(d.get<std::int64_t>());
  }
  if (fam.rec.is_wci2() && fam.rec.degrees.size() != 2)
    fail(path + "/degrees", "wci2 family needs exactly two degrees");
  fam.rec.stored_a3 = get_rat(j, "a3", path);
  if (fam.rec.is_wci2() &&
      anticanonical_degree_wci(fam.rec) != fam.rec.stored_a3)
    fail(path + "/a3", "stored A^3 " + fam.rec.stored_a3.str() +
                           " disagrees with derived " +
                           anticanonical_degree_wci(fam.rec).str());

  const json& basket = get(j, "basket", path);
  if (!basket.is_array()) fail(path + "/basket", "expected array");
  for (std::size_t i = 0; i < basket.size(); ++i) {
    const std::string bp = path + "/basket/" + std::to_string(i);
    PrintedBasketEntry e;
    e.type = get_type(get(basket[i], "type", bp), bp + "/type");
    e.count = get_int(basket[i], "count", bp);
    if (e.count <= 0) fail(bp, "count must be positive");
    const json& plus = get(basket[i], "plus", bp);
    if (!plus.is_boolean()) fail(bp + "/plus", "expected boolean");
    e.plus = plus.get<bool>();
    fam.printed_basket.push_back(e);
  }
  fam.basket_annotation = get_str(j, "basket_annotation", path);

  const json& iso = get(j, "isolating", path);
  const std::string ip = path + "/isolating";
  auto cellv = [&](const char* key) -> std::optional<std::int64_t> {
    const json& v = get(iso, key, ip);
    if (v.is_null()) return std::nullopt;
    if (!v.is_number_integer()) fail(ip, std::string(key) + " must be integer");
    return v.get<std::int64_t>();
  };
  fam.isolating.printed_off_hx = cellv("off_hx");
  fam.isolating.printed_on_hx = cellv("on_hx");
  fam.isolating.pi = get_str(iso, "pi", ip);
  fam.isolating.source_off_hx = get_str(iso, "source_off", ip);
  fam.isolating.source_on_hx = get_str(iso, "source_on", ip);

  const json& qi = get(j, "qi", path);
  if (!qi.is_null()) {
    const std::string qp = path + "/qi";
    QIRecord q;
    q.point = get_type(get(qi, "point", qp), qp + "/point");
    q.xi0 = get_str(qi, "xi0", qp);
    q.xi1 = get_str(qi, "xi1", qp);
    q.xi = get_str(qi, "xi", qp);
    q.zeta = get_str(qi, "zeta", qp);
    q.n_g = get_int(qi, "n_g", qp);
    const json& ew = get(qi, "exc_weights", qp);
    if (!ew.is_array()) fail(qp + "/exc_weights", "expected array");
    for (const auto& w : ew) q.exc_weights.push_back(w.get<std::int64_t>());
    q.c_poly = get_str(qi, "c_poly", qp);
    q.d_theta = get_int(qi, "d_theta", qp);
    q.d_xi = get_int(qi, "d_xi", qp);
    fam.qi = std::move(q);
  }

  const json& plan = get(j, "plan", path);
  if (!plan.is_array()) fail(path + "/plan", "expected array");
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const std::string pp = path + "/plan/" + std::to_string(i);
    PlanEntry e;
    e.locus = get_str(plan[i], "locus", pp);
    e.templ = get_str(plan[i], "template", pp);
    const json& params = get(plan[i], "params", pp);
    if (!params.is_object()) fail(pp + "/params", "expected object");
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (!it.value().is_string()) fail(pp + "/params", "values must be strings");
      e.params[it.key()] = it.value().get<std::string>();
    }
    const json& fs = get(plan[i], "facts", pp);
    if (!fs.is_array()) fail(pp + "/facts", "expected array");
    for (const auto& f : fs) e.fact_ids.push_back(f.get<std::string>());
    std::sort(e.fact_ids.begin(), e.fact_ids.end());
    e.annotation = get_str(plan[i], "annotation", pp);
    fam.plan.push_back(std::move(e));
  }
  return fam;
}

}  // namespace

Database load_database(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("JSON parse error: ") + e.what());
  }
  Database db;
  const json& meta = get(j, "metadata", "");
  if (!meta.is_object()) fail("/metadata", "expected object");
  for (auto it = meta.begin(); it != meta.end(); ++it)
    db.metadata[it.key()] = it.value().get<std::string>();

  const json& anns = get(j, "annotations", "");
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const std::string p = "/annotations/" + std::to_string(i);
    Annotation a;
    a.id = get_str(anns[i], "id", p);
    a.where = get_str(anns[i], "where", p);
    a.description = get_str(anns[i], "description", p);
    db.annotations.push_back(std::move(a));
  }

  const json& facts = get(j, "facts", "");
  if (!facts.is_array()) fail("/facts", "expected array");
  for (std::size_t i = 0; i < facts.size(); ++i) {
    GeometricFact f = parse_fact(facts[i], "/facts/" + std::to_string(i));
    if (db.facts.count(f.id)) fail("/facts", "duplicate fact id " + f.id);
    db.facts[f.id] = std::move(f);
  }

  const json& systems = get(j, "fm_systems", "");
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const std::string p = "/fm_systems/" + std::to_string(i);
    FmSystemRecord s;
    s.id = get_str(systems[i], "id", p);
    s.nvars = std::size_t(get_int(systems[i], "vars", p));
    const json& cs = get(systems[i], "constraints", p);
    if (!cs.is_array()) fail(p + "/constraints", "expected array");
    for (std::size_t k = 0; k < cs.size(); ++k)
      s.constraints.push_back(
          parse_constraint(cs[k], p + "/constraints/" + std::to_string(k)));
    s.expect = get_str(systems[i], "expect", p);
    if (s.expect != "infeasible" && s.expect != "feasible")
      fail(p, "expect must be infeasible or feasible");
    s.annotation = get_str(systems[i], "annotation", p);
    s.citation = get_citation(systems[i], p);
    db.fm_systems.push_back(std::move(s));
  }

  const json& ineqs = get(j, "inequalities", "");
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    const std::string p = "/inequalities/" + std::to_string(i);
    InequalityRecord q;
    q.id = get_str(ineqs[i], "id", p);
    q.family = get_str(ineqs[i], "family", p);
    for (const auto& v : get(ineqs[i], "lhs", p))
      q.lhs.push_back(rat_of(v, p + "/lhs"));
    q.op = parse_cmp(get_str(ineqs[i], "op", p));
    for (const auto& v : get(ineqs[i], "rhs", p))
      q.rhs.push_back(rat_of(v, p + "/rhs"));
    q.citation = get_citation(ineqs[i], p);
    db.inequalities.push_back(std::move(q));
  }

  const json& fams = get(j, "families", "");
  if (!fams.is_array()) fail("/families", "expected array");
  for (std::size_t i = 0; i < fams.size(); ++i)
    db.families.push_back(
        parse_family(fams[i], "/families/" + std::to_string(i)));

  // Reference resolution.
  for (const auto& fam : db.families) {
    const std::string p = "/families/" + fam.rec.id;
    if (!fam.basket_annotation.empty() &&
        !db.annotation(fam.basket_annotation))
      fail(p, "dangling annotation " + fam.basket_annotation);
    for (const auto& e : fam.plan) {
      for (const auto& fid : e.fact_ids)
        if (!db.facts.count(fid)) fail(p, "dangling fact reference " + fid);
      if (!e.annotation.empty() && !db.annotation(e.annotation))
        fail(p, "dangling annotation " + e.annotation);
      if (e.templ == "fm") {
        if (!e.params.count("system"))
          fail(p, "fm entry needs a system param");
        db.fm_system(e.params.at("system"));
      }
      if (e.templ == "ineq") {
        if (!e.params.count("ineq")) fail(p, "ineq entry needs an ineq param");
        db.inequality(e.params.at("ineq"));
      }
    }
  }
  for (const auto& s : db.fm_systems)
    if (!s.annotation.empty() && !db.annotation(s.annotation))
      fail("/fm_systems/" + s.id, "dangling annotation " + s.annotation);
  return db;
}

Database load_database_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open dataset " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_database(ss.str());
}

namespace {

json rat_json(const Rat& r) { return r.str(); }

json type_json(const QuotientType& t) {
  return json::array({t.r, 1, t.a, t.r - t.a});
}

json citation_json(json& j, const Citation& c) {
  j["where"] = c.where;
  j["quote"] = c.quote;
  return j;
}

}  // namespace

std::string serialize_database(const Database& db) {
  json j;
  json meta = json::object();
  for (const auto& [k, v] : db.metadata) meta[k] = v;
  j["metadata"] = meta;
  j["annotations"] = json::array();
  for (const auto& a : db.annotations)
    j["annotations"].push_back(
        {{"description", a.description}, {"id", a.id}, {"where", a.where}});
  j["facts"] = json::array();
  for (const auto& [id, f] : db.facts) {
    json fj = {{"id", f.id},
               {"kind", f.kind},
               {"subject", f.subject},
               {"bound", f.bound ? json(f.bound->str()) : json(nullptr)}};
    citation_json(fj, f.citation);
    j["facts"].push_back(fj);
  }
  j["fm_systems"] = json::array();
  for (const auto& s : db.fm_systems) {
    json cs = json::array();
    for (const auto& c : s.constraints) {
      json coeffs = json::array();
      for (const auto& v : c.coeffs) coeffs.push_back(rat_json(v));
      cs.push_back(
          {{"b", rat_json(c.b)}, {"coeffs", coeffs}, {"op", cmp_str(c.op)}});
    }
    json sj = {{"annotation", s.annotation},
               {"constraints", cs},
               {"expect", s.expect},
               {"id", s.id},
               {"vars", std::int64_t(s.nvars)}};
    citation_json(sj, s.citation);
    j["fm_systems"].push_back(sj);
  }
  j["inequalities"] = json::array();
  for (const auto& q : db.inequalities) {
    json lhs = json::array(), rhs = json::array();
    for (const auto& v : q.lhs) lhs.push_back(rat_json(v));
    for (const auto& v : q.rhs) rhs.push_back(rat_json(v));
    json qj = {{"family", q.family},
               {"id", q.id},
               {"lhs", lhs},
               {"op", cmp_str(q.op)},
               {"rhs", rhs}};
    citation_json(qj, q.citation);
    j["inequalities"].push_back(qj);
  }
  j["families"] = json::array();
  for (const auto& fam : db.families) {
    json fj;
    fj["id"] = fam.rec.id;
    fj["kind"] = fam.rec.kind;
    json coords = json::array();
    for (const auto& c : fam.rec.space.coords)
      coords.push_back(json::array({c.name, c.weight}));
    fj["coords"] = coords;
    fj["degrees"] = fam.rec.degrees;
    fj["a3"] = rat_json(fam.rec.stored_a3);
    json basket = json::array();
    for (const auto& e : fam.printed_basket)
      basket.push_back({{"count", e.count},
                        {"plus", e.plus},
                        {"type", type_json(e.type)}});
    fj["basket"] = basket;
    fj["basket_annotation"] = fam.basket_annotation;
    json iso;
    iso["off_hx"] = fam.isolating.printed_off_hx
                        ? json(*fam.isolating.printed_off_hx)
                        : json(nullptr);
    iso["on_hx"] = fam.isolating.printed_on_hx
                       ? json(*fam.isolating.printed_on_hx)
                       : json(nullptr);
    iso["pi"] = fam.isolating.pi;
    iso["source_off"] = fam.isolating.source_off_hx;
    iso["source_on"] = fam.isolating.source_on_hx;
    fj["isolating"] = iso;
    if (fam.qi) {
      json qj;
      qj["point"] = type_json(fam.qi->point);
      qj["xi0"] = fam.qi->xi0;
      qj["xi1"] = fam.qi->xi1;
      qj["xi"] = fam.qi->xi;
      qj["zeta"] = fam.qi->zeta;
      qj["n_g"] = fam.qi->n_g;
      qj["exc_weights"] = fam.qi->exc_weights;
      qj["c_poly"] = fam.qi->c_poly;
      qj["d_theta"] = fam.qi->d_theta;
      qj["d_xi"] = fam.qi->d_xi;
      fj["qi"] = qj;
    } else {
      fj["qi"] = nullptr;
    }
    json plan = json::array();
    for (const auto& e : fam.plan) {
      json params = json::object();
      for (const auto& [k, v] : e.params) params[k] = v;
      plan.push_back({{"annotation", e.annotation},
                      {"facts", e.fact_ids},
                      {"locus", e.locus},
                      {"params", params},
                      {"template", e.templ}});
    }
    fj["plan"] = plan;
    j["families"].push_back(fj);
  }
  return j.dump(2) + "\n";
}

CheckResult check_inequality(const InequalityRecord& q) {
  CheckResult r;
  r.name = "ineq/" + q.id;
  Rat lhs(1), rhs(1);
  for (const auto& v : q.lhs) lhs *= v;
  for (const auto& v : q.rhs) rhs *= v;
  r.set("lhs", lhs);
  r.set("rhs", rhs);
  bool ok = false;
  switch (q.op) {
    case CmpOp::LE: ok = lhs <= rhs; break;
    case CmpOp::LT: ok = lhs < rhs; break;
    case CmpOp::GE: ok = lhs >= rhs; break;
    case CmpOp::GT: ok = lhs > rhs; break;
    case CmpOp::EQ: ok = lhs == rhs; break;
  }
  r.tight = (lhs == rhs);
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

std::string default_data_path() {
  if (const char* env = std::getenv("LCT_CERT_DATA")) return env;
#ifdef LCT_DEFAULT_DATA
  return LCT_DEFAULT_DATA;
#else
  return "data/families.json";
#endif
}

}  // namespace lct

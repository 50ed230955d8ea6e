#include "polysmooth/certjson.hpp"

#include "polysmooth/errors.hpp"
#include "polysmooth/parse.hpp"

namespace polysmooth {

namespace {

const char* kBadDoc = "malformed certificate document";

std::string int_str(const Int& v) { return v.get_str(); }

Int int_from(const OrderedJson& j) {
  if (!j.is_string()) throw Error(kBadDoc);
  return Int(j.get<std::string>());
}

IntPoly intpoly_from(const OrderedJson& j) {
  RatPoly p = parse_poly(j.get<std::string>());
  if (!p.is_integral()) throw Error(kBadDoc);
  return p.num();
}

OrderedJson factor_to_json(const FactorExpr& fe) {
  OrderedJson j;
  switch (fe.kind) {
    case FactorExpr::Kind::Explicit:
      j["kind"] = "explicit";
      j["poly"] = fe.poly.str();
      break;
    case FactorExpr::Kind::CycloOfMonomial:
      j["kind"] = "cyclo_of_monomial";
      j["e"] = fe.e;
      j["coeff"] = rat_to_string(fe.coeff);
      j["power"] = fe.power;
      break;
    case FactorExpr::Kind::Shifted:
      j["kind"] = "shifted";
      j["base"] = fe.base.str();
      j["a"] = int_str(fe.shift_a);
      j["z"] = int_str(fe.shift_z);
      break;
  }
  return j;
}

FactorExpr factor_from_json(const OrderedJson& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit")
    return FactorExpr::make_explicit(parse_poly(j.at("poly").get<std::string>()));
  if (kind == "cyclo_of_monomial")
    return FactorExpr::make_cyclo(j.at("e").get<unsigned>(),
                                  rat_from_string(j.at("coeff").get<std::string>()),
                                  j.at("power").get<unsigned long>());
  if (kind == "shifted")
    return FactorExpr::make_shifted(intpoly_from(j.at("base")), int_from(j.at("a")),
                                    int_from(j.at("z")));
  throw Error(kBadDoc);
}

}  // namespace

std::string rat_to_string(const Rat& r) {
  Rat c(r);
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(kBadDoc);
  r.canonicalize();
  return r;
}

OrderedJson certificate_to_json(const Certificate& c,
                                const std::optional<VerifyReport>& verified) {
  OrderedJson doc;
  doc["schema"] = kCertSchemaVersion;
  doc["f"] = c.f.str();
  doc["g"] = c.g.str();
  doc["scalar"] = rat_to_string(c.scalar);
  doc["method"] = c.method;
  doc["polysmoothness"] = rat_to_string(c.polysmoothness);
  doc["notes"] = c.notes;
  doc["factors"] = OrderedJson::array();
  for (const auto& fe : c.factors) doc["factors"].push_back(factor_to_json(fe));
  if (c.seed) {
    OrderedJson s;
    s["p"] = int_str(c.seed->p);
    s["h"] = c.seed->h;
    s["m"] = int_str(c.seed->m);
    s["n"] = int_str(c.seed->n);
    s["k"] = int_str(c.seed->k);
    s["A"] = int_str(c.seed->A);
    s["B"] = int_str(c.seed->B);
    s["z"] = int_str(c.seed->z);
    doc["seed"] = std::move(s);
  }
  if (c.partition) {
    OrderedJson p;
    p["y"] = c.partition->y;
    p["k"] = c.partition->k;
    p["sets"] = c.partition->sets;
    p["gamma"] = OrderedJson::array();
    for (const auto& v : c.partition->gamma) p["gamma"].push_back(int_str(v));
    p["Gamma_j"] = OrderedJson::array();
    for (const auto& v : c.partition->Gamma_j) p["Gamma_j"].push_back(int_str(v));
    p["Gamma"] = int_str(c.partition->Gamma);
    p["inequality_22_ok"] = c.partition->inequality_22_ok;
    doc["partition"] = std::move(p);
  }
  if (verified) {
    OrderedJson v;
    v["mode"] = verified->mode == VerifyMode::Symbolic ? "symbolic" : "probabilistic";
    v["pass"] = verified->pass;
    v["conclusive"] = verified->conclusive;
    v["detail"] = verified->detail;
    v["recomputed_ratio"] = rat_to_string(verified->recomputed_ratio);
    v["ratio_matches"] = verified->ratio_matches;
    doc["verified"] = std::move(v);
  }
  return doc;
}

Certificate certificate_from_json(const OrderedJson& doc) {
  if (!doc.is_object() || doc.at("schema").get<int>() != kCertSchemaVersion)
    throw Error("unsupported certificate schema version");
  Certificate c;
  c.f = intpoly_from(doc.at("f"));
  c.g = parse_poly(doc.at("g").get<std::string>());
  c.scalar = rat_from_string(doc.at("scalar").get<std::string>());
  c.method = doc.at("method").get<std::string>();
  c.polysmoothness = rat_from_string(doc.at("polysmoothness").get<std::string>());
  c.notes = doc.value("notes", std::string());
  for (const auto& j : doc.at("factors")) c.factors.push_back(factor_from_json(j));
  if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    QuadraticSeed seed;
    seed.p = int_from(s.at("p"));
    seed.h = s.at("h").get<unsigned>();
    seed.m = int_from(s.at("m"));
    seed.n = int_from(s.at("n"));
    seed.k = int_from(s.at("k"));
    seed.A = int_from(s.at("A"));
    seed.B = int_from(s.at("B"));
    seed.z = int_from(s.at("z"));
    c.seed = seed;
  }
  if (doc.contains("partition")) {
    const auto& p = doc.at("partition");
    PrimePartition part;
    part.y = p.at("y").get<std::uint64_t>();
    part.k = p.at("k").get<std::uint64_t>();
    part.sets = p.at("sets").get<std::vector<std::vector<std::uint64_t>>>();
    for (const auto& v : p.at("gamma")) part.gamma.push_back(int_from(v));
    for (const auto& v : p.at("Gamma_j")) part.Gamma_j.push_back(int_from(v));
    part.Gamma = int_from(p.at("Gamma"));
    part.inequality_22_ok = p.at("inequality_22_ok").get<bool>();
    c.partition = part;
  }
  return c;
}

std::optional<VerifyReport> verify_report_from_json(const OrderedJson& doc) {
  if (!doc.contains("verified")) return std::nullopt;
  const auto& v = doc.at("verified");
  VerifyReport r;
  r.mode = v.at("mode").get<std::string>() == "symbolic" ? VerifyMode::Symbolic
                                                         : VerifyMode::Probabilistic;
  r.pass = v.at("pass").get<bool>();
  r.conclusive = v.at("conclusive").get<bool>();
  r.detail = v.at("detail").get<std::string>();
  r.recomputed_ratio = rat_from_string(v.at("recomputed_ratio").get<std::string>());
  r.ratio_matches = v.at("ratio_matches").get<bool>();
  return r;
}

std::string certificate_to_string(const Certificate& c,
                                  const std::optional<VerifyReport>& verified) {
  return certificate_to_json(c, verified).dump(2) + "\n";
}

Certificate certificate_from_string(const std::string& text) {
  OrderedJson doc = OrderedJson::parse(text, nullptr, true);
  return certificate_from_json(doc);
}

}  // namespace polysmooth

#include "hermicode/export.hpp"

#include <sstream>

namespace hermicode {

using nlohmann::json;

namespace {

json point_json(const CurvePoint& p) { return json::array({p.x1.enc, p.x2.enc, p.x3.enc}); }

json point_list(const std::vector<CurvePoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

void csv_points(std::ostringstream& os, const char* set, const std::vector<CurvePoint>& pts) {
  for (const auto& p : pts) os << set << ',' << p.x1.enc << ',' << p.x2.enc << ',' << p.x3.enc << '\n';
}

}  // namespace

json field_header(const Field& field) {
  return json{{"q", field.q()}, {"p", field.p()}, {"k_ext", field.k()},
              {"irreducible", field.irreducible()}, {"omega", field.omega().enc}};
}

json code_to_json(const LinearCode& code) {
  json doc = field_header(code.field());
  doc["m"] = code.m();
  doc["n"] = code.n();
  doc["k"] = code.k();
  doc["base_point"] = json::array({code.orbit_spec().u.enc, code.orbit_spec().v.enc});
  doc["tau"] = code.orbit_spec().tau.enc;
  json rows = json::array();
  for (int r = 0; r < code.k(); ++r) {
    json row = json::array();
    for (Elem e : code.generator().row(r)) row.push_back(e.enc);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

std::string code_to_csv(const LinearCode& code) {
  std::ostringstream os;
  for (int r = 0; r < code.k(); ++r) {
    const auto row = code.generator().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c].enc;
    os << '\n';
  }
  return os.str();
}

json enumerator_to_json(const LinearCode& code, const WeightEnumerator& we, Method method, double elapsed_ms) {
  json doc = field_header(code.field());
  doc["m"] = code.m();
  doc["n"] = code.n();
  doc["k"] = code.k();
  json counts = json::object();
  for (int w = 0; w <= we.n(); ++w) {
    if (we.count(w) != 0) counts[std::to_string(w)] = we.count(w);
  }
  doc["counts"] = std::move(counts);
  doc["method"] = to_string(method);
  doc["elapsed_ms"] = elapsed_ms;
  return doc;
}

std::string enumerator_to_csv(const WeightEnumerator& we) {
  std::ostringstream os;
  os << "weight,count\n";
  for (int w = 0; w <= we.n(); ++w) {
    if (we.count(w) != 0) os << w << ',' << we.count(w) << '\n';
  }
  return os.str();
}

json points_to_json(const HermitianCurve& curve, const OrbitSpec& spec) {
  json doc = field_header(curve.field());
  doc["genus"] = curve.genus();
  doc["points"] = point_list(curve.points());
  doc["chord"] = point_list(curve.chord_points());
  doc["base_point"] = json::array({spec.u.enc, spec.v.enc});
  doc["tau"] = spec.tau.enc;
  doc["orbit"] = point_list(curve.orbit(spec));
  return doc;
}

std::string points_to_csv(const HermitianCurve& curve, const OrbitSpec& spec) {
  std::ostringstream os;
  os << "set,x1,x2,x3\n";
  csv_points(os, "curve", curve.points());
  csv_points(os, "chord", curve.chord_points());
  csv_points(os, "orbit", curve.orbit(spec));
  return os.str();
}

json reports_to_json(const std::vector<ClaimReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

json canonical(json doc) {
  if (doc.is_object()) {
    doc.erase("elapsed_ms");
    for (auto& [key, value] : doc.items()) value = canonical(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) value = canonical(value);
  }
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hermicode

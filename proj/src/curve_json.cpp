#include "unitarea/curve_json.hpp"

#include <json.hpp>

#include "unitarea/error.hpp"

namespace unitarea {

namespace {

using Json = nlohmann::ordered_json;

Json form_json(const LinearForm& l) { return Json::array({to_string(l.a), to_string(l.b), to_string(l.c)}); }

Json line_json(const Line& l) { return Json::array({to_string(l.a()), to_string(l.b()), to_string(l.c())}); }

Rational rational_field(const Json& v) {
  Rational out;
  if (v.is_string() && try_parse_rational(v.get<std::string>(), out)) return out;
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
  throw Error(Errc::Parse, "expected a \"num/den\" string, got " + v.dump());
}

}  // namespace

std::string curve_to_json(const CurveCase& c) {
  Json doc;
  doc["case"] = to_string(c.tag);
  Json coeffs = Json::array();
  Json asym = Json::array();
  if (c.curve) {
    for (const auto& [i, j, v] : c.curve->terms()) coeffs.push_back(Json::array({i, j, to_string(v)}));
    try {
      for (const Line& l : asymptotes(*c.curve)) asym.push_back(line_json(l));
    } catch (const Error&) {
      asym = nullptr;
    }
  }
  doc["coefficients"] = std::move(coeffs);
  if (c.bundle) {
    const LinearFormBundle& b = *c.bundle;
    Json bundle;
    bundle["L1"] = form_json(b.L1);
    bundle["L2"] = form_json(b.L2);
    bundle["L3"] = form_json(b.L3);
    bundle["L4"] = form_json(b.L4);
    bundle["L5"] = form_json(b.L5);
    bundle["L6"] = form_json(b.L6);
    bundle["C"] = to_string(b.C);
    bundle["D"] = to_string(b.D);
    bundle["E"] = to_string(b.E);
    bundle["F"] = to_string(b.F);
    bundle["s"] = b.s ? Json(to_string(*b.s)) : Json(nullptr);
    doc["bundle"] = std::move(bundle);
  } else {
    doc["bundle"] = nullptr;
  }
  doc["asymptotes"] = std::move(asym);
  return doc.dump(2) + "\n";
}

BivariateCubic curve_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
  const Json* coeffs = &doc;
  if (doc.is_object()) {
    if (!doc.contains("coefficients")) throw Error(Errc::Parse, "missing \"coefficients\"");
    coeffs = &doc["coefficients"];
  }
  if (!coeffs->is_array()) throw Error(Errc::Parse, "\"coefficients\" must be an array");
  std::vector<std::tuple<int, int, Rational>> terms;
  for (const Json& t : *coeffs) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      throw Error(Errc::Parse, "coefficient entries are [i, j, \"num/den\"], got " + t.dump());
    }
    terms.emplace_back(t[0].get<int>(), t[1].get<int>(), rational_field(t[2]));
  }
  try {
    return BivariateCubic::from_terms(terms);
  } catch (const Error& e) {
    throw Error(Errc::Parse, e.what());
  }
}

}  // namespace unitarea

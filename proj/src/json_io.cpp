#include "degplus/json_io.hpp"

#include <array>

#include "degplus/error.hpp"

namespace degplus {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

const char* const kBoundFields[] = {"n_up",          "n_down",        "lower_angle_power", "upper_structural",
                                    "upper_turan",   "upper_estim_M", "upper_estim_L",     "upper_zaimi",
                                    "exact_closed_form"};

std::array<BoundEntry*, 9> entries(BoundsReport& r) {
  return {&r.n_up,        &r.n_down,        &r.lower_angle_power, &r.upper_structural, &r.upper_turan,
          &r.upper_estim_M, &r.upper_estim_L, &r.upper_zaimi,       &r.exact_closed_form};
}

PositivityClass class_from(const std::string& s) {
  for (auto c : {PositivityClass::HasPositiveRealRoot, PositivityClass::NonNegCoefficients,
                 PositivityClass::PositiveOnPositiveAxis}) {
    if (to_string(c) == s) return c;
  }
  throw Error(ErrorCode::ParseError, "unknown positivity class " + s);
}

}  // namespace

Json to_json(const Polynomial& p) { return rationals({p.coeffs().begin(), p.coeffs().end()}); }

Polynomial polynomial_from_json(const Json& j) { return Polynomial(rationals_from(j)); }

Json to_json(const DegPlusResult& r) {
  Json out;
  if (const auto* inf = std::get_if<InfiniteDegPlus>(&r)) {
    out["deg_plus"] = "infinite";
    out["positive_root_interval"] = rationals({inf->root_interval.first, inf->root_interval.second});
    return out;
  }
  const auto& c = std::get<DegPlusCertificate>(r);
  out["deg_plus"] = c.deg_plus;
  out["D"] = c.D;
  out["witness"] = to_json(c.witness);
  out["product"] = to_json(c.product);
  out["farkas_below"] = c.farkas_below ? rationals(*c.farkas_below) : Json(nullptr);
  out["stripped_x_power"] = c.stripped_x_power;
  out["search_start"] = c.search_start;
  return out;
}

DegPlusResult deg_plus_from_json(const Json& j) {
  if (j.at("deg_plus").is_string()) {
    const auto v = rationals_from(j.at("positive_root_interval"));
    return InfiniteDegPlus{{v.at(0), v.at(1)}};
  }
  DegPlusCertificate c;
  c.deg_plus = j.at("deg_plus").get<std::size_t>();
  c.D = j.at("D").get<std::size_t>();
  c.witness = polynomial_from_json(j.at("witness"));
  c.product = polynomial_from_json(j.at("product"));
  if (!j.at("farkas_below").is_null()) c.farkas_below = rationals_from(j.at("farkas_below"));
  c.stripped_x_power = j.at("stripped_x_power").get<std::size_t>();
  c.search_start = j.at("search_start").get<std::size_t>();
  return c;
}

Json to_json(const BoundsReport& r) {
  Json out;
  BoundsReport copy = r;
  const auto es = entries(copy);
  Json provenance = Json::object();
  Json conservative = Json::array();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string name = kBoundFields[i];
    const BoundEntry& e = *es[i];
    Json value = e.value ? Json(*e.value) : Json(nullptr);
    if (name == "upper_zaimi") {
      out[name] = {{"value", value}, {"irreducibility_verified", r.zaimi_irreducibility_verified}};
    } else {
      out[name] = value;
    }
    if (!e.value) out[name + "_reason"] = e.reason;
    provenance[name] = e.provenance;
    if (e.conservative) conservative.push_back(name);
  }
  out["stripped_x_power"] = r.stripped_x_power;
  out["degree"] = r.degree;
  out["class"] = std::string(to_string(r.positivity));
  out["provenance"] = provenance;
  out["conservative"] = conservative;
  return out;
}

BoundsReport bounds_from_json(const Json& j) {
  BoundsReport r;
  const auto es = entries(r);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string name = kBoundFields[i];
    BoundEntry& e = *es[i];
    const Json& v = name == "upper_zaimi" ? j.at(name).at("value") : j.at(name);
    if (!v.is_null()) e.value = v.get<std::size_t>();
    if (j.contains(name + "_reason")) e.reason = j.at(name + "_reason").get<std::string>();
    e.provenance = j.at("provenance").at(name).get<std::string>();
    for (const auto& c : j.at("conservative")) {
      if (c.get<std::string>() == name) e.conservative = true;
    }
  }
  r.zaimi_irreducibility_verified = j.at("upper_zaimi").at("irreducibility_verified").get<bool>();
  r.stripped_x_power = j.at("stripped_x_power").get<std::size_t>();
  r.degree = j.at("degree").get<std::size_t>();
  r.positivity = class_from(j.at("class").get<std::string>());
  return r;
}

Json to_json(const ConeGenerators& g) {
  Json rays = Json::array();
  for (const auto& r : g.rays) {
    Json v = Json::array();
    for (const auto& c : r.coeffs()) v.push_back(c.get_num().get_str());
    rays.push_back(v);
  }
  return {{"n", g.n}, {"rays", rays}};
}

Json to_json(const TruncationCheck& t) {
  return {{"D", t.D}, {"product", to_json(t.product)}, {"nonneg", t.nonneg}};
}

Json to_json(const StarReport& r) {
  Json factors = Json::array();
  Json products = Json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  for (const auto& f : r.truncation_products) products.push_back(to_json(f));
  return {{"factors", factors},
          {"D", r.total_D},
          {"per_factor_D", r.per_factor_D},
          {"truncation_products", products},
          {"additivity_holds", r.additivity_holds},
          {"verdict", r.verdict}};
}

Json scan_summary(const ScanResult& r, bool star) {
  Json out;
  out["grid"] = {{"a_min", to_string(r.grid.a_min)},
                 {"a_max", to_string(r.grid.a_max)},
                 {"b_min", to_string(r.grid.b_min)},
                 {"b_max", to_string(r.grid.b_max)},
                 {"denominator_bound", r.grid.denominator_bound},
                 {"k_max", r.grid.k_max}};
  out["rows"] = r.rows.size();
  std::size_t conservative = 0;
  for (const auto& row : r.rows) conservative += row.bound_conservative ? 1 : 0;
  out["conservative_bounds"] = conservative;
  Json listed = Json::array();
  for (const auto& v : r.violations) listed.push_back(csv_row(v, star));
  if (star) {
    out["not_established"] = r.violations.size();
    out["not_established_rows"] = listed;
  } else {
    out["violations"] = r.violations.size();
    out["violation_rows"] = listed;
  }
  return out;
}

}  // namespace degplus

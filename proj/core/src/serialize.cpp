#include "fricke/serialize.hpp"

#include <stdexcept>

namespace fricke {

using nlohmann::json;

void to_json(json& j, const Poly& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) {
    const auto e = t.mono.exponents();
    terms.push_back({{"c", t.coeff.get_str()}, {"e", {e[0], e[1], e[2]}}});
  }
  j = json{{"vars", {"x", "y", "z"}}, {"terms", std::move(terms)}};
}

void from_json(const json& j, Poly& p) {
  if (j.at("vars") != json{"x", "y", "z"}) throw std::invalid_argument("polynomial JSON: vars must be [x,y,z]");
  std::vector<Term> terms;
  for (const json& t : j.at("terms")) {
    const auto e = t.at("e").get<std::array<std::uint32_t, 3>>();
    Integer c;
    if (c.set_str(t.at("c").get<std::string>(), 10) != 0)
      throw std::invalid_argument("polynomial JSON: bad coefficient " + t.at("c").dump());
    terms.push_back({Monomial(e[0], e[1], e[2]), std::move(c)});
  }
  p = Poly::from_terms(std::move(terms));
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name}, {"pass", c.pass}};
  if (c.witness) j["witness"] = *c.witness;
}

void from_json(const json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  if (auto it = j.find("witness"); it != j.end() && !it->is_null()) {
    c.witness = it->get<std::string>();
  } else {
    c.witness.reset();
  }
}

void to_json(json& j, const Certificate& c) {
  j = json{{"subject", c.subject()}, {"checks", c.checks()}, {"pass", c.pass()}};
  if (!c.outputs().empty()) j["outputs"] = c.outputs();
}

void from_json(const json& j, Certificate& c) {
  c = Certificate(j.value("subject", std::string{}));
  for (const json& check : j.at("checks")) {
    const Check parsed = check.get<Check>();
    c.add(parsed.name, parsed.pass, parsed.witness);
  }
  if (auto it = j.find("outputs"); it != j.end())
    for (const auto& [key, value] : it->items()) c.set_output(key, value.get<std::int64_t>());
  if (j.contains("pass") && j.at("pass").get<bool>() != c.pass())
    throw std::invalid_argument("certificate JSON: 'pass' disagrees with its checks");
}

void to_json(json& j, const GeneratorSet& g) {
  j = json{{"provenance", family_name(g.provenance)}, {"generators", g.generators}};
}

void from_json(const json& j, GeneratorSet& g) {
  g.provenance = parse_family(j.at("provenance").get<std::string>());
  g.generators = j.at("generators").get<std::vector<Poly>>();
}

void to_json(json& j, const PretzelWords& w) {
  j = json{{"m", w.m}, {"n", w.n}, {"u", w.u.to_string()}, {"s", w.s.to_string()}, {"r", w.r.to_string()}};
}

void from_json(const json& j, PretzelWords& w) {
  w.m = j.at("m").get<std::int64_t>();
  w.n = j.at("n").get<std::int64_t>();
  w.u = parse_word(j.at("u").get<std::string>());
  w.s = parse_word(j.at("s").get<std::string>());
  w.r = parse_word(j.at("r").get<std::string>());
}

void to_json(json& j, const ComponentReport& r) {
  j = json{{"n", r.n},
           {"component_count", r.count},
           {"components", r.components},
           {"certificate", r.certificate}};
}

void from_json(const json& j, ComponentReport& r) {
  r.n = j.at("n").get<std::int64_t>();
  r.count = j.at("component_count").get<int>();
  r.components = j.at("components").get<std::vector<std::string>>();
  r.certificate = j.at("certificate").get<Certificate>();
}

}  // namespace fricke

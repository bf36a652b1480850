#pragma once

// JSON forms of the public data types (nlohmann::json ADL hooks).
//
//   Poly          {"vars":["x","y","z"],"terms":[{"c":"-3","e":[0,0,1]},...]}
//   Certificate   {"subject":..., "checks":[{"name":..., "pass":bool,
//                  "witness":"..."}], "pass":bool, "outputs":{...}}
//   GeneratorSet  {"provenance":"thm1", "generators":[Poly,...]}
//   PretzelWords  {"m":..,"n":..,"u":"..","s":"..","r":".."}
//
// Terms are written in canonical (graded lex, descending) order.

#include "fricke/certificate.hpp"
#include "fricke/charring.hpp"
#include "fricke/poly.hpp"
#include "fricke/pretzel.hpp"
#include "fricke/variety.hpp"

#include <nlohmann/json.hpp>

namespace fricke {

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

void to_json(nlohmann::json& j, const GeneratorSet& g);
void from_json(const nlohmann::json& j, GeneratorSet& g);

void to_json(nlohmann::json& j, const PretzelWords& w);
void from_json(const nlohmann::json& j, PretzelWords& w);

void to_json(nlohmann::json& j, const ComponentReport& r);
void from_json(const nlohmann::json& j, ComponentReport& r);

}  // namespace fricke

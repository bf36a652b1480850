#include "fricke/certificate.hpp"

#include "fricke/poly.hpp"

#include <algorithm>

namespace fricke {

void Certificate::add(std::string name, bool pass, std::optional<std::string> witness) {
  checks_.push_back({std::move(name), pass, std::move(witness)});
}

void Certificate::add_identity(std::string name, const Poly& lhs, const Poly& rhs) {
  const Poly diff = lhs - rhs;
  if (diff.is_zero()) {
    add(std::move(name), true);
  } else {
    add(std::move(name), false, diff.to_string());
  }
}

void Certificate::absorb(const Certificate& other, const std::string& prefix) {
  for (const Check& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
  for (const auto& [key, value] : other.outputs_) outputs_[prefix + key] = value;
}

std::optional<std::int64_t> Certificate::output(const std::string& key) const {
  auto it = outputs_.find(key);
  if (it == outputs_.end()) return std::nullopt;
  return it->second;
}

const Check* Certificate::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Certificate::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t Certificate::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

}  // namespace fricke

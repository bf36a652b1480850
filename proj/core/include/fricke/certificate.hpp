#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fricke {

class Poly;

struct Check {
  std::string name;
  bool pass = false;
  /// Polynomial or value text backing the verdict, e.g. a nonzero difference.
  std::optional<std::string> witness;

  friend bool operator==(const Check&, const Check&) = default;
};

/// A named list of boolean checks; passes iff every check does.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

  void add(std::string name, bool pass, std::optional<std::string> witness = std::nullopt);
  /// Records lhs == rhs; on failure the witness is lhs - rhs.
  void add_identity(std::string name, const Poly& lhs, const Poly& rhs);
  /// Appends every check of `other`, prefixing names with `prefix`.
  void absorb(const Certificate& other, const std::string& prefix = {});

  void set_output(const std::string& key, std::int64_t value) { outputs_[key] = value; }
  std::optional<std::int64_t> output(const std::string& key) const;
  const std::map<std::string, std::int64_t>& outputs() const { return outputs_; }

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;
  bool pass() const;
  std::size_t failures() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  std::map<std::string, std::int64_t> outputs_;
};

}  // namespace fricke

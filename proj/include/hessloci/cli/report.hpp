#pragma once

// Claim-by-claim certificates. Exact values only: integers stay integers when they
// fit in 64 bits, rationals serialize as {num, den}, nothing is a float except the
// optional wall-clock field.

#include "hessloci/field.hpp"

#include "json.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hessloci::cli {

using json = nlohmann::ordered_json;

inline json exact(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json exact(const Rational& r) {
  return json{{"num", exact(BigInt(numerator(r)))}, {"den", exact(BigInt(denominator(r)))}};
}

enum class Rule { exact, set, up_to_scalar };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::exact: return "exact";
    case Rule::set: return "set";
    case Rule::up_to_scalar: return "up-to-scalar";
  }
  return "?";
}

struct Claim {
  std::string id;
  std::string statement;
  Rule rule = Rule::exact;
  json expected;
  json computed;
  bool pass = false;
  std::string note;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json& inputs() { return inputs_; }
  json& facts() { return facts_; }
  const std::vector<Claim>& claims() const { return claims_; }
  void set_runtime_ms(double ms) { runtime_ms_ = ms; }

  /// pass iff expected == computed.
  Claim& expect(std::string id, std::string statement, json expected, json computed, std::string note = {}) {
    bool pass = expected == computed;
    claims_.push_back({std::move(id), std::move(statement), Rule::exact, std::move(expected), std::move(computed), pass,
                       std::move(note)});
    return claims_.back();
  }
  /// Arrays compared as sorted multisets.
  Claim& expect_set(std::string id, std::string statement, json expected, json computed) {
    auto sorted = [](json a) {
      std::sort(a.begin(), a.end());
      return a;
    };
    bool pass = sorted(expected) == sorted(computed);
    claims_.push_back({std::move(id), std::move(statement), Rule::set, std::move(expected), std::move(computed), pass, {}});
    return claims_.back();
  }
  /// Proportionality claims: `scalar` is null when the two sides are not proportional.
  Claim& expect_proportional(std::string id, std::string statement, json scalar) {
    bool pass = !scalar.is_null();
    claims_.push_back({std::move(id), std::move(statement), Rule::up_to_scalar, json{{"proportional", true}},
                       json{{"proportional", pass}, {"scalar", std::move(scalar)}}, pass, {}});
    return claims_.back();
  }

  bool all_pass() const {
    return std::all_of(claims_.begin(), claims_.end(), [](const Claim& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(claims_.begin(), claims_.end(), [](const Claim& c) { return !c.pass; }));
  }

  json to_json() const {
    json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    json cl = json::array();
    for (const auto& c : claims_) {
      json row{{"id", c.id}, {"statement", c.statement}, {"rule", to_string(c.rule)},
               {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
      if (!c.note.empty()) row["note"] = c.note;
      cl.push_back(std::move(row));
    }
    j["claims"] = std::move(cl);
    if (!facts_.is_null()) j["facts"] = facts_;
    j["pass"] = all_pass();
    if (runtime_ms_) j["runtime_ms"] = *runtime_ms_;
    return j;
  }

  std::string summary() const {
    std::ostringstream os;
    os << command_ << ": " << (claims_.size() - failures()) << "/" << claims_.size() << " claims pass\n";
    for (const auto& c : claims_) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.statement;
      if (!c.pass) os << "  expected " << c.expected.dump() << " computed " << c.computed.dump();
      os << "\n";
    }
    if (runtime_ms_) os << "  runtime " << static_cast<long long>(*runtime_ms_) << " ms\n";
    return os.str();
  }

 private:
  std::string command_;
  json inputs_ = json::object();
  json facts_;
  std::vector<Claim> claims_;
  std::optional<double> runtime_ms_;
};

}  // namespace hessloci::cli

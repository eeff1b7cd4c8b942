#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "caryb/pipeline.hpp"

namespace caryb {

using Json = nlohmann::ordered_json;

struct Witness {
  std::int64_t basis_index = -1;
  std::string basis_label;
  std::string lhs;
  std::string rhs;
};

// Outcome of one verified identity. Failures are data, not errors: the
// witness pins down a basis vector where the two sides differ, with both
// values spelled out.
struct CheckResult {
  std::string id;   // stable identifier, e.g. "hopf.antipode"
  std::string law;  // the equation that was checked
  bool passed = false;
  std::int64_t basis_checked = 0;
  std::optional<Witness> witness;
  std::string note;

  Json to_json() const;
};

class Report {
 public:
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void note(std::string n) { notes_.push_back(std::move(n)); }
  void merge(const Report& other);

  bool all_passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const CheckResult* find(const std::string& id) const;
  const std::string& subject() const { return subject_; }

  Json to_json() const;
  std::string text() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

// Verifies lhs = rhs on every basis vector of the common domain and wraps
// the outcome. The domain/codomain spaces are only used to label witnesses.
CheckResult check_equal_on_basis(std::string id, std::string law, const Pipeline& lhs,
                                 const Pipeline& rhs, const BasedSpace& domain,
                                 const BasedSpace& codomain, const Field& field);

}  // namespace caryb

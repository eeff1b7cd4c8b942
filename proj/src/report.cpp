#include "caryb/report.hpp"

namespace caryb {

Json CheckResult::to_json() const {
  Json j;
  j["id"] = id;
  j["law"] = law;
  j["status"] = passed ? "pass" : "fail";
  j["basis_checked"] = basis_checked;
  if (witness) {
    Json w;
    w["basis_index"] = witness->basis_index;
    w["basis"] = witness->basis_label;
    w["lhs"] = witness->lhs;
    w["rhs"] = witness->rhs;
    j["witness"] = std::move(w);
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

void Report::merge(const Report& other) {
  for (const CheckResult& c : other.checks_) checks_.push_back(c);
  for (const std::string& n : other.notes_) notes_.push_back(n);
}

bool Report::all_passed() const {
  for (const CheckResult& c : checks_)
    if (!c.passed) return false;
  return true;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const CheckResult& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

Json Report::to_json() const {
  Json j;
  j["subject"] = subject_;
  j["all_passed"] = all_passed();
  if (!notes_.empty()) j["notes"] = notes_;
  Json arr = Json::array();
  for (const CheckResult& c : checks_) arr.push_back(c.to_json());
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::text() const {
  std::string out = subject_ + "\n";
  for (const std::string& n : notes_) out += "  note: " + n + "\n";
  for (const CheckResult& c : checks_) {
    out += "  [" + std::string(c.passed ? "pass" : "FAIL") + "] " + c.id + ": " + c.law;
    if (c.basis_checked > 0) out += "  (" + std::to_string(c.basis_checked) + " basis vectors)";
    if (!c.note.empty()) out += "  [" + c.note + "]";
    out += "\n";
    if (c.witness)
      out += "         witness " + c.witness->basis_label + ": lhs = " + c.witness->lhs +
             ", rhs = " + c.witness->rhs + "\n";
  }
  return out;
}

CheckResult check_equal_on_basis(std::string id, std::string law, const Pipeline& lhs,
                                 const Pipeline& rhs, const BasedSpace& domain,
                                 const BasedSpace& codomain, const Field& field) {
  CheckResult r;
  r.id = std::move(id);
  r.law = std::move(law);
  r.basis_checked = domain.dim();
  auto mismatch = first_basis_mismatch(lhs, rhs, domain.dim(), field);
  r.passed = !mismatch.has_value();
  if (mismatch) {
    Witness w;
    w.basis_index = mismatch->index;
    w.basis_label = domain.label(mismatch->index);
    w.lhs = format_vec(mismatch->lhs, codomain);
    w.rhs = format_vec(mismatch->rhs, codomain);
    r.witness = std::move(w);
  }
  return r;
}

}  // namespace caryb

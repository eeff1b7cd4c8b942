#include "caryb/space.hpp"

#include <unordered_set>

namespace caryb {

BasedSpace::BasedSpace(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("a based space needs at least one basis label");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate basis label '" + l + "'");
  dim_ = static_cast<std::int64_t>(labels.size());
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

BasedSpace BasedSpace::unit() { return BasedSpace(std::vector<std::string>{"1"}); }

std::string BasedSpace::label(std::int64_t i) const {
  if (i < 0 || i >= dim_) throw Error("basis index " + std::to_string(i) + " out of range");
  if (labels_) return (*labels_)[static_cast<std::size_t>(i)];
  std::int64_t rd = right_->dim();
  return "(" + left_->label(i / rd) + "⊗" + right_->label(i % rd) + ")";
}

BasedSpace tensor(const BasedSpace& a, const BasedSpace& b) {
  BasedSpace t;
  t.dim_ = a.dim() * b.dim();
  t.left_ = std::make_shared<const BasedSpace>(a);
  t.right_ = std::make_shared<const BasedSpace>(b);
  return t;
}

BasedSpace tensor_power(const BasedSpace& a, int n) {
  if (n < 1) throw Error("tensor_power needs n >= 1");
  BasedSpace t = a;
  for (int i = 1; i < n; ++i) t = tensor(t, a);
  return t;
}

}  // namespace caryb

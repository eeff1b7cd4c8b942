#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "caryb/error.hpp"

namespace caryb {

// A free module with a fixed ordered basis. Tensor products are strict and
// row-major: the index of e_i ⊗ e_j in A ⊗ B is i*dim(B) + j (left factor
// varies slowest). Labels of tensor spaces are derived lazily from the
// factors so large product spaces stay cheap.
class BasedSpace {
 public:
  explicit BasedSpace(std::vector<std::string> labels);

  static BasedSpace unit();  // the coefficient line k, label "1"

  std::int64_t dim() const { return dim_; }
  std::string label(std::int64_t i) const;

  // Structural identity: same dimension (labels are annotations).
  bool operator==(const BasedSpace& o) const { return dim_ == o.dim_; }
  bool operator!=(const BasedSpace& o) const { return dim_ != o.dim_; }

  friend BasedSpace tensor(const BasedSpace& a, const BasedSpace& b);

 private:
  BasedSpace() = default;
  std::int64_t dim_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;  // leaf spaces only
  std::shared_ptr<const BasedSpace> left_, right_;          // tensor nodes
};

BasedSpace tensor(const BasedSpace& a, const BasedSpace& b);
BasedSpace tensor_power(const BasedSpace& a, int n);  // n >= 1

}  // namespace caryb

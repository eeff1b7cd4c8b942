#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "caryb/error.hpp"

namespace caryb {

// A finite group given by an explicit Cayley table. The table is fully
// validated at construction (associativity, identity, inverses), with a
// witness naming the first violation.
class GroupTable {
 public:
  GroupTable(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> mult);

  int order() const { return static_cast<int>(elements_.size()); }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const std::string& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const;

  static GroupTable trivial() { return cyclic(1); }
  static GroupTable cyclic(int n);
  static GroupTable dihedral(int n);   // order 2n, n >= 1
  static GroupTable symmetric(int n);  // 1 <= n <= 4

  // "Z<n>", "D<n>", "S<n>" (S limited to n <= 4).
  static GroupTable builtin(const std::string& name);

  // {"elements": ["e","a"], "mult": [[0,1],[1,0]]}; identity and inverses
  // are inferred and validated.
  static GroupTable from_json(const nlohmann::ordered_json& j, std::string name);
  nlohmann::ordered_json to_json() const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inverse_;
  int identity_ = -1;

  void validate();
};

}  // namespace caryb

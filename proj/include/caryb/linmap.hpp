#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "caryb/scalar.hpp"
#include "caryb/space.hpp"

namespace caryb {

// Sparse vector over a based space: index/value pairs sorted by index, no
// explicit zeros.
struct VecEntry {
  std::int64_t index;
  Scalar value;
};
using SparseVec = std::vector<VecEntry>;

SparseVec basis_vec(std::int64_t i, const Field& field);
// Sort by index, merge duplicates, drop zeros.
void normalize_vec(SparseVec& v);
bool vec_equal(const SparseVec& a, const SparseVec& b);
std::string format_vec(const SparseVec& v, const BasedSpace& space);

// A sparse exact linear map between based spaces. Entries are kept in
// canonical (col, row) order with no zeros and no duplicates, so equality is
// a direct structural comparison and column access is a binary search.
class LinMap {
 public:
  struct Entry {
    std::int64_t row;  // target index
    std::int64_t col;  // source index
    Scalar value;
  };

  LinMap(BasedSpace source, BasedSpace target, Field field, std::vector<Entry> entries);

  static LinMap identity(const BasedSpace& s, const Field& field);
  static LinMap zero(BasedSpace source, BasedSpace target, Field field);

  const BasedSpace& source() const { return source_; }
  const BasedSpace& target() const { return target_; }
  const Field& field() const { return field_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  std::span<const Entry> column(std::int64_t col) const;
  Scalar entry(std::int64_t row, std::int64_t col) const;  // zero if absent

  // Exact matrix-vector product; the result has no explicit zeros.
  SparseVec apply(const SparseVec& v) const;
  SparseVec apply_basis(std::int64_t i) const;

  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  // Same entries, reinterpreted between spaces of identical dimensions
  // (e.g. collapsing k⊗k to k).
  LinMap with_spaces(BasedSpace source, BasedSpace target) const;

 private:
  BasedSpace source_;
  BasedSpace target_;
  Field field_;
  std::vector<Entry> entries_;
};

// f ∘ g (apply g first); requires g.target.dim == f.source.dim.
LinMap compose(const LinMap& f, const LinMap& g);

// Kronecker product under row-major basis ordering.
LinMap tensor(const LinMap& f, const LinMap& g);

// τ: A⊗B → B⊗A, e_(i,j) ↦ e_(j,i).
LinMap transposition(const BasedSpace& a, const BasedSpace& b, const Field& field);

}  // namespace caryb

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "caryb/linmap.hpp"

namespace caryb {

// One tensor slot of a pipeline stage: a map, or an identity block of the
// given dimension. Maps are referenced, not owned; a Pipeline must not
// outlive the maps it points at.
struct TensorFactor {
  const LinMap* map = nullptr;
  std::int64_t dim = 0;  // identity dimension when map == nullptr

  std::int64_t source_dim() const { return map ? map->source().dim() : dim; }
  std::int64_t target_dim() const { return map ? map->target().dim() : dim; }
};

inline TensorFactor id_factor(std::int64_t dim) { return {nullptr, dim}; }
inline TensorFactor map_factor(const LinMap& m) { return {&m, 0}; }
TensorFactor map_factor(LinMap&&) = delete;  // factors reference, never own

// Reorders tensor factors: target slot j carries source factor perm[j].
// Applied per basis index by digit shuffling, so nothing is materialized.
struct FactorPerm {
  std::vector<std::int64_t> dims;  // source factor dimensions
  std::vector<int> perm;
};

// A stage is either a tensor product of factors or a factor permutation.
struct Stage {
  std::vector<TensorFactor> factors;
  std::optional<FactorPerm> perm;

  std::int64_t source_dim() const;
  std::int64_t target_dim() const;
};

// A composite map presented as stages applied first-to-last. This is the
// workhorse for large identity checks: both sides of an equation are applied
// to each basis vector through chained sparse applies, and composite
// matrices are never materialized.
class Pipeline {
 public:
  Pipeline& then(Stage s);
  Pipeline& then(const LinMap& m);
  Pipeline& then(LinMap&&) = delete;
  Pipeline& then_tensor(std::vector<TensorFactor> factors);
  Pipeline& then_perm(FactorPerm p);

  std::int64_t source_dim() const;
  std::int64_t target_dim() const;

  SparseVec apply(SparseVec v) const;
  SparseVec apply_basis(std::int64_t i, const Field& field) const;

  const std::vector<Stage>& stages() const { return stages_; }

 private:
  std::vector<Stage> stages_;
};

// Evaluates the pipeline column by column into a LinMap (parallel over
// columns, deterministic output).
LinMap materialize(const Pipeline& p, BasedSpace source, BasedSpace target, const Field& field);

// First basis vector where the two sides disagree, if any. Parallel with a
// deterministic (smallest-index) result.
struct BasisMismatch {
  std::int64_t index;
  SparseVec lhs, rhs;
};
std::optional<BasisMismatch> first_basis_mismatch(const Pipeline& lhs, const Pipeline& rhs,
                                                  std::int64_t dim, const Field& field);

}  // namespace caryb

#include "caryb/pipeline.hpp"

#include <atomic>
#include <mutex>

#include "caryb/parallel.hpp"

namespace caryb {

namespace {

void apply_factors(const std::vector<TensorFactor>& factors, const VecEntry& in, SparseVec& out,
                   std::vector<std::int64_t>& digits, SparseVec& cur, SparseVec& next) {
  const std::size_t k = factors.size();
  digits.resize(k);
  std::int64_t rem = in.index;
  for (std::size_t j = k; j-- > 0;) {
    const std::int64_t sd = factors[j].source_dim();
    digits[j] = rem % sd;
    rem /= sd;
  }
  cur.clear();
  cur.push_back({0, in.value});
  for (std::size_t j = 0; j < k && !cur.empty(); ++j) {
    const TensorFactor& f = factors[j];
    if (!f.map) {
      for (VecEntry& e : cur) e.index = e.index * f.dim + digits[j];
      continue;
    }
    const std::int64_t td = f.map->target().dim();
    auto col = f.map->column(digits[j]);
    next.clear();
    for (const VecEntry& e : cur) {
      const bool one = e.value.is_one();
      for (const LinMap::Entry& ce : col)
        next.push_back({e.index * td + ce.row, one ? ce.value : e.value * ce.value});
    }
    cur.swap(next);
  }
  out.insert(out.end(), cur.begin(), cur.end());
}

void apply_perm(const FactorPerm& p, const VecEntry& in, SparseVec& out, std::vector<std::int64_t>& digits) {
  const std::size_t k = p.dims.size();
  digits.resize(k);
  std::int64_t rem = in.index;
  for (std::size_t j = k; j-- > 0;) {
    digits[j] = rem % p.dims[j];
    rem /= p.dims[j];
  }
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const int src = p.perm[j];
    idx = idx * p.dims[static_cast<std::size_t>(src)] + digits[static_cast<std::size_t>(src)];
  }
  out.push_back({idx, in.value});
}

}  // namespace

std::int64_t Stage::source_dim() const {
  std::int64_t d = 1;
  if (perm) {
    for (std::int64_t x : perm->dims) d *= x;
    return d;
  }
  for (const TensorFactor& f : factors) d *= f.source_dim();
  return d;
}

std::int64_t Stage::target_dim() const {
  if (perm) return source_dim();
  std::int64_t d = 1;
  for (const TensorFactor& f : factors) d *= f.target_dim();
  return d;
}

Pipeline& Pipeline::then(Stage s) {
  if (!stages_.empty() && stages_.back().target_dim() != s.source_dim())
    throw DimensionError("pipeline stage mismatch", s.source_dim(), stages_.back().target_dim());
  if (s.perm) {
    if (s.perm->perm.size() != s.perm->dims.size()) throw Error("factor permutation size mismatch");
  } else if (s.factors.empty()) {
    throw Error("empty pipeline stage");
  }
  stages_.push_back(std::move(s));
  return *this;
}

Pipeline& Pipeline::then(const LinMap& m) { return then_tensor({map_factor(m)}); }

Pipeline& Pipeline::then_tensor(std::vector<TensorFactor> factors) {
  Stage s;
  s.factors = std::move(factors);
  return then(std::move(s));
}

Pipeline& Pipeline::then_perm(FactorPerm p) {
  Stage s;
  s.perm = std::move(p);
  return then(std::move(s));
}

std::int64_t Pipeline::source_dim() const {
  if (stages_.empty()) throw Error("empty pipeline");
  return stages_.front().source_dim();
}

std::int64_t Pipeline::target_dim() const {
  if (stages_.empty()) throw Error("empty pipeline");
  return stages_.back().target_dim();
}

SparseVec Pipeline::apply(SparseVec v) const {
  SparseVec out, cur, next;
  std::vector<std::int64_t> digits;
  for (const Stage& s : stages_) {
    out.clear();
    if (s.perm) {
      for (const VecEntry& e : v) apply_perm(*s.perm, e, out, digits);
    } else {
      for (const VecEntry& e : v) apply_factors(s.factors, e, out, digits, cur, next);
    }
    normalize_vec(out);
    v.swap(out);
  }
  return v;
}

SparseVec Pipeline::apply_basis(std::int64_t i, const Field& field) const {
  return apply(basis_vec(i, field));
}

LinMap materialize(const Pipeline& p, BasedSpace source, BasedSpace target, const Field& field) {
  const std::int64_t n = p.source_dim();
  if (source.dim() != n) throw DimensionError("materialize source", source.dim(), n);
  if (target.dim() != p.target_dim()) throw DimensionError("materialize target", target.dim(), p.target_dim());
  std::vector<SparseVec> cols(static_cast<std::size_t>(n));
  parallel_chunks(n, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t c = begin; c < end; ++c) cols[static_cast<std::size_t>(c)] = p.apply_basis(c, field);
  });
  std::vector<LinMap::Entry> entries;
  for (std::int64_t c = 0; c < n; ++c)
    for (VecEntry& ve : cols[static_cast<std::size_t>(c)])
      entries.push_back({ve.index, c, std::move(ve.value)});
  return LinMap(std::move(source), std::move(target), field, std::move(entries));
}

std::optional<BasisMismatch> first_basis_mismatch(const Pipeline& lhs, const Pipeline& rhs,
                                                  std::int64_t dim, const Field& field) {
  if (lhs.source_dim() != dim) throw DimensionError("mismatch check lhs", lhs.source_dim(), dim);
  if (rhs.source_dim() != dim) throw DimensionError("mismatch check rhs", rhs.source_dim(), dim);
  if (lhs.target_dim() != rhs.target_dim())
    throw DimensionError("mismatch check targets", lhs.target_dim(), rhs.target_dim());
  std::atomic<std::int64_t> best{dim};
  std::mutex mu;
  std::optional<BasisMismatch> found;
  parallel_chunks(dim, [&](std::int64_t begin, std::int64_t end) {
    if (begin > best.load(std::memory_order_relaxed)) return;
    for (std::int64_t i = begin; i < end; ++i) {
      if (i > best.load(std::memory_order_relaxed)) return;
      SparseVec a = lhs.apply_basis(i, field);
      SparseVec b = rhs.apply_basis(i, field);
      if (!vec_equal(a, b)) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < best.load()) {
          best.store(i);
          found = BasisMismatch{i, std::move(a), std::move(b)};
        }
        return;
      }
    }
  });
  return found;
}

}  // namespace caryb

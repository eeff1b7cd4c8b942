#include "caryb/linmap.hpp"

#include <algorithm>

namespace caryb {

SparseVec basis_vec(std::int64_t i, const Field& field) { return {{i, field.one()}}; }

void normalize_vec(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const VecEntry& a, const VecEntry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::int64_t idx = v[i].index;
    Scalar sum = std::move(v[i].value);
    for (++i; i < v.size() && v[i].index == idx; ++i) sum += v[i].value;
    if (!sum.is_zero()) v[out++] = {idx, std::move(sum)};
  }
  v.resize(out);
}

bool vec_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
  return true;
}

std::string format_vec(const SparseVec& v, const BasedSpace& space) {
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " + ";
    if (!v[i].value.is_one()) out += v[i].value.str() + "·";
    out += space.label(v[i].index);
  }
  return out;
}

LinMap::LinMap(BasedSpace source, BasedSpace target, Field field, std::vector<Entry> entries)
    : source_(std::move(source)), target_(std::move(target)), field_(field), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries_.size();) {
    Entry e = std::move(entries_[i]);
    for (++i; i < entries_.size() && entries_[i].col == e.col && entries_[i].row == e.row; ++i)
      e.value += entries_[i].value;
    if (e.row < 0 || e.row >= target_.dim() || e.col < 0 || e.col >= source_.dim())
      throw DimensionError("map entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") out of range",
                           e.row >= target_.dim() || e.row < 0 ? e.row : e.col,
                           e.row >= target_.dim() || e.row < 0 ? target_.dim() : source_.dim());
    if (!e.value.is_zero()) entries_[out++] = std::move(e);
  }
  entries_.resize(out);
}

LinMap LinMap::identity(const BasedSpace& s, const Field& field) {
  std::vector<Entry> e;
  e.reserve(static_cast<std::size_t>(s.dim()));
  for (std::int64_t i = 0; i < s.dim(); ++i) e.push_back({i, i, field.one()});
  return LinMap(s, s, field, std::move(e));
}

LinMap LinMap::zero(BasedSpace source, BasedSpace target, Field field) {
  return LinMap(std::move(source), std::move(target), field, {});
}

std::span<const LinMap::Entry> LinMap::column(std::int64_t col) const {
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), col,
                             [](const Entry& e, std::int64_t c) { return e.col < c; });
  auto hi = lo;
  while (hi != entries_.end() && hi->col == col) ++hi;
  return {lo, hi};
}

Scalar LinMap::entry(std::int64_t row, std::int64_t col) const {
  for (const Entry& e : column(col))
    if (e.row == row) return e.value;
  return field_.zero();
}

SparseVec LinMap::apply(const SparseVec& v) const {
  SparseVec out;
  bool ordered = true;
  for (const VecEntry& ve : v) {
    if (ve.index < 0 || ve.index >= source_.dim())
      throw DimensionError("apply: vector index out of range", ve.index, source_.dim());
    bool one = ve.value.is_one();
    for (const Entry& e : column(ve.index)) {
      out.push_back({e.row, one ? e.value : ve.value * e.value});
      if (out.size() > 1 && out[out.size() - 2].index >= e.row) ordered = false;
    }
  }
  if (!ordered) normalize_vec(out);
  return out;
}

SparseVec LinMap::apply_basis(std::int64_t i) const {
  SparseVec out;
  for (const Entry& e : column(i)) out.push_back({e.row, e.value});
  return out;
}

bool LinMap::operator==(const LinMap& o) const {
  if (field_ != o.field_ || source_.dim() != o.source_.dim() || target_.dim() != o.target_.dim())
    return false;
  if (entries_.size() != o.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& a = entries_[i];
    const Entry& b = o.entries_[i];
    if (a.row != b.row || a.col != b.col || a.value != b.value) return false;
  }
  return true;
}

LinMap LinMap::with_spaces(BasedSpace source, BasedSpace target) const {
  if (source.dim() != source_.dim()) throw DimensionError("with_spaces source", source.dim(), source_.dim());
  if (target.dim() != target_.dim()) throw DimensionError("with_spaces target", target.dim(), target_.dim());
  return LinMap(std::move(source), std::move(target), field_, entries_);
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.target().dim() != f.source().dim())
    throw DimensionError("compose: inner dimensions disagree", g.target().dim(), f.source().dim());
  if (g.field() != f.field()) throw FieldMismatchError("compose: maps over different fields");
  std::vector<LinMap::Entry> out;
  SparseVec colacc;
  const auto& ge = g.entries();
  for (std::size_t i = 0; i < ge.size();) {
    std::int64_t col = ge[i].col;
    colacc.clear();
    for (; i < ge.size() && ge[i].col == col; ++i) {
      bool one = ge[i].value.is_one();
      for (const LinMap::Entry& fe : f.column(ge[i].row))
        colacc.push_back({fe.row, one ? fe.value : ge[i].value * fe.value});
    }
    normalize_vec(colacc);
    for (VecEntry& ve : colacc) out.push_back({ve.index, col, std::move(ve.value)});
  }
  return LinMap(g.source(), f.target(), f.field(), std::move(out));
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  if (g.field() != f.field()) throw FieldMismatchError("tensor: maps over different fields");
  const std::int64_t gs = g.source().dim(), gt = g.target().dim();
  std::vector<LinMap::Entry> out;
  out.reserve(f.nnz() * g.nnz());
  const auto& fe = f.entries();
  const auto& ge = g.entries();
  // canonical (col,row) order falls out of the loop structure
  for (std::size_t i = 0; i < fe.size();) {
    std::int64_t fcol = fe[i].col;
    std::size_t ibeg = i;
    while (i < fe.size() && fe[i].col == fcol) ++i;
    for (std::size_t j = 0; j < ge.size();) {
      std::int64_t gcol = ge[j].col;
      std::size_t jbeg = j;
      while (j < ge.size() && ge[j].col == gcol) ++j;
      const std::int64_t col = fcol * gs + gcol;
      for (std::size_t a = ibeg; a < i; ++a)
        for (std::size_t b = jbeg; b < j; ++b)
          out.push_back({fe[a].row * gt + ge[b].row, col, fe[a].value * ge[b].value});
    }
  }
  return LinMap(tensor(f.source(), g.source()), tensor(f.target(), g.target()), f.field(), std::move(out));
}

LinMap transposition(const BasedSpace& a, const BasedSpace& b, const Field& field) {
  std::vector<LinMap::Entry> out;
  out.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (std::int64_t i = 0; i < a.dim(); ++i)
    for (std::int64_t j = 0; j < b.dim(); ++j)
      out.push_back({j * a.dim() + i, i * b.dim() + j, field.one()});
  return LinMap(tensor(a, b), tensor(b, a), field, std::move(out));
}

}  // namespace caryb

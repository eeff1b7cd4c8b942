#include "caryb/group.hpp"

#include <algorithm>
#include <numeric>

namespace caryb {

GroupTable::GroupTable(std::string name, std::vector<std::string> elements,
                       std::vector<std::vector<int>> mult)
    : name_(std::move(name)), elements_(std::move(elements)), mult_(std::move(mult)) {
  validate();
}

void GroupTable::validate() {
  const int n = order();
  if (n == 0) throw InputError("group '" + name_ + "': empty element list");
  if (mult_.size() != elements_.size()) throw InputError("group '" + name_ + "': mult table has wrong row count");
  for (const auto& row : mult_) {
    if (row.size() != elements_.size()) throw InputError("group '" + name_ + "': mult table has a ragged row");
    for (int v : row)
      if (v < 0 || v >= n)
        throw InputError("group '" + name_ + "': table entry " + std::to_string(v) + " out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (elements_[static_cast<std::size_t>(i)] == elements_[static_cast<std::size_t>(j)])
        throw InputError("group '" + name_ + "': duplicate element name '" +
                         elements_[static_cast<std::size_t>(i)] + "'");

  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw InputError("group '" + name_ + "': no identity element");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("group '" + name_ + "': associativity fails at (" + element(a) + ", " +
                           element(b) + ", " + element(c) + "): (" + element(a) + element(b) + ")" +
                           element(c) + " = " + element(mul(mul(a, b), c)) + " but " + element(a) +
                           "(" + element(b) + element(c) + ") = " + element(mul(a, mul(b, c))));

  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    if (inverse_[static_cast<std::size_t>(a)] < 0)
      throw InputError("group '" + name_ + "': element " + element(a) + " has no inverse");
  }
}

bool GroupTable::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group needs n >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : i == 1 ? "a" : "a" + std::to_string(i));
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return GroupTable("Z" + std::to_string(n), std::move(names), std::move(mult));
}

GroupTable GroupTable::dihedral(int n) {
  if (n < 1) throw InputError("dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    std::string rot = i == 0 ? "" : i == 1 ? "r" : "r" + std::to_string(i);
    names[static_cast<std::size_t>(i)] = i == 0 ? "e" : rot;
    names[static_cast<std::size_t>(n + i)] = rot + "s";
  }
  auto compose = [n](int x, int y) {  // indices < n rotations, >= n reflections
    const bool xf = x >= n, yf = y >= n;
    const int xr = xf ? x - n : x, yr = yf ? y - n : y;
    if (!xf && !yf) return (xr + yr) % n;
    if (!xf && yf) return n + (xr + yr) % n;
    if (xf && !yf) return n + ((xr - yr) % n + n) % n;
    return ((xr - yr) % n + n) % n;
  };
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = compose(i, j);
  return GroupTable("D" + std::to_string(n), std::move(names), std::move(mult));
}

namespace {

std::string cycle_notation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> used(p.size(), false);
  std::string out;
  for (int start = 0; start < n; ++start) {
    if (used[static_cast<std::size_t>(start)] || p[static_cast<std::size_t>(start)] == start) continue;
    out += "(";
    int cur = start;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      out += std::to_string(cur + 1);
      cur = p[static_cast<std::size_t>(cur)];
    } while (cur != start);
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupTable GroupTable::symmetric(int n) {
  if (n < 1 || n > 4) throw InputError("symmetric group generator supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (const auto& q : perms) names.push_back(cycle_notation(q));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)])];
      mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = index_of(comp);
    }
  return GroupTable("S" + std::to_string(n), std::move(names), std::move(mult));
}

GroupTable GroupTable::builtin(const std::string& name) {
  if (name.size() < 2) throw InputError("unknown builtin group '" + name + "'");
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw InputError("unknown builtin group '" + name + "'");
  }
  switch (name[0]) {
    case 'Z':
      return cyclic(n);
    case 'D':
      return dihedral(n);
    case 'S':
      return symmetric(n);
    default:
      throw InputError("unknown builtin group '" + name + "' (expected Z<n>, D<n> or S<n>)");
  }
}

GroupTable GroupTable::from_json(const nlohmann::ordered_json& j, std::string name) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("mult"))
    throw InputError("group JSON needs 'elements' and 'mult'");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) throw InputError("group JSON: elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::vector<int>> mult;
  for (const auto& row : j.at("mult")) {
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("group JSON: mult entries must be integers");
      r.push_back(v.get<int>());
    }
    mult.push_back(std::move(r));
  }
  return GroupTable(std::move(name), std::move(elements), std::move(mult));
}

nlohmann::ordered_json GroupTable::to_json() const {
  nlohmann::ordered_json j;
  j["elements"] = elements_;
  j["mult"] = mult_;
  return j;
}

}  // namespace caryb

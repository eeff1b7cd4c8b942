#include "caryb/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace caryb {

namespace {

Json entries_to_json(const LinMap& m) {
  std::vector<const LinMap::Entry*> order;
  order.reserve(m.nnz());
  for (const auto& e : m.entries()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const LinMap::Entry* a, const LinMap::Entry* b) {
    return a->row != b->row ? a->row < b->row : a->col < b->col;
  });
  Json arr = Json::array();
  for (const LinMap::Entry* e : order) {
    Json t = Json::array();
    t.push_back(e->row);
    t.push_back(e->col);
    t.push_back(e->value.str());
    arr.push_back(std::move(t));
  }
  return arr;
}

std::vector<LinMap::Entry> entries_from_json(const Json& arr, const Field& field) {
  std::vector<LinMap::Entry> out;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != 3) throw InputError("matrix entry must be [row, col, value]");
    out.push_back({t[0].get<std::int64_t>(), t[1].get<std::int64_t>(),
                   field.parse(t[2].get<std::string>())});
  }
  return out;
}

std::vector<std::string> labels_of(const BasedSpace& s) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(s.dim()));
  for (std::int64_t i = 0; i < s.dim(); ++i) out.push_back(s.label(i));
  return out;
}

}  // namespace

Json rack_to_json(const AugmentedRack& r, const GroupTable& group, const std::string& hopf_kind) {
  Json j;
  j["format"] = "caryb.rack/1";
  j["name"] = r.name;
  j["scalar"] = r.field().name();
  Json h;
  h["kind"] = hopf_kind;
  h["group_name"] = group.name();
  h["group"] = group.to_json();
  j["hopf"] = std::move(h);
  j["construction"] = r.descriptor;
  j["cocommutative_certified"] = r.cocommutative_certified;
  j["basis"] = labels_of(r.space());
  Json maps;
  maps["delta"] = entries_to_json(r.X.delta);
  maps["epsilon"] = entries_to_json(r.X.epsilon);
  maps["action"] = entries_to_json(r.X.action);
  maps["nu"] = entries_to_json(r.nu);
  j["maps"] = std::move(maps);
  j["certification"] = r.certification.to_json();
  return j;
}

LoadedRack rack_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != "caryb.rack/1")
    throw InputError("not a rack artifact (missing format caryb.rack/1)");
  const Field field = Field::parse_name(j.at("scalar").get<std::string>());
  const Json& hj = j.at("hopf");
  GroupTable group = GroupTable::from_json(hj.at("group"), hj.at("group_name").get<std::string>());
  const std::string kind = hj.at("kind").get<std::string>();
  HopfPtr hopf;
  if (kind == "group_algebra")
    hopf = group_algebra(group, field);
  else if (kind == "function_algebra")
    hopf = function_algebra(group, field);
  else
    throw InputError("unknown hopf kind '" + kind + "' in artifact");

  std::vector<std::string> basis;
  for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
  BasedSpace X(basis);
  const Json& maps = j.at("maps");
  LinMap delta(X, tensor(X, X), field, entries_from_json(maps.at("delta"), field));
  LinMap epsilon(X, BasedSpace::unit(), field, entries_from_json(maps.at("epsilon"), field));
  LinMap action(tensor(X, hopf->space()), X, field, entries_from_json(maps.at("action"), field));
  LinMap nu(X, hopf->space(), field, entries_from_json(maps.at("nu"), field));

  RackBuildResult built =
      make_augmented_rack(j.at("name").get<std::string>(),
                          ModuleCoalgebra{X, std::move(delta), std::move(epsilon), std::move(action), hopf},
                          std::move(nu), j.value("construction", Json::object()));
  if (!built.rack)
    throw CheckFailedError("artifact failed re-certification:\n" + built.report.text());
  return {std::move(*built.rack), std::move(group), kind, j.value("certification", Json())};
}

void save_text(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("write to '" + path + "' failed");
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(load_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error in '" + path + "': " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(1) + "\n"; }

Json matrix_to_json(const LinMap& m, const Json& provenance, int block_m, int block_n) {
  Json j;
  j["format"] = "caryb.matrix/1";
  j["provenance"] = provenance;
  j["m"] = block_m;
  j["n"] = block_n;
  j["scalar"] = m.field().name();
  j["rows"] = m.target().dim();
  j["cols"] = m.source().dim();
  j["row_labels"] = labels_of(m.target());
  j["col_labels"] = labels_of(m.source());
  j["entries"] = entries_to_json(m);
  return j;
}

LinMap matrix_from_json(const Json& j) {
  if (!j.is_object() || j.value("format", "") != "caryb.matrix/1")
    throw InputError("not a matrix file (missing format caryb.matrix/1)");
  const Field field = Field::parse_name(j.at("scalar").get<std::string>());
  std::vector<std::string> rows, cols;
  for (const auto& l : j.at("row_labels")) rows.push_back(l.get<std::string>());
  for (const auto& l : j.at("col_labels")) cols.push_back(l.get<std::string>());
  return LinMap(BasedSpace(cols), BasedSpace(rows), field, entries_from_json(j.at("entries"), field));
}

std::string matrix_to_csv(const LinMap& m, const Json& provenance, int block_m, int block_n) {
  Json head = matrix_to_json(m, provenance, block_m, block_n);
  std::string out;
  out += "# caryb.matrix/1\n";
  out += "# provenance: " + head["provenance"].dump() + "\n";
  out += "# m: " + std::to_string(block_m) + "\n";
  out += "# n: " + std::to_string(block_n) + "\n";
  out += "# scalar: " + m.field().name() + "\n";
  out += "# rows: " + std::to_string(m.target().dim()) + "\n";
  out += "# cols: " + std::to_string(m.source().dim()) + "\n";
  out += "# row_labels: " + head["row_labels"].dump() + "\n";
  out += "# col_labels: " + head["col_labels"].dump() + "\n";
  out += "row,col,value\n";
  for (const auto& t : head["entries"])
    out += std::to_string(t[0].get<std::int64_t>()) + "," + std::to_string(t[1].get<std::int64_t>()) +
           "," + t[2].get<std::string>() + "\n";
  return out;
}

LinMap matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Json meta = Json::object();
  std::vector<LinMap::Entry> raw;
  Field field;
  std::vector<std::string> rows, cols;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      std::string key = line.substr(2, colon - 2);
      std::string val = line.substr(colon + 2);
      if (key == "scalar") field = Field::parse_name(val);
      if (key == "row_labels")
        for (const auto& l : Json::parse(val)) rows.push_back(l.get<std::string>());
      if (key == "col_labels")
        for (const auto& l : Json::parse(val)) cols.push_back(l.get<std::string>());
      continue;
    }
    if (!header_done) {  // the "row,col,value" line
      header_done = true;
      continue;
    }
    auto c1 = line.find(',');
    auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw InputError("bad CSV matrix line: " + line);
    try {
      raw.push_back({std::stoll(line.substr(0, c1)), std::stoll(line.substr(c1 + 1, c2 - c1 - 1)),
                     field.parse(line.substr(c2 + 1))});
    } catch (const std::invalid_argument&) {
      throw InputError("bad CSV matrix line: " + line);
    } catch (const std::out_of_range&) {
      throw InputError("bad CSV matrix line: " + line);
    }
  }
  if (rows.empty() || cols.empty()) throw InputError("CSV matrix missing label headers");
  return LinMap(BasedSpace(cols), BasedSpace(rows), field, std::move(raw));
}

}  // namespace caryb

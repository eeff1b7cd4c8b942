#pragma once

#include "caryb/modcoalg.hpp"
#include "caryb/ybe.hpp"

namespace caryb {

// Rack artifacts are self-describing JSON: scalar mode, the base group and
// which Hopf construction it feeds, the construction descriptor, the full
// structure maps as sparse (row, col, value-string) triples, and the
// certification report produced at build time. Loading re-runs certification
// so a tampered artifact cannot come back certified.
Json rack_to_json(const AugmentedRack& r, const GroupTable& group, const std::string& hopf_kind);

struct LoadedRack {
  AugmentedRack rack;
  GroupTable group;
  std::string hopf_kind;  // "group_algebra" | "function_algebra"
  Json embedded_certification;
};
LoadedRack rack_from_json(const Json& j);

void save_text(const std::string& path, const std::string& bytes);
std::string load_text(const std::string& path);
Json load_json(const std::string& path);

// Canonical bytes for every JSON artifact this project writes.
std::string dump_json(const Json& j);

// Sparse matrix exchange format. Entries are sorted by (row, col) and
// scalars are exact strings, so export→import→export is byte-identical.
Json matrix_to_json(const LinMap& m, const Json& provenance, int block_m, int block_n);
LinMap matrix_from_json(const Json& j);
std::string matrix_to_csv(const LinMap& m, const Json& provenance, int block_m, int block_n);
LinMap matrix_from_csv(const std::string& text);

}  // namespace caryb

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "caryb/parallel.hpp"
#include "caryb/serialize.hpp"
#include "caryb/settheoretic.hpp"

namespace {

using namespace caryb;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

GroupTable group_from_source(const std::string& src) {
  if (src.rfind("builtin:", 0) == 0) return GroupTable::builtin(src.substr(8));
  if (src.rfind("file:", 0) == 0) {
    const std::string path = src.substr(5);
    return GroupTable::from_json(load_json(path), path);
  }
  throw InputError("group source must be builtin:<name> or file:<path>, got '" + src + "'");
}

void emit(const Report& rep, bool as_json, const std::string& out_path) {
  std::string text = as_json ? dump_json(rep.to_json()) : rep.text();
  if (out_path.empty())
    std::fputs(text.c_str(), stdout);
  else
    save_text(out_path, text);
}

int cmd_hopf_check(const std::string& group_src, const Field& field, bool as_json,
                   const std::string& out_path) {
  GroupTable g = group_from_source(group_src);
  HopfPtr h = group_algebra(g, field);
  Report rep = check_hopf_axioms(*h);
  rep.merge(check_antipode_twist(*h));
  rep.note(std::string("cocommutative: ") + (is_cocommutative(*h) ? "yes" : "no"));
  rep.note(std::string("involutory: ") + (is_involutory(*h) ? "yes" : "no"));
  emit(rep, as_json, out_path);
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

struct BuildSpec {
  std::string kind;  // heap | adjoint | double | power
  int power_n = 0;
};

BuildSpec parse_construction(const std::string& c) {
  if (c == "heap" || c == "adjoint" || c == "double") return {c, 0};
  if (c.rfind("power:", 0) == 0) {
    BuildSpec s{"power", 0};
    try {
      s.power_n = std::stoi(c.substr(6));
    } catch (const std::exception&) {
      throw InputError("bad power construction '" + c + "' (expected power:<n>)");
    }
    if (s.power_n < 1) throw InputError("power construction needs n >= 1");
    return s;
  }
  throw InputError("unknown construction '" + c + "' (heap|adjoint|double|power:<n>)");
}

int cmd_build(const std::string& construction, const std::string& group_src,
              const std::string& rack_path, int iterate, const Field& field,
              std::int64_t cap, const std::string& out_path) {
  BuildSpec spec = parse_construction(construction);
  BuildOptions opts{cap};
  if (iterate < 1) throw InputError("--iterate must be >= 1");

  GroupTable group = GroupTable::trivial();
  std::string hopf_kind = "group_algebra";
  RackBuildResult built{std::nullopt, Report("")};

  if (spec.kind == "heap" || spec.kind == "adjoint") {
    if (group_src.empty()) throw InputError(spec.kind + " construction needs --group");
    if (iterate != 1) throw InputError("--iterate applies to double/power constructions");
    group = group_from_source(group_src);
    HopfPtr h = group_algebra(group, field);
    built = spec.kind == "heap" ? heap_rack(h, opts) : adjoint_rack(h, opts);
  } else {
    if (rack_path.empty()) throw InputError(spec.kind + " construction needs --rack <artifact>");
    LoadedRack base = rack_from_json(load_json(rack_path));
    if (base.rack.field() != field)
      throw InputError("artifact scalar mode " + base.rack.field().name() +
                       " does not match the session (" + field.name() + ")");
    group = base.group;
    hopf_kind = base.hopf_kind;
    built = RackBuildResult{std::move(base.rack), Report("")};
    for (int i = 0; i < iterate; ++i) {
      built = spec.kind == "double" ? double_rack(*built.rack, opts)
                                    : power_rack(*built.rack, spec.power_n, opts);
      if (!built.rack) break;
    }
  }

  if (!built.rack) {
    std::fputs(built.report.text().c_str(), stdout);
    return kExitCheckFailed;
  }
  save_text(out_path, dump_json(rack_to_json(*built.rack, group, hopf_kind)));
  std::printf("wrote %s: %s, dim %lld, certified%s\n", out_path.c_str(), built.rack->name.c_str(),
              static_cast<long long>(built.rack->space().dim()),
              built.rack->cocommutative_certified ? " (cocommutative)" : "");
  return kExitOk;
}

int cmd_verify(const std::string& rack_path, const std::string& property, std::int64_t cap,
               bool as_json, const std::string& out_path) {
  BuildOptions opts{cap};
  LoadedRack loaded = rack_from_json(load_json(rack_path));
  const AugmentedRack& r = loaded.rack;

  Json out;
  out["artifact"] = r.name;
  out["property"] = property;
  std::vector<Report> reports;

  auto want = [&](const std::string& p) { return property == p || property == "all"; };
  bool known = property == "all";
  if (want("sd")) {
    known = true;
    reports.push_back(check_self_distributive(r));
  }
  if (want("compat")) {
    known = true;
    reports.push_back(check_sd_comult_compatibility(r));
  }
  if (want("ybe")) {
    known = true;
    reports.push_back(check_ybe(r, r_matrix(r)));
  }
  if (want("inverse")) {
    known = true;
    reports.push_back(check_invertibility(r_matrix(r), r.field(), r.name));
  }
  if (property.rfind("hexagon:", 0) == 0) {
    known = true;
    int l, m, n;
    if (std::sscanf(property.c_str(), "hexagon:%d,%d,%d", &l, &m, &n) != 3)
      throw InputError("expected hexagon:l,m,n");
    reports.push_back(check_hexagons(r, l, m, n, opts));
  }
  if (property.rfind("decomp:", 0) == 0) {
    known = true;
    int m, n;
    if (std::sscanf(property.c_str(), "decomp:%d,%d", &m, &n) != 2)
      throw InputError("expected decomp:m,n");
    reports.push_back(check_braiding_decomposition(r, m, n, opts));
  }
  if (!known) throw InputError("unknown property '" + property + "'");

  bool all = true;
  if (property == "all") {
    Report cert = r.certification;
    all = all && cert.all_passed();
    out["certification"] = cert.to_json();
  }
  Json arr = Json::array();
  for (const Report& rep : reports) {
    all = all && rep.all_passed();
    arr.push_back(rep.to_json());
  }
  out["reports"] = std::move(arr);
  out["all_passed"] = all;

  std::string text;
  if (as_json || !out_path.empty()) {
    text = dump_json(out);
  } else {
    for (const Report& rep : reports) text += rep.text();
    if (property == "all") text += "certification: " + std::string(all ? "pass" : "FAIL") + "\n";
  }
  if (out_path.empty())
    std::fputs(text.c_str(), stdout);
  else
    save_text(out_path, text);
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_export_r(const std::string& rack_path, int m, int n, const std::string& format,
                 std::int64_t cap, const std::string& out_path) {
  BuildOptions opts{cap};
  LoadedRack loaded = rack_from_json(load_json(rack_path));
  YBOperator op = braiding(loaded.rack, m, n, opts);
  Json prov;
  prov["rack"] = loaded.rack.descriptor;
  prov["name"] = loaded.rack.name;
  prov["m"] = m;
  prov["n"] = n;
  std::string bytes;
  if (format == "json")
    bytes = dump_json(matrix_to_json(op.forward, prov, m, n));
  else if (format == "csv")
    bytes = matrix_to_csv(op.forward, prov, m, n);
  else
    throw InputError("unknown export format '" + format + "' (json|csv)");
  save_text(out_path, bytes);
  std::printf("wrote %s: R_{%d,%d}, %lld x %lld, %zu entries\n", out_path.c_str(), m, n,
              static_cast<long long>(op.forward.target().dim()),
              static_cast<long long>(op.forward.source().dim()), op.forward.nnz());
  return kExitOk;
}

int cmd_oracle(const std::string& group_src, const std::string& family, const Field& field,
               bool as_json, const std::string& out_path) {
  GroupTable g = group_from_source(group_src);
  SetAugRack set_rack = family == "heap" ? heap_aug_rack(g) : adjoint_aug_rack(g);
  Report rep = check_set_aug_rack(set_rack);
  FiniteRack induced = induced_rack(set_rack);
  Report rack_axioms = check_rack_axioms(induced);
  rep.merge(rack_axioms);
  rep.add(check_set_ybe(induced));

  HopfPtr h = group_algebra(g, field);
  RackBuildResult cat = family == "heap" ? heap_rack(h) : adjoint_rack(h);
  if (!cat.rack) {
    std::fputs(cat.report.text().c_str(), stdout);
    return kExitCheckFailed;
  }
  rep.merge(oracle_compare(set_rack, *cat.rack));
  emit(rep, as_json, out_path);
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for augmented racks over Hopf algebras and their Yang-Baxter operators"};
  app.require_subcommand(1);

  std::string scalar_mode = "rational";
  int threads = 0;
  app.add_option("--scalar", scalar_mode, "rational | fp:<p>")
      ->envname("CARYB_SCALAR")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = auto)")->capture_default_str();

  std::string group_src, rack_path, out_path, construction, property = "all", format = "json",
                                                            family = "heap";
  std::int64_t cap = 4096;
  int iterate = 1, bm = 1, bn = 1;
  bool as_json = false;

  CLI::App* hopf = app.add_subcommand("hopf-check", "verify every Hopf axiom for k[G]");
  hopf->add_option("--group", group_src, "builtin:<name> or file:<path>")->required();
  hopf->add_flag("--json", as_json, "machine-readable report");
  hopf->add_option("-o,--output", out_path, "write the report to a file");

  CLI::App* build = app.add_subcommand("build", "run a construction and save a rack artifact");
  build->add_option("--construction", construction, "heap | adjoint | double | power:<n>")->required();
  build->add_option("--group", group_src, "base group (heap/adjoint)");
  build->add_option("--rack", rack_path, "base rack artifact (double/power)");
  build->add_option("--iterate", iterate, "apply the construction repeatedly")->capture_default_str();
  build->add_option("--cap", cap, "dimension cap")->capture_default_str();
  build->add_option("-o,--output", out_path, "artifact path")->required();

  CLI::App* verify = app.add_subcommand("verify", "re-run checks on a saved artifact");
  verify->add_option("artifact", rack_path)->required();
  verify->add_option("--property", property, "sd|compat|ybe|inverse|hexagon:l,m,n|decomp:m,n|all")
      ->capture_default_str();
  verify->add_option("--cap", cap, "dimension cap")->capture_default_str();
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("-o,--output", out_path, "write the report to a file");

  CLI::App* exportr = app.add_subcommand("export-r", "export a braiding R_{m,n} as a sparse matrix");
  exportr->add_option("artifact", rack_path)->required();
  exportr->add_option("-m", bm, "left tensor power")->capture_default_str();
  exportr->add_option("-n", bn, "right tensor power")->capture_default_str();
  exportr->add_option("--format", format, "json | csv")->capture_default_str();
  exportr->add_option("--cap", cap, "dimension cap")->capture_default_str();
  exportr->add_option("-o,--output", out_path, "matrix path")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "cross-check a construction against set tables");
  oracle->add_option("--group", group_src, "builtin:<name> or file:<path>")->required();
  oracle->add_option("--family", family, "heap | adjoint")->capture_default_str();
  oracle->add_flag("--json", as_json, "machine-readable report");
  oracle->add_option("-o,--output", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    caryb::set_thread_count(threads);
    const Field field = Field::parse_name(scalar_mode);
    if (hopf->parsed()) return cmd_hopf_check(group_src, field, as_json, out_path);
    if (build->parsed()) return cmd_build(construction, group_src, rack_path, iterate, field, cap, out_path);
    if (verify->parsed()) return cmd_verify(rack_path, property, cap, as_json, out_path);
    if (exportr->parsed()) return cmd_export_r(rack_path, bm, bn, format, cap, out_path);
    if (oracle->parsed()) return cmd_oracle(group_src, family, field, as_json, out_path);
  } catch (const CapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCap;
  } catch (const CheckFailedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {  // e.g. JSON type errors from malformed files
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}

#include "topobound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "topobound/bounds.hpp"
#include "topobound/boxes.hpp"
#include "topobound/canonical_maps.hpp"
#include "topobound/coloring.hpp"
#include "topobound/constructions.hpp"
#include "topobound/error.hpp"
#include "topobound/homology.hpp"
#include "topobound/json_io.hpp"

namespace topobound::cli {

namespace {

using nlohmann::json;

int parse_int(const std::string& token, const char* what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument(std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
  return value;
}

std::uint64_t parse_seed(const std::string& token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidArgument("bad seed '" + token + "'");
  return value;
}

bool is_unsigned(const std::string& token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

double parse_probability(const std::string& token) {
  double p = 0;
  try {
    std::size_t used = 0;
    p = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
  } catch (const std::exception&) {
    throw InvalidArgument("bad edge probability '" + token + "'");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0,1]");
  return p;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void need(const std::vector<std::string>& tokens, std::size_t count, const std::string& kind) {
  if (tokens.size() < count + 1) {
    throw InvalidArgument("instance '" + kind + "' needs " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

Instance load_instance(const std::vector<std::string>& tokens, std::uint64_t seed, std::size_t* consumed) {
  if (tokens.empty()) throw InvalidArgument("missing instance spec");
  const std::string& kind = tokens[0];
  Instance inst;
  std::size_t used = 0;
  if (kind == "complete") {
    need(tokens, 1, kind);
    const int m = parse_int(tokens[1], "m");
    if (m < 1) throw InvalidArgument("complete graph needs m >= 1");
    inst.graph = complete_graph(m);
    inst.name = "complete " + tokens[1];
    used = 2;
  } else if (kind == "cycle") {
    need(tokens, 1, kind);
    const int n = parse_int(tokens[1], "n");
    if (n < 3) throw InvalidArgument("cycle needs n >= 3");
    inst.graph = cycle_graph(n);
    inst.name = "cycle " + tokens[1];
    used = 2;
  } else if (kind == "kneser" || kind == "schrijver") {
    need(tokens, 2, kind);
    const int n = parse_int(tokens[1], "n");
    const int k = parse_int(tokens[2], "k");
    if (kind == "kneser") {
      if (k < 1 || n < k) throw InvalidArgument("kneser needs 1 <= k <= n");
      inst.system = all_k_subsets(n, k);
    } else {
      if (k < 1 || 2 * k >= n) throw InvalidArgument("schrijver needs 0 < 2k < n");
      inst.system = stable_subsets(n, k);
    }
    inst.graph = kneser_graph_of(*inst.system);
    inst.name = kind + " " + tokens[1] + " " + tokens[2];
    used = 3;
  } else if (kind == "random") {
    need(tokens, 2, kind);
    const int n = parse_int(tokens[1], "n");
    if (n < 2) throw InvalidArgument("random graph needs n >= 2");
    const double p = parse_probability(tokens[2]);
    if (p <= 0.0) throw InvalidArgument("random graph needs p > 0");
    used = 3;
    if (tokens.size() > 3 && is_unsigned(tokens[3])) {
      seed = parse_seed(tokens[3]);
      used = 4;
    }
    inst.graph = random_graph(n, p, seed);
    inst.name = "random " + tokens[1] + " " + tokens[2] + " " + std::to_string(seed);
  } else if (kind == "file") {
    need(tokens, 1, kind);
    const std::string& path = tokens[1];
    const std::string text = read_file(path);
    if (ends_with(path, ".json")) {
      inst.system = parse_set_system(text);
      inst.graph = kneser_graph_of(*inst.system);
    } else {
      inst.graph = parse_dimacs(text);
    }
    inst.name = "file " + path;
    used = 2;
  } else {
    throw InvalidArgument("unknown instance kind '" + kind + "'");
  }
  if (consumed) *consumed = used;
  return inst;
}

namespace {

struct Common {
  std::size_t cap = kDefaultFaceCap;
  std::size_t budget = kDefaultSearchBudget;
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 1;
  bool format_given = false;
};

/// Buffers output and writes it once, to --out or to the given stream.
void emit(const Common& common, const std::string& text, std::ostream& out) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + common.out_path + "'");
  file << text;
}

Instance load_exact(const std::vector<std::string>& tokens, const Common& common) {
  std::size_t used = 0;
  Instance inst = load_instance(tokens, common.seed, &used);
  if (used != tokens.size()) throw InvalidArgument("unexpected argument '" + tokens[used] + "'");
  return inst;
}

int cmd_gen(const std::vector<std::string>& tokens, const Common& common, std::ostream& out) {
  const Instance inst = load_exact(tokens, common);
  if (!common.format_given) {
    emit(common, to_dimacs(inst.graph), out);
  } else if (common.format == "json") {
    if (!inst.system) throw InvalidArgument("instance has no set-system presentation");
    emit(common, set_system_to_json(*inst.system).dump() + "\n", out);
  } else {
    throw InvalidArgument("gen writes DIMACS or, with --format json, a set system");
  }
  return exit_ok;
}

int cmd_bounds(const std::vector<std::string>& tokens, const Common& common, std::ostream& out) {
  const Instance inst = load_exact(tokens, common);
  ReportOptions options;
  options.instance = inst.name;
  options.cap = common.cap;
  options.budget = common.budget;
  const BoundsReport report = hierarchy_report(inst.graph, inst.system, options);
  if (common.format == "csv") {
    emit(common, report_csv_header() + "\n" + report_csv_row(report) + "\n", out);
  } else {
    emit(common, report_to_json(report).dump(2) + "\n", out);
  }
  if (report.any_fail()) return exit_verdict_failed;
  if (report.incomplete) return exit_resource;
  return exit_ok;
}

enum class RowStatus { pass, fail, skipped, error };

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::skipped: return "skipped";
    case RowStatus::error: return "error";
  }
  return "?";
}

struct MapRow {
  std::string name;
  std::string description;
  bool built = false;
  bool simplicial = false;
  bool equivariant = false;
  RowStatus status = RowStatus::pass;
  std::string detail;
};

std::string describe_violation(const SimplicialMapCheck& check) {
  if (!check.violation) return {};
  const MapViolation& v = *check.violation;
  std::string s = to_string(v.kind) + ": {";
  for (std::size_t i = 0; i < v.face_labels.size(); ++i) {
    s += (i ? ", " : "") + v.face_labels[i].to_string();
  }
  s += "} -> {";
  for (std::size_t i = 0; i < v.image_labels.size(); ++i) {
    s += (i ? ", " : "") + v.image_labels[i].to_string();
  }
  return s + "}";
}

/// Runs `body`, which fills the row from one or more checks, and turns
/// library errors into row statuses.
template <typename Body>
MapRow guarded_row(std::string name, std::string description, Body body) {
  MapRow row;
  row.name = std::move(name);
  row.description = std::move(description);
  try {
    std::vector<SimplicialMapCheck> checks = body();
    row.built = true;
    row.simplicial = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.simplicial; });
    row.equivariant = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.equivariant; });
    row.status = row.simplicial && row.equivariant ? RowStatus::pass : RowStatus::fail;
    for (const auto& c : checks) {
      if (c.violation) {
        row.detail = describe_violation(c);
        break;
      }
    }
  } catch (const ResourceLimit& e) {
    row.status = RowStatus::skipped;
    row.detail = e.what();
  } catch (const InvalidArgument& e) {
    row.status = RowStatus::error;
    row.detail = e.what();
  }
  return row;
}

const std::vector<std::pair<std::string, std::vector<CanonicalMapId>>>& map_groups() {
  static const std::vector<std::pair<std::string, std::vector<CanonicalMapId>>> groups = {
      {"M1", {CanonicalMapId::m1}},
      {"M2", {CanonicalMapId::m2_forward, CanonicalMapId::m2_backward}},
      {"M3", {CanonicalMapId::m3}},
      {"M4", {CanonicalMapId::m4}},
      {"M5", {CanonicalMapId::m5_forward, CanonicalMapId::m5_backward}},
      {"M6", {CanonicalMapId::m6_forward, CanonicalMapId::m6_backward}},
      {"M7", {CanonicalMapId::m7}},
      {"M8", {CanonicalMapId::m8}},
      {"M9", {CanonicalMapId::m9}},
  };
  return groups;
}

std::vector<std::string> expand_selection(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  if (names.empty()) {
    for (const auto& [n, ids] : map_groups()) add(n);
    return out;
  }
  for (const auto& raw : names) {
    std::string n = raw;
    if (n.size() == 2 && n[0] == 'm') n[0] = 'M';
    if (n == "all") {
      for (const auto& [g, ids] : map_groups()) add(g);
    } else if (n == "functor" || n == "c4free") {
      add(n);
    } else if (std::any_of(map_groups().begin(), map_groups().end(), [&](const auto& g) { return g.first == n; })) {
      add(n);
    } else {
      throw InvalidArgument("unknown map '" + raw + "'");
    }
  }
  return out;
}

int cmd_verify_maps(const std::vector<std::string>& tokens, const Common& common, std::ostream& out) {
  std::size_t used = 0;
  const Instance inst = load_instance(tokens, common.seed, &used);
  const std::vector<std::string> selection =
      expand_selection(std::vector<std::string>(tokens.begin() + static_cast<long>(used), tokens.end()));
  require_box_graph(inst.graph);

  CanonicalMaps maps(inst.graph, inst.system, common.cap);
  std::vector<MapRow> rows;
  for (const auto& name : selection) {
    if (name == "functor") {
      rows.push_back(guarded_row(name, "B(G) -> B(K_c) along a greedy coloring", [&] {
        const Coloring c = greedy_coloring(inst.graph, degree_order(inst.graph));
        const VertexMap f = coloring_as_map(inst.graph, c, std::max(c.colors_used, 2));
        const auto images = box_functor_map(f);
        const Z2Complex source = box_complex(f.source, BoxVariant::B, common.cap);
        const Z2Complex target = box_complex(f.target, BoxVariant::B, common.cap);
        return std::vector<SimplicialMapCheck>{verify_z2_map(source, target, images, common.cap)};
      }));
    } else if (name == "c4free") {
      rows.push_back(guarded_row(name, "sd B -> faces of B with at most two vertices", [&] {
        const RetractionResult r = c4free_retraction(inst.graph, common.cap);
        SimplicialMapCheck check = r.check;
        if (r.image_dimension > 1) {
          check.simplicial = false;
          check.verdict = false;
        }
        return std::vector<SimplicialMapCheck>{check};
      }));
    } else {
      const auto group = std::find_if(map_groups().begin(), map_groups().end(),
                                      [&](const auto& g) { return g.first == name; });
      std::string description;
      for (const auto id : group->second) {
        description += (description.empty() ? "" : "; ") + describe(id);
      }
      rows.push_back(guarded_row(name, description, [&] {
        std::vector<SimplicialMapCheck> checks;
        for (const auto id : group->second) checks.push_back(maps.run(id).check);
        return checks;
      }));
    }
  }

  std::ostringstream text;
  if (common.format == "csv") {
    text << "map,description,built,simplicial,equivariant,status,detail\n";
    for (const auto& r : rows) {
      std::string detail = r.detail;
      std::replace(detail.begin(), detail.end(), '"', '\'');
      text << r.name << ",\"" << r.description << "\"," << r.built << ',' << r.simplicial << ','
           << r.equivariant << ',' << to_string(r.status) << ",\"" << detail << "\"\n";
    }
  } else {
    json j;
    j["instance"] = inst.name;
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(json{{"map", r.name},
                         {"description", r.description},
                         {"built", r.built},
                         {"simplicial", r.simplicial},
                         {"equivariant", r.equivariant},
                         {"status", to_string(r.status)},
                         {"detail", r.detail}});
    }
    j["rows"] = arr;
    text << j.dump(2) << "\n";
  }
  emit(common, text.str(), out);

  auto any = [&](RowStatus s) {
    return std::any_of(rows.begin(), rows.end(), [&](const MapRow& r) { return r.status == s; });
  };
  if (any(RowStatus::fail)) return exit_verdict_failed;
  if (any(RowStatus::error)) return exit_input;
  if (any(RowStatus::skipped)) return exit_resource;
  return exit_ok;
}

int cmd_homology(const std::vector<std::string>& tokens, const std::string& variant_name,
                 const Common& common, std::ostream& out) {
  const Instance inst = load_exact(tokens, common);
  json j;
  j["instance"] = inst.name;
  j["variant"] = variant_name;

  std::optional<SimplicialComplex> complex;
  std::optional<Z2Complex> z2;
  if (variant_name == "free" || variant_name == "deleted_join") {
    const SetSystem system = inst.system ? *inst.system : kneser_representation(inst.graph, KneserMode::clique_cover);
    auto base = std::make_shared<const SimplicialComplex>(free_complex(system, common.cap));
    if (variant_name == "free") {
      complex = *base;
    } else {
      z2.emplace(deleted_join(*base, common.cap));
    }
  } else {
    const auto variant = parse_box_variant(variant_name);
    if (!variant) throw InvalidArgument("unknown variant '" + variant_name + "'");
    switch (*variant) {
      case BoxVariant::N:
        complex = neighborhood_complex(inst.graph, common.cap);
        break;
      case BoxVariant::L:
        z2.emplace(lovasz_complex(inst.graph, common.cap));
        break;
      case BoxVariant::Bsark:
      case BoxVariant::Bchain: {
        const SetSystem system =
            inst.system ? *inst.system : kneser_representation(inst.graph, KneserMode::clique_cover);
        z2.emplace(kneser_box_complex(system, *variant, common.cap));
        break;
      }
      default:
        z2.emplace(box_complex(inst.graph, *variant, common.cap));
        break;
    }
  }
  if (z2) complex = materialize(z2->complex(), common.cap);

  const BettiProfile betti = betti_gf2(*complex);
  j["vertices"] = complex->vertex_count();
  j["dimension"] = complex->dimension();
  j["f_vector"] = complex->f_vector();
  j["betti"] = betti.betti;
  if (betti.minus_one) j["betti_minus_one"] = betti.minus_one;
  j["acyclicity"] = acyclicity(betti);
  if (z2) {
    j["free"] = z2->is_free();
    j["index_interval"] = interval_to_json(index_interval(*z2, common.cap));
  }

  std::ostringstream text;
  if (common.format == "csv") {
    std::string betti_cell;
    for (const auto b : betti.betti) betti_cell += (betti_cell.empty() ? "" : " ") + std::to_string(b);
    text << "instance,variant,vertices,dimension,betti,acyclicity,index_lower,index_upper\n";
    text << inst.name << ',' << variant_name << ',' << complex->vertex_count() << ','
         << complex->dimension() << ',' << betti_cell << ',' << acyclicity(betti) << ',';
    if (z2) {
      const json& iv = j["index_interval"];
      text << iv["lower"].get<int>() << ',' << (iv["upper"].is_null() ? "" : std::to_string(iv["upper"].get<int>()));
    } else {
      text << ',';
    }
    text << "\n";
  } else {
    text << j.dump(2) << "\n";
  }
  emit(common, text.str(), out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological lower bounds for chromatic numbers", "topobound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "topobound 0.1.0");

  Common common;
  std::vector<std::string> tokens;
  std::string variant = "B";
  const std::string spec_help =
      "complete m | cycle n | kneser n k | schrijver n k | random n p [seed] | file path";

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--cap", common.cap, "Maximum number of faces built for one complex")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", common.budget, "Search-node budget for exact solvers")
        ->check(CLI::PositiveNumber);
    if (with_format) {
      sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    }
    sub->add_option("--out", common.out_path, "Write output to this file");
    sub->add_option("--seed", common.seed, "Seed for random instances without an explicit seed");
  };

  auto* gen = app.add_subcommand("gen", "Write an instance as DIMACS (or a set system with --format json)");
  gen->add_option("instance", tokens, spec_help)->required();
  add_common(gen, true);

  auto* bounds = app.add_subcommand("bounds", "Compute the bound hierarchy and consistency verdicts");
  bounds->add_option("instance", tokens, spec_help)->required();
  add_common(bounds, true);

  auto* verify = app.add_subcommand("verify-maps", "Verify the canonical Z2-maps between box complexes");
  verify->add_option("instance", tokens, spec_help + ", then maps: M1..M9 | all | functor | c4free")
      ->required();
  add_common(verify, true);

  auto* homology = app.add_subcommand("homology", "Reduced mod-2 Betti numbers of a complex");
  homology->add_option("instance", tokens, spec_help)->required();
  homology->add_option("--variant", variant,
                       "B, B0, B1, Bedge, Bsark, Bchain, N, L, free, deleted_join");
  add_common(homology, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }
  for (auto* sub : {gen, bounds, verify, homology}) {
    if (sub->count("--format") > 0) common.format_given = true;
  }

  try {
    if (*gen) return cmd_gen(tokens, common, out);
    if (*bounds) return cmd_bounds(tokens, common, out);
    if (*verify) return cmd_verify_maps(tokens, common, out);
    if (*homology) return cmd_homology(tokens, variant, common, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

}  // namespace topobound::cli

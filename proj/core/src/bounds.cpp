#include "topobound/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "topobound/boxes.hpp"
#include "topobound/coloring.hpp"
#include "topobound/constructions.hpp"
#include "topobound/cyclic_polytope.hpp"

namespace topobound {

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass:
      return "pass";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool BoundsReport::any_fail() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status == VerdictStatus::fail; });
}

const Verdict* BoundsReport::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

namespace {

std::string str(int v) { return std::to_string(v); }

Verdict compare_le(const std::string& name, const std::optional<int>& lhs, const std::string& lhs_name,
                   const std::optional<int>& rhs, const std::string& rhs_name) {
  Verdict v{name, VerdictStatus::skipped, ""};
  if (!lhs || !rhs) {
    v.detail = (!lhs ? lhs_name : rhs_name) + " unavailable";
    return v;
  }
  v.status = *lhs <= *rhs ? VerdictStatus::pass : VerdictStatus::fail;
  v.detail = lhs_name + "=" + str(*lhs) + (*lhs <= *rhs ? " <= " : " > ") + rhs_name + "=" + str(*rhs);
  return v;
}

}  // namespace

BoundsReport hierarchy_report(const Graph& graph, const std::optional<SetSystem>& system,
                              const ReportOptions& options) {
  require_box_graph(graph);
  BoundsReport r;
  r.instance = options.instance;
  r.n_vertices = graph.vertex_count();
  r.n_edges = graph.edge_count();
  auto omit = [&](const std::string& what, const std::exception& e) {
    r.incomplete = true;
    r.omitted.push_back(what + ": " + e.what());
  };

  r.chi_greedy = greedy_coloring(graph, degree_order(graph)).colors_used;
  try {
    r.chi_exact = exact_chromatic_number(graph, options.budget);
  } catch (const ResourceLimit& e) {
    omit("chi_exact", e);
  }

  SetSystem f;
  if (system) {
    if (system->size() != graph.vertex_count() || !(kneser_graph_of(*system) == graph)) {
      throw InvalidArgument("set system does not represent the graph as a Kneser graph");
    }
    f = *system;
    r.presentation = "given";
  } else {
    f = kneser_representation(graph, KneserMode::clique_cover);
    r.presentation = "clique_cover";
  }
  r.ground_size = f.ground_size();
  r.set_count = f.size();
  const int n = f.ground_size();

  try {
    Z2Complex b = box_complex(graph, BoxVariant::B, options.cap);
    r.b_index_interval = index_interval(b, options.cap);
    r.lovasz_lower = r.b_index_interval->lower + 2;
  } catch (const ResourceLimit& e) {
    omit("b_index_interval", e);
  }
  std::string b0_note = "B index interval is not a single point";
  if (r.b_index_interval && r.b_index_interval->is_point()) {
    try {
      r.b0_index_interval = index_interval(box_complex(graph, BoxVariant::B0, options.cap), options.cap);
    } catch (const ResourceLimit& e) {
      b0_note = std::string("B0 too large: ") + e.what();
    }
  }

  std::optional<SimplicialComplex> k;
  try {
    k = free_complex(f, options.cap);
    r.dolnikov_kriz = n - 1 - deleted_join_dimension(*k);
  } catch (const ResourceLimit& e) {
    omit("dolnikov_kriz", e);
  }
  if (n <= 63) {
    try {
      r.cd2_brute = cd2(f, Cd2Method::brute, options.cd2_check_budget, options.cap).value;
    } catch (const ResourceLimit&) {
      // cross-check only
    }
  }
  std::optional<int> explicit_join_dim;
  if (k) {
    try {
      Z2Complex join = deleted_join(*k, options.cap);
      explicit_join_dim = join.complex().dimension();
      IndexInterval ind = index_interval(join, options.cap);
      SarkariaInterval s;
      s.lower = ind.upper ? n - 1 - *ind.upper : n - 1 - explicit_join_dim.value();
      s.upper = n - 1 - ind.lower;
      r.sarkaria_interval = s;
    } catch (const ResourceLimit& e) {
      omit("sarkaria_interval", e);
    }
  }
  try {
    r.barany = barany_bound_cyclic(f, options.cap);
  } catch (const ResourceLimit& e) {
    omit("barany", e);
  }
  if (!has_four_cycle(graph)) {
    try {
      auto retraction = c4free_retraction(graph, options.cap);
      r.c4free = C4FreeSummary{retraction.check.verdict, retraction.image_dimension};
    } catch (const ResourceLimit& e) {
      omit("c4free", e);
    }
  }

  r.verdicts.push_back(compare_le("v1_lovasz_le_chi", r.lovasz_lower, "lovasz_lower", r.chi_exact, "chi"));
  r.verdicts.push_back(
      compare_le("v2_dolnikov_kriz_le_chi", r.dolnikov_kriz, "dolnikov_kriz", r.chi_exact, "chi"));
  {
    Verdict v{"v3_sarkaria_lower_eq_cd2", VerdictStatus::skipped, ""};
    if (r.sarkaria_interval && r.dolnikov_kriz) {
      const int lower = r.sarkaria_interval->lower;
      v.status = lower == *r.dolnikov_kriz ? VerdictStatus::pass : VerdictStatus::fail;
      v.detail = "sarkaria_lower=" + str(lower) + ", dolnikov_kriz=" + str(*r.dolnikov_kriz);
      if (r.cd2_brute) {
        if (*r.cd2_brute != *r.dolnikov_kriz) v.status = VerdictStatus::fail;
        v.detail += ", cd2_brute=" + str(*r.cd2_brute);
      }
    } else {
      v.detail = "deleted join unavailable";
    }
    r.verdicts.push_back(v);
  }
  {
    Verdict v{"v4_box_gap", VerdictStatus::skipped, b0_note};
    if (r.b_index_interval && r.b0_index_interval) {
      if (r.b0_index_interval->is_point()) {
        const int b = r.b_index_interval->lower;
        const int b0 = r.b0_index_interval->lower;
        v.status = (b <= b0 && b0 <= b + 1) ? VerdictStatus::pass : VerdictStatus::fail;
        v.detail = "ind B=" + str(b) + ", ind B0=" + str(b0);
      } else {
        v.detail = "B0 index interval " + r.b0_index_interval->to_string() + " is not a single point";
      }
    }
    r.verdicts.push_back(v);
  }
  {
    std::optional<int> upper;
    if (r.sarkaria_interval) upper = r.sarkaria_interval->upper;
    Verdict v = compare_le("v5_barany_le_sarkaria_upper", r.barany, "barany", upper, "sarkaria_upper");
    if (!r.barany && r.sarkaria_interval) v.detail = "no cyclic polytope fits";
    r.verdicts.push_back(v);
  }
  {
    Verdict v = compare_le("barany_le_chi", r.barany, "barany", r.chi_exact, "chi");
    if (!r.barany && r.chi_exact) v.detail = "no cyclic polytope fits";
    r.verdicts.push_back(v);
  }
  {
    Verdict v{"c4free_index_le_1", VerdictStatus::skipped, "graph has a 4-cycle"};
    if (r.c4free) {
      const bool ok = r.c4free->verified && r.c4free->image_dimension <= 1 &&
                      (!r.b_index_interval || r.b_index_interval->lower <= 1);
      v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
      std::ostringstream os;
      os << "retraction " << (r.c4free->verified ? "verified" : "rejected")
         << ", image dimension " << r.c4free->image_dimension;
      if (r.b_index_interval) os << ", B index lower " << r.b_index_interval->lower;
      v.detail = os.str();
    } else if (!has_four_cycle(graph)) {
      v.detail = "retraction unavailable";
    }
    r.verdicts.push_back(v);
  }
  return r;
}

}  // namespace topobound

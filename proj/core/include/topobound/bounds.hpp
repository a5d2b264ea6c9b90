#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topobound/error.hpp"
#include "topobound/graph.hpp"
#include "topobound/homology.hpp"
#include "topobound/set_system.hpp"

namespace topobound {

enum class VerdictStatus { pass, fail, skipped };

std::string to_string(VerdictStatus status);

struct Verdict {
  std::string name;
  VerdictStatus status = VerdictStatus::skipped;
  std::string detail;
};

/// Lower and (if known) upper end of the interval n-1-ind of the deleted
/// join of K(F).
struct SarkariaInterval {
  int lower = 0;
  std::optional<int> upper;
};

struct C4FreeSummary {
  bool verified = false;
  int image_dimension = -1;
};

struct BoundsReport {
  std::string instance;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::optional<int> chi_exact;
  int chi_greedy = 0;
  std::optional<IndexInterval> b_index_interval;
  std::optional<int> lovasz_lower;
  std::optional<IndexInterval> b0_index_interval;
  std::string presentation;  // "given" or "clique_cover"
  int ground_size = 0;
  std::size_t set_count = 0;
  std::optional<int> dolnikov_kriz;
  std::optional<int> cd2_brute;
  std::optional<SarkariaInterval> sarkaria_interval;
  std::optional<int> barany;
  std::optional<C4FreeSummary> c4free;
  std::vector<Verdict> verdicts;
  bool incomplete = false;
  std::vector<std::string> omitted;  // quantities dropped by a resource limit

  /// True if some verdict failed (skipped verdicts do not count).
  bool any_fail() const;
  const Verdict* find(const std::string& name) const;
};

struct ReportOptions {
  std::string instance = "instance";
  std::size_t cap = kDefaultFaceCap;
  std::size_t budget = kDefaultSearchBudget;
  /// Node budget for the brute-force cd2 cross-check.
  std::size_t cd2_check_budget = 2'000'000;
};

/// Computes every bound of the hierarchy for G. Without a set system the
/// clique-cover Kneser representation of G is used. Throws
/// PreconditionError for graphs with isolated vertices and
/// InvalidArgument if the given system does not represent G.
BoundsReport hierarchy_report(const Graph& graph, const std::optional<SetSystem>& system,
                              const ReportOptions& options = {});

}  // namespace topobound

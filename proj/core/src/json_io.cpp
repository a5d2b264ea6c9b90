#include "topobound/json_io.hpp"

#include <sstream>

namespace topobound {

using nlohmann::json;

json label_to_json(const Label& label) {
  switch (label.kind()) {
    case Label::Kind::atom:
      return json{{"atom", label.atom_value()}};
    case Label::Kind::signed_vertex:
      return json{{"signed", json::array({label_to_json(label.vertex()), label.shore()})}};
    case Label::Kind::set: {
      json members = json::array();
      for (const auto& m : label.members()) members.push_back(label_to_json(m));
      return json{{"set", members}};
    }
    case Label::Kind::pair:
      return json{{"pair", json::array({label_to_json(label.first()), label_to_json(label.second())})}};
    case Label::Kind::pole: {
      json j{{"pole", label.pole_side() == Label::Pole::south ? "south" : "north"}};
      if (label.pole_level() > 1) j["level"] = label.pole_level();
      return j;
    }
  }
  return json();
}

Label label_from_json(const json& j) {
  try {
    if (!j.is_object() || j.empty()) throw ParseError("label must be a tagged object");
    if (j.contains("atom")) return Label::atom(j.at("atom").get<std::int64_t>());
    if (j.contains("signed")) {
      const auto& a = j.at("signed");
      if (!a.is_array() || a.size() != 2) throw ParseError("signed label needs [label, shore]");
      return Label::signed_vertex(label_from_json(a[0]), a[1].get<int>());
    }
    if (j.contains("set")) {
      std::vector<Label> members;
      for (const auto& m : j.at("set")) members.push_back(label_from_json(m));
      return Label::set(std::move(members));
    }
    if (j.contains("pair")) {
      const auto& a = j.at("pair");
      if (!a.is_array() || a.size() != 2) throw ParseError("pair label needs two entries");
      return Label::pair(label_from_json(a[0]), label_from_json(a[1]));
    }
    if (j.contains("pole")) {
      const auto side = j.at("pole").get<std::string>();
      if (side != "south" && side != "north") throw ParseError("pole must be south or north");
      const int level = j.contains("level") ? j.at("level").get<int>() : 1;
      return Label::pole(side == "south" ? Label::Pole::south : Label::Pole::north, level);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("label: ") + e.what());
  }
  throw ParseError("unknown label tag");
}

json complex_to_json(const SimplicialComplex& complex) {
  json vertices = json::array();
  for (const auto& l : complex.labels()) vertices.push_back(label_to_json(l));
  json facets = json::array();
  for (const auto& f : complex.facets()) facets.push_back(f);
  return json{{"vertices", vertices}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j, std::size_t cap) {
  try {
    std::vector<Label> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(label_from_json(v));
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
    return SimplicialComplex::from_generators(std::move(labels), std::move(facets), cap);
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex: ") + e.what());
  }
}

json set_system_to_json(const SetSystem& system) {
  return json{{"n", system.ground_size()}, {"sets", system.sets()}};
}

SetSystem set_system_from_json(const json& j) {
  try {
    return SetSystem(j.at("n").get<int>(), j.at("sets").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("set system: ") + e.what());
  }
}

SetSystem parse_set_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("set system: ") + e.what());
  }
  return set_system_from_json(j);
}

json interval_to_json(const IndexInterval& interval) {
  json j{{"lower", interval.lower}};
  j["upper"] = interval.upper ? json(*interval.upper) : json(nullptr);
  return j;
}

json betti_to_json(const BettiProfile& betti) {
  json j{{"reduced", betti.betti}};
  if (betti.minus_one) j["minus_one"] = betti.minus_one;
  return j;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json report_to_json(const BoundsReport& r) {
  json j;
  j["instance"] = r.instance;
  j["n_vertices"] = r.n_vertices;
  j["n_edges"] = r.n_edges;
  j["chi_exact"] = opt(r.chi_exact);
  j["chi_greedy"] = r.chi_greedy;
  j["b_index_interval"] = r.b_index_interval ? interval_to_json(*r.b_index_interval) : json(nullptr);
  j["b0_index_interval"] = r.b0_index_interval ? interval_to_json(*r.b0_index_interval) : json(nullptr);
  j["lovasz_lower"] = opt(r.lovasz_lower);
  j["presentation"] = r.presentation;
  j["ground_size"] = r.ground_size;
  j["set_count"] = r.set_count;
  j["dolnikov_kriz"] = opt(r.dolnikov_kriz);
  j["cd2_brute"] = opt(r.cd2_brute);
  if (r.sarkaria_interval) {
    j["sarkaria_interval"] = json{{"lower", r.sarkaria_interval->lower},
                                  {"upper", opt(r.sarkaria_interval->upper)}};
  } else {
    j["sarkaria_interval"] = nullptr;
  }
  j["barany"] = opt(r.barany);
  if (r.c4free) {
    j["c4free"] = json{{"verified", r.c4free->verified}, {"image_dimension", r.c4free->image_dimension}};
  } else {
    j["c4free"] = nullptr;
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back(json{{"name", v.name},
                            {"status", to_string(v.status)},
                            {"pass", v.status == VerdictStatus::pass},
                            {"detail", v.detail}});
  }
  j["verdicts"] = verdicts;
  j["incomplete"] = r.incomplete;
  j["omitted"] = r.omitted;
  return j;
}

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv_header() {
  return "instance,n_vertices,n_edges,chi_exact,chi_greedy,lovasz_lower,b_lower,b_upper,"
         "b0_lower,b0_upper,presentation,ground_size,dolnikov_kriz,sarkaria_lower,sarkaria_upper,"
         "barany,incomplete,verdicts";
}

std::string report_csv_row(const BoundsReport& r) {
  std::ostringstream os;
  auto lower = [](const std::optional<IndexInterval>& i) {
    return i ? std::to_string(i->lower) : std::string();
  };
  auto upper = [](const std::optional<IndexInterval>& i) {
    return i && i->upper ? std::to_string(*i->upper) : std::string();
  };
  std::string verdicts;
  for (const auto& v : r.verdicts) {
    if (!verdicts.empty()) verdicts += ';';
    verdicts += v.name + "=" + to_string(v.status);
  }
  os << csv_quote(r.instance) << ',' << r.n_vertices << ',' << r.n_edges << ',' << cell(r.chi_exact)
     << ',' << r.chi_greedy << ',' << cell(r.lovasz_lower) << ',' << lower(r.b_index_interval) << ','
     << upper(r.b_index_interval) << ',' << lower(r.b0_index_interval) << ','
     << upper(r.b0_index_interval) << ',' << r.presentation << ',' << r.ground_size << ','
     << cell(r.dolnikov_kriz) << ','
     << (r.sarkaria_interval ? std::to_string(r.sarkaria_interval->lower) : "") << ','
     << (r.sarkaria_interval ? cell(r.sarkaria_interval->upper) : "") << ',' << cell(r.barany) << ','
     << (r.incomplete ? "true" : "false") << ',' << csv_quote(verdicts);
  return os.str();
}

}  // namespace topobound

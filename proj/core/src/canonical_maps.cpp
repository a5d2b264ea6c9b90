#include "topobound/canonical_maps.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "topobound/constructions.hpp"

namespace topobound {

namespace {

struct Shores {
  std::uint64_t first;
  std::uint64_t second;
};

/// The members of a chain label (a set of shore labels), smallest first.
std::vector<Shores> decode_chain(const Label& chain) {
  std::vector<Shores> out;
  for (const auto& m : chain.members()) {
    auto [a, b] = decode_shores(m);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(), [](const Shores& x, const Shores& y) {
    return std::popcount(x.first) + std::popcount(x.second) <
           std::popcount(y.first) + std::popcount(y.second);
  });
  return out;
}

std::uint64_t first_nonempty(const std::vector<std::uint64_t>& sets) {
  for (auto s : sets) {
    if (s != 0) return s;
  }
  throw Error("interleaved chain has no nonempty set");
}

}  // namespace

std::vector<CanonicalMapId> all_canonical_maps() {
  return {CanonicalMapId::m1,          CanonicalMapId::m2_forward, CanonicalMapId::m2_backward,
          CanonicalMapId::m3,          CanonicalMapId::m4,         CanonicalMapId::m5_forward,
          CanonicalMapId::m5_backward, CanonicalMapId::m6_forward, CanonicalMapId::m6_backward,
          CanonicalMapId::m7,          CanonicalMapId::m8,         CanonicalMapId::m9};
}

std::string to_string(CanonicalMapId id) {
  switch (id) {
    case CanonicalMapId::m1:
      return "M1";
    case CanonicalMapId::m2_forward:
      return "M2>";
    case CanonicalMapId::m2_backward:
      return "M2<";
    case CanonicalMapId::m3:
      return "M3";
    case CanonicalMapId::m4:
      return "M4";
    case CanonicalMapId::m5_forward:
      return "M5>";
    case CanonicalMapId::m5_backward:
      return "M5<";
    case CanonicalMapId::m6_forward:
      return "M6>";
    case CanonicalMapId::m6_backward:
      return "M6<";
    case CanonicalMapId::m7:
      return "M7";
    case CanonicalMapId::m8:
      return "M8";
    case CanonicalMapId::m9:
      return "M9";
  }
  return "?";
}

std::string describe(CanonicalMapId id) {
  switch (id) {
    case CanonicalMapId::m1:
      return "B -> B0";
    case CanonicalMapId::m2_forward:
      return "sd Bedge -> B1";
    case CanonicalMapId::m2_backward:
      return "B1 -> sd Bedge";
    case CanonicalMapId::m3:
      return "B1 -> sd B";
    case CanonicalMapId::m4:
      return "sd B0 -> susp B1";
    case CanonicalMapId::m5_forward:
      return "Bchain -> B1";
    case CanonicalMapId::m5_backward:
      return "B1 -> Bchain";
    case CanonicalMapId::m6_forward:
      return "Bsark -> sd B0";
    case CanonicalMapId::m6_backward:
      return "sd B0 -> Bsark";
    case CanonicalMapId::m7:
      return "sd sd B -> B1";
    case CanonicalMapId::m8:
      return "sd L -> B1";
    case CanonicalMapId::m9:
      return "sd B1 -> sd L";
  }
  return "?";
}

struct CanonicalMaps::Cache {
  std::optional<Z2Complex> b, b0, b1, bedge, l, bsark, bchain;
  std::optional<Z2Complex> sd_b, sd_b0, sd_b1, sd_bedge, sd_l, sd_sd_b, susp_b1;
};

CanonicalMaps::CanonicalMaps(Graph graph, std::optional<SetSystem> system, std::size_t cap)
    : graph_(std::move(graph)), cap_(cap), cache_(std::make_unique<Cache>()) {
  require_box_graph(graph_);
  if (system) {
    if (system->size() != graph_.vertex_count() || !(kneser_graph_of(*system) == graph_)) {
      throw PreconditionError("set system does not represent the graph as a Kneser graph");
    }
    system_ = std::move(*system);
  } else {
    system_ = kneser_representation(graph_, KneserMode::clique_cover);
  }
}

CanonicalMaps::~CanonicalMaps() = default;

CanonicalMapResult CanonicalMaps::run(CanonicalMapId id) {
  Cache& c = *cache_;
  const std::size_t cap = cap_;
  const Graph& g = graph_;
  auto get = [&](std::optional<Z2Complex>& slot, const std::function<Z2Complex()>& make) -> const Z2Complex& {
    if (!slot) slot.emplace(make());
    return *slot;
  };
  auto B = [&]() -> const Z2Complex& { return get(c.b, [&] { return box_complex(g, BoxVariant::B, cap); }); };
  auto B0 = [&]() -> const Z2Complex& { return get(c.b0, [&] { return box_complex(g, BoxVariant::B0, cap); }); };
  auto B1 = [&]() -> const Z2Complex& { return get(c.b1, [&] { return box_complex(g, BoxVariant::B1, cap); }); };
  auto Bedge = [&]() -> const Z2Complex& {
    return get(c.bedge, [&] { return box_complex(g, BoxVariant::Bedge, cap); });
  };
  auto L = [&]() -> const Z2Complex& { return get(c.l, [&] { return lovasz_complex(g, cap); }); };
  auto Bsark = [&]() -> const Z2Complex& {
    return get(c.bsark, [&] { return kneser_box_complex(system_, BoxVariant::Bsark, cap); });
  };
  auto Bchain = [&]() -> const Z2Complex& {
    return get(c.bchain, [&] { return kneser_box_complex(system_, BoxVariant::Bchain, cap); });
  };
  auto sdB = [&]() -> const Z2Complex& { return get(c.sd_b, [&] { return barycentric_subdivision(B(), cap); }); };
  auto sdB0 = [&]() -> const Z2Complex& { return get(c.sd_b0, [&] { return barycentric_subdivision(B0(), cap); }); };
  auto sdB1 = [&]() -> const Z2Complex& { return get(c.sd_b1, [&] { return barycentric_subdivision(B1(), cap); }); };
  auto sdBedge = [&]() -> const Z2Complex& {
    return get(c.sd_bedge, [&] { return barycentric_subdivision(Bedge(), cap); });
  };
  auto sdL = [&]() -> const Z2Complex& { return get(c.sd_l, [&] { return barycentric_subdivision(L(), cap); }); };
  auto sdsdB = [&]() -> const Z2Complex& {
    return get(c.sd_sd_b, [&] { return barycentric_subdivision(sdB(), cap); });
  };
  auto suspB1 = [&]() -> const Z2Complex& { return get(c.susp_b1, [&] { return suspension(B1(), cap); }); };

  std::vector<std::uint64_t> member_masks;
  for (const auto& s : system_.sets()) {
    std::uint64_t m = 0;
    for (int e : s) m |= std::uint64_t{1} << (e - 1);
    member_masks.push_back(m);
  }
  // {v : F_v inside b} and the union of F_v over v in a.
  auto members_inside = [&](std::uint64_t b) {
    std::uint64_t out = 0;
    for (std::size_t v = 0; v < member_masks.size(); ++v) {
      if ((member_masks[v] & b) == member_masks[v]) out |= std::uint64_t{1} << v;
    }
    return out;
  };
  auto union_of = [&](std::uint64_t a) {
    std::uint64_t out = 0;
    for (; a; a &= a - 1) out |= member_masks[std::countr_zero(a)];
    return out;
  };
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t everyone = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto cn = [&](std::uint64_t a) {
    std::uint64_t out = everyone;
    for (; a; a &= a - 1) out &= nbr[std::countr_zero(a)];
    return out;
  };

  auto to_kneser = [&](const Label& l) {
    auto [b1, b2] = decode_shores(l, true);
    return shores_label(members_inside(b1), members_inside(b2));
  };
  auto from_kneser = [&](const Label& l) {
    auto [a1, a2] = decode_shores(l);
    return shores_label(union_of(a1), union_of(a2), true);
  };

  const Z2Complex* source = nullptr;
  const Z2Complex* target = nullptr;
  std::function<Label(const Label&)> formula;
  switch (id) {
    case CanonicalMapId::m1:
      source = &B();
      target = &B0();
      formula = [](const Label& l) { return l; };
      break;
    case CanonicalMapId::m2_forward:
      source = &sdBedge();
      target = &B1();
      formula = [](const Label& l) {
        std::uint64_t tails = 0;
        std::uint64_t heads = 0;
        for (const auto& arc : l.members()) {
          tails |= std::uint64_t{1} << arc.first().atom_value();
          heads |= std::uint64_t{1} << arc.second().atom_value();
        }
        return shores_label(tails, heads);
      };
      break;
    case CanonicalMapId::m2_backward:
      source = &B1();
      target = &sdBedge();
      formula = [](const Label& l) {
        std::vector<Label> arcs;
        for (const auto& a : l.members()) {
          if (a.shore() != 1) continue;
          for (const auto& b : l.members()) {
            if (b.shore() == 2) arcs.push_back(Label::pair(a.vertex(), b.vertex()));
          }
        }
        return Label::set(std::move(arcs));
      };
      break;
    case CanonicalMapId::m3:
      source = &B1();
      target = &sdB();
      formula = [](const Label& l) { return l; };
      break;
    case CanonicalMapId::m4: {
      source = &sdB0();
      target = &suspB1();
      const auto& susp = dynamic_cast<const Suspension&>(target->complex());
      Label south = susp.south_label();
      Label north = susp.north_label();
      formula = [south, north](const Label& l) {
        auto [a1, a2] = decode_shores(l);
        if (a2 == 0) return south;
        if (a1 == 0) return north;
        return l;
      };
      break;
    }
    case CanonicalMapId::m5_forward:
      source = &Bchain();
      target = &B1();
      formula = to_kneser;
      break;
    case CanonicalMapId::m5_backward:
      source = &B1();
      target = &Bchain();
      formula = from_kneser;
      break;
    case CanonicalMapId::m6_forward:
      source = &Bsark();
      target = &sdB0();
      formula = to_kneser;
      break;
    case CanonicalMapId::m6_backward:
      source = &sdB0();
      target = &Bsark();
      formula = from_kneser;
      break;
    case CanonicalMapId::m7:
      source = &sdsdB();
      target = &B1();
      formula = [&](const Label& l) {
        auto chain = decode_chain(l);
        std::vector<std::uint64_t> firsts;
        std::vector<std::uint64_t> seconds;
        for (const auto& s : chain) {
          firsts.push_back(s.first);
          seconds.push_back(s.second);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
          firsts.push_back(cn(it->second));
          seconds.push_back(cn(it->first));
        }
        return shores_label(first_nonempty(firsts), first_nonempty(seconds));
      };
      break;
    case CanonicalMapId::m8:
      source = &sdL();
      target = &B1();
      formula = [&](const Label& l) {
        std::vector<std::uint64_t> chain;
        for (const auto& m : l.members()) chain.push_back(decode_atoms(m));
        std::sort(chain.begin(), chain.end(),
                  [](auto x, auto y) { return std::popcount(x) < std::popcount(y); });
        return shores_label(chain.front(), cn(chain.back()));
      };
      break;
    case CanonicalMapId::m9:
      source = &sdB1();
      target = &sdL();
      formula = [&](const Label& l) {
        std::vector<Label> closed;
        for (const auto& s : decode_chain(l)) {
          closed.push_back(atoms_label(cn(cn(s.first))));
          closed.push_back(atoms_label(cn(s.second)));
        }
        return Label::set(std::move(closed));
      };
      break;
  }

  CanonicalMapResult result;
  result.id = id;
  auto arrow = describe(id);
  result.source = arrow.substr(0, arrow.find(" -> "));
  result.target = arrow.substr(arrow.find(" -> ") + 4);
  result.source_vertices = source->complex().vertex_count();
  result.target_vertices = target->complex().vertex_count();
  result.images = map_labels(source->complex(), formula);
  result.check = verify_z2_map(*source, *target, result.images, cap);
  return result;
}

}  // namespace topobound

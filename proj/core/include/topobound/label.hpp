#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace topobound {

/// Structured vertex name. Constructions (deleted joins, subdivisions,
/// suspensions, box complexes) name their vertices by terms built from the
/// vertices of their inputs, so every map between complexes can be written
/// as a formula on labels.
///
/// Labels are totally ordered: first by kind (atom < signed < set < pair <
/// pole), then structurally. Set members are kept sorted and deduplicated,
/// so structurally equal sets compare equal.
class Label {
 public:
  enum class Kind : std::uint8_t { atom, signed_vertex, set, pair, pole };
  enum class Pole : std::uint8_t { south, north };

  Label() = default;  // atom(0)

  static Label atom(std::int64_t value);
  /// A vertex together with its copy index ("shore") in V x [2].
  static Label signed_vertex(Label vertex, int shore);
  static Label set(std::vector<Label> members);
  static Label pair(Label first, Label second);
  /// Suspension apex. `level` distinguishes the poles of iterated
  /// suspensions; new poles always sort after every existing label.
  static Label pole(Pole side, int level = 1);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::atom; }
  bool is_signed() const noexcept { return kind_ == Kind::signed_vertex; }
  bool is_set() const noexcept { return kind_ == Kind::set; }
  bool is_pair() const noexcept { return kind_ == Kind::pair; }
  bool is_pole() const noexcept { return kind_ == Kind::pole; }

  std::int64_t atom_value() const;
  const Label& vertex() const;
  int shore() const;
  const std::vector<Label>& members() const;
  const Label& first() const;
  const Label& second() const;
  Pole pole_side() const;
  int pole_level() const;

  /// Largest pole level occurring anywhere inside this term (0 if none).
  int max_pole_level() const;

  std::strong_ordering operator<=>(const Label& other) const;
  bool operator==(const Label& other) const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::atom;
  std::int64_t value_ = 0;  // atom value, shore, or pole side
  int level_ = 0;           // pole level
  std::vector<Label> children_;
};

/// Shore swap (v,1) <-> (v,2); applied memberwise to sets.
Label swap_shores(const Label& label);

}  // namespace topobound

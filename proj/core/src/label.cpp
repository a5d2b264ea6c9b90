#include "topobound/label.hpp"

#include <algorithm>
#include <sstream>

#include "topobound/error.hpp"

namespace topobound {

Label Label::atom(std::int64_t value) {
  Label l;
  l.kind_ = Kind::atom;
  l.value_ = value;
  return l;
}

Label Label::signed_vertex(Label vertex, int shore) {
  if (shore != 1 && shore != 2) throw InvalidArgument("shore must be 1 or 2");
  Label l;
  l.kind_ = Kind::signed_vertex;
  l.value_ = shore;
  l.children_.push_back(std::move(vertex));
  return l;
}

Label Label::set(std::vector<Label> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Label l;
  l.kind_ = Kind::set;
  l.children_ = std::move(members);
  return l;
}

Label Label::pair(Label first, Label second) {
  Label l;
  l.kind_ = Kind::pair;
  l.children_.reserve(2);
  l.children_.push_back(std::move(first));
  l.children_.push_back(std::move(second));
  return l;
}

Label Label::pole(Pole side, int level) {
  if (level < 1) throw InvalidArgument("pole level must be positive");
  Label l;
  l.kind_ = Kind::pole;
  l.value_ = static_cast<std::int64_t>(side);
  l.level_ = level;
  return l;
}

std::int64_t Label::atom_value() const {
  if (kind_ != Kind::atom) throw InvalidArgument("label is not an atom: " + to_string());
  return value_;
}

const Label& Label::vertex() const {
  if (kind_ != Kind::signed_vertex) throw InvalidArgument("label is not signed: " + to_string());
  return children_.front();
}

int Label::shore() const {
  if (kind_ != Kind::signed_vertex) throw InvalidArgument("label is not signed: " + to_string());
  return static_cast<int>(value_);
}

const std::vector<Label>& Label::members() const {
  if (kind_ != Kind::set) throw InvalidArgument("label is not a set: " + to_string());
  return children_;
}

const Label& Label::first() const {
  if (kind_ != Kind::pair) throw InvalidArgument("label is not a pair: " + to_string());
  return children_[0];
}

const Label& Label::second() const {
  if (kind_ != Kind::pair) throw InvalidArgument("label is not a pair: " + to_string());
  return children_[1];
}

Label::Pole Label::pole_side() const {
  if (kind_ != Kind::pole) throw InvalidArgument("label is not a pole: " + to_string());
  return static_cast<Pole>(value_);
}

int Label::pole_level() const {
  if (kind_ != Kind::pole) throw InvalidArgument("label is not a pole: " + to_string());
  return level_;
}

int Label::max_pole_level() const {
  int level = kind_ == Kind::pole ? level_ : 0;
  for (const auto& c : children_) level = std::max(level, c.max_pole_level());
  return level;
}

std::strong_ordering Label::operator<=>(const Label& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  switch (kind_) {
    case Kind::atom:
      return value_ <=> other.value_;
    case Kind::pole:
      if (auto c = level_ <=> other.level_; c != 0) return c;
      return value_ <=> other.value_;
    case Kind::signed_vertex:
      if (auto c = children_[0] <=> other.children_[0]; c != 0) return c;
      return value_ <=> other.value_;
    case Kind::set:
    case Kind::pair:
      return std::lexicographical_compare_three_way(children_.begin(), children_.end(),
                                                    other.children_.begin(),
                                                    other.children_.end());
  }
  return std::strong_ordering::equal;
}

bool Label::operator==(const Label& other) const { return (*this <=> other) == 0; }

std::string Label::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::atom:
      os << value_;
      break;
    case Kind::signed_vertex:
      os << '(' << children_[0].to_string() << ',' << value_ << ')';
      break;
    case Kind::set: {
      os << '{';
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) os << ',';
        os << children_[i].to_string();
      }
      os << '}';
      break;
    }
    case Kind::pair:
      os << '<' << children_[0].to_string() << ',' << children_[1].to_string() << '>';
      break;
    case Kind::pole:
      os << (value_ == 0 ? 'S' : 'N');
      if (level_ > 1) os << level_;
      break;
  }
  return os.str();
}

Label swap_shores(const Label& label) {
  switch (label.kind()) {
    case Label::Kind::signed_vertex:
      return Label::signed_vertex(label.vertex(), 3 - label.shore());
    case Label::Kind::set: {
      std::vector<Label> out;
      out.reserve(label.members().size());
      for (const auto& m : label.members()) out.push_back(swap_shores(m));
      return Label::set(std::move(out));
    }
    default:
      throw InvalidArgument("shore swap undefined for " + label.to_string());
  }
}

}  // namespace topobound

#include "fibercover/label.hpp"

#include <cctype>

#include "fibercover/error.hpp"

namespace fibercover {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

int rank(const BranchLabel& l) {
  if (l.is_infinity()) return 2;
  return l.coordinate() ? 0 : 1;
}

}  // namespace

BranchLabel BranchLabel::named(std::string name) {
  if (!is_identifier(name))
    throw Error(ErrorKind::syntax, "invalid label name '" + name + "'");
  BranchLabel l;
  l.name_ = std::move(name);
  return l;
}

BranchLabel BranchLabel::at(GaussianRational coordinate) {
  BranchLabel l;
  l.coordinate_ = std::move(coordinate);
  return l;
}

BranchLabel BranchLabel::named_at(std::string name, GaussianRational coordinate) {
  BranchLabel l = named(std::move(name));
  if (l.is_infinity()) throw Error(ErrorKind::syntax, "inf cannot carry a coordinate");
  l.coordinate_ = std::move(coordinate);
  return l;
}

BranchLabel BranchLabel::parse(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq != std::string_view::npos) {
    auto coord = GaussianRational::parse(text.substr(eq + 1));
    if (!coord) throw Error(ErrorKind::syntax, "invalid label coordinate in '" + std::string(text) + "'");
    return named_at(std::string(text.substr(0, eq)), *coord);
  }
  if (auto coord = GaussianRational::parse(text)) return at(*coord);
  if (is_identifier(text)) return named(std::string(text));
  throw Error(ErrorKind::syntax, "invalid branch label '" + std::string(text) + "'");
}

std::string BranchLabel::to_string() const {
  if (name_ && coordinate_) return *name_ + "=" + coordinate_->to_string();
  if (name_) return *name_;
  return coordinate_->to_string();
}

bool BranchLabel::same_point(const BranchLabel& other) const {
  if (name_ && other.name_) {
    if (*name_ != *other.name_) return false;
    if (coordinate_ && other.coordinate_ && !(*coordinate_ == *other.coordinate_))
      throw Error(ErrorKind::label_conflict,
                  "label '" + *name_ + "' used with coordinates " + coordinate_->to_string() +
                      " and " + other.coordinate_->to_string());
    return true;
  }
  if (coordinate_ && other.coordinate_) return *coordinate_ == *other.coordinate_;
  return false;
}

bool canonical_less(const BranchLabel& a, const BranchLabel& b) {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  if (ra == 0) {
    if (*a.coordinate_ < *b.coordinate_) return true;
    if (*b.coordinate_ < *a.coordinate_) return false;
    return a.name_.value_or("") < b.name_.value_or("");
  }
  return a.name_.value_or("") < b.name_.value_or("");
}

}  // namespace fibercover

#include "fibercover/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "fibercover/error.hpp"

namespace fibercover {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_cycle: return "malformed-cycle";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::degree_mismatch: return "degree-mismatch";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::validation: return "validation";
    case ErrorKind::inconsistent_cover: return "inconsistent-cover";
    case ErrorKind::label_conflict: return "label-conflict";
    case ErrorKind::label_order_conflict: return "label-order-conflict";
    case ErrorKind::base_genus_mismatch: return "base-genus-mismatch";
    case ErrorKind::not_belyi_pair: return "not-a-belyi-pair";
    case ErrorKind::inconsistent_dessin: return "inconsistent-dessin";
    case ErrorKind::resolution_failure: return "resolution-failure";
    case ErrorKind::tracking_failure: return "tracking-failure";
    case ErrorKind::monodromy_inconsistency: return "monodromy-inconsistency";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::resolution_failure:
    case ErrorKind::tracking_failure:
    case ErrorKind::monodromy_inconsistency:
      return 2;
    default:
      return 1;
  }
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y])
      throw Error(ErrorKind::invalid_argument, "image list is not a bijection");
    seen[y] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point x = cycle[k];
      if (x >= degree)
        throw Error(ErrorKind::out_of_range, "cycle point out of range");
      if (used[x])
        throw Error(ErrorKind::malformed_cycle, "repeated point in cycles");
      used[x] = true;
      p.images_[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), 0);
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = images_[x]) seen[x] = true;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorKind::degree_mismatch, "product of permutations of different degree");
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), 0);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

Permutation conjugate(const Permutation& g, const Permutation& a) {
  return g * a * g.inverse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

CycleType::CycleType(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

CycleType CycleType::trivial(std::size_t degree) {
  return CycleType(std::vector<std::size_t>(degree, 1));
}

std::size_t CycleType::degree() const noexcept {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::size_t{0});
}

std::size_t CycleType::lcm() const {
  std::size_t l = 1;
  for (std::size_t len : lengths_) l = std::lcm(l, len);
  return l;
}

bool CycleType::is_trivial() const noexcept {
  return std::all_of(lengths_.begin(), lengths_.end(), [](std::size_t l) { return l == 1; });
}

bool CycleType::is_uniform() const noexcept {
  return std::adjacent_find(lengths_.begin(), lengths_.end(), std::not_equal_to<>()) ==
         lengths_.end();
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < lengths_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(lengths_[k]);
  }
  return out + "]";
}

CycleType cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(c.size());
  return CycleType(std::move(lengths));
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](ErrorKind kind, const std::string& msg, std::size_t pos) -> Error {
    return Error(kind, "column " + std::to_string(pos + 1) + ": " + msg, pos + 1);
  };
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw fail(ErrorKind::malformed_cycle, "expected '('", i);
    std::size_t open = i++;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw fail(ErrorKind::malformed_cycle, "unterminated cycle", open);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!is_digit(text[i])) throw fail(ErrorKind::malformed_cycle, "expected a point", i);
      std::size_t start = i;
      unsigned long long value = 0;
      while (i < text.size() && is_digit(text[i])) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > 0xffffffffull) throw fail(ErrorKind::out_of_range, "point too large", start);
        ++i;
      }
      if (i < text.size() && !is_space(text[i]) && text[i] != ')')
        throw fail(ErrorKind::malformed_cycle, "expected space or ')'", i);
      if (value < 1 || value > degree)
        throw fail(ErrorKind::out_of_range,
                   "point " + std::to_string(value) + " outside 1.." + std::to_string(degree),
                   start);
      Point x = static_cast<Point>(value - 1);
      if (used[x])
        throw fail(ErrorKind::malformed_cycle, "repeated point " + std::to_string(value), start);
      used[x] = true;
      cycle.push_back(x);
    }
    if (cycle.empty()) throw fail(ErrorKind::malformed_cycle, "empty cycle", open);
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace fibercover

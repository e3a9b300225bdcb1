#include "fibercover/cover_io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fibercover/error.hpp"
#include "fibercover/expression.hpp"

namespace fibercover {

namespace {

struct Line {
  std::size_t number = 0;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    lines.push_back({++number, line});
    start = end + 1;
  }
  return lines;
}

bool blank(char c) { return c == ' ' || c == '\t'; }

// Cursor over one line; columns are 1-based.
class Cursor {
public:
  explicit Cursor(Line line) : line_(line) {}

  void skip() {
    while (pos_ < line_.text.size() && blank(line_.text[pos_])) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= line_.text.size();
  }
  std::size_t column() const { return pos_ + 1; }

  std::string_view word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && !blank(line_.text[pos_])) ++pos_;
    return line_.text.substr(start, pos_ - start);
  }

  std::string_view rest() {
    skip();
    std::string_view r = line_.text.substr(pos_);
    while (!r.empty() && blank(r.back())) r.remove_suffix(1);
    return r;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw Error(ErrorKind::syntax,
                "line " + std::to_string(line_.number) + ", column " + std::to_string(column) +
                    ": " + message,
                column);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_ + 1); }

  long integer() {
    skip();
    std::size_t col = column();
    std::string_view w = word();
    if (w.empty()) fail("expected an integer", col);
    long value = 0;
    for (char c : w) {
      if (c < '0' || c > '9') fail("expected a non-negative integer, got '" + std::string(w) + "'", col);
      value = value * 10 + (c - '0');
      if (value > 1'000'000) fail("integer too large", col);
    }
    return value;
  }

  Permutation cycles(std::string_view text, std::size_t offset, std::size_t degree) const {
    try {
      return parse_cycles(text, degree);
    } catch (const Error& e) {
      std::string message = e.what();
      if (auto colon = message.find(": "); message.rfind("column", 0) == 0 && colon != std::string::npos)
        message = message.substr(colon + 2);
      std::size_t column = offset + (e.column() ? e.column() - 1 : 0);
      throw Error(e.kind(),
                  "line " + std::to_string(line_.number) + ", column " + std::to_string(column) +
                      ": " + message,
                  column);
    }
  }

  std::size_t offset_of(std::string_view sub) const {
    return static_cast<std::size_t>(sub.data() - line_.text.data()) + 1;
  }

private:
  Line line_;
  std::size_t pos_ = 0;
};

std::string cycles_text(const Permutation& p) { return p.to_cycle_string(); }

}  // namespace

BranchedCover parse_cover_text(std::string_view text) {
  BranchedCover cover;
  bool have_version = false, have_genus = false, have_degree = false;
  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    if (cur.done()) continue;
    std::size_t key_column = cur.column();
    std::string_view key = cur.word();
    if (!have_version && key != "version") cur.fail("expected 'version 1' first", key_column);
    if (key == "version") {
      if (have_version) cur.fail("duplicate version line", key_column);
      std::size_t col = cur.column();
      if (cur.integer() != 1) cur.fail("unsupported version", col);
      have_version = true;
    } else if (key == "base_genus") {
      if (have_genus) cur.fail("duplicate base_genus line", key_column);
      cover.base_genus = static_cast<int>(cur.integer());
      have_genus = true;
    } else if (key == "degree") {
      if (have_degree) cur.fail("duplicate degree line", key_column);
      cur.skip();
      std::size_t col = cur.column();
      long n = cur.integer();
      if (n < 1) cur.fail("degree must be at least 1", col);
      cover.degree = static_cast<std::size_t>(n);
      have_degree = true;
    } else if (key == "handle" || key == "branch") {
      if (!have_genus || !have_degree)
        cur.fail("base_genus and degree must precede '" + std::string(key) + "'", key_column);
      if (key == "handle") {
        std::string_view body = cur.rest();
        auto semi = body.find(';');
        if (semi == std::string_view::npos) cur.fail("handle needs '<cycles> ; <cycles>'");
        std::string_view a = body.substr(0, semi), b = body.substr(semi + 1);
        cover.handles.push_back({cur.cycles(a, cur.offset_of(a), cover.degree),
                                 cur.cycles(b, cur.offset_of(b), cover.degree)});
      } else {
        cur.skip();
        std::size_t label_column = cur.column();
        std::string_view label_text = cur.word();
        if (label_text.empty()) cur.fail("branch needs a label");
        std::optional<BranchLabel> label;
        try {
          label = BranchLabel::parse(label_text);
        } catch (const Error& e) {
          cur.fail(e.what(), label_column);
        }
        std::string_view body = cur.rest();
        bool padding = false;
        if (body.size() >= 3 && body.substr(body.size() - 3) == "pad" &&
            (body.size() == 3 || blank(body[body.size() - 4]) || body[body.size() - 4] == ')')) {
          padding = true;
          body.remove_suffix(3);
        }
        cover.branch_points.push_back({*label, cur.cycles(body, cur.offset_of(body), cover.degree), padding});
      }
    } else {
      cur.fail("unknown keyword '" + std::string(key) + "'", key_column);
    }
  }
  if (!have_version) throw Error(ErrorKind::syntax, "line 1, column 1: missing 'version 1'", 1);
  if (!have_genus) throw Error(ErrorKind::syntax, "missing base_genus line");
  if (!have_degree) throw Error(ErrorKind::syntax, "missing degree line");
  return cover;
}

BranchedCover parse_cover_file(std::string_view text) {
  BranchedCover cover = parse_cover_text(text);
  ValidationReport report = validate(cover);
  if (!report.ok()) throw Error(ErrorKind::validation, report.summary());
  return cover;
}

std::string emit_cover_file(const BranchedCover& cover) {
  std::ostringstream os;
  os << "version 1\n";
  os << "base_genus " << cover.base_genus << "\n";
  os << "degree " << cover.degree << "\n";
  for (const auto& h : cover.handles)
    os << "handle " << cycles_text(h.a) << " ; " << cycles_text(h.b) << "\n";
  for (const auto& bp : cover.branch_points) {
    os << "branch " << bp.label.to_string();
    std::string cycles = cycles_text(bp.monodromy);
    if (!cycles.empty()) os << " " << cycles;
    if (bp.padding) os << " pad";
    os << "\n";
  }
  return os.str();
}

namespace {

Polynomial coefficient_list(Cursor& cur) {
  std::vector<GaussianRational> coeffs;
  while (!cur.done()) {
    std::size_t col = cur.column();
    std::string_view w = cur.word();
    auto c = GaussianRational::parse(w);
    if (!c) cur.fail("bad coefficient '" + std::string(w) + "'", col);
    coeffs.push_back(*c);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

RationalMap parse_map_file(std::string_view text) {
  std::optional<Polynomial> num, den;
  std::optional<RationalMap> expr;
  for (const Line& line : split_lines(text)) {
    Cursor cur(line);
    if (cur.done()) continue;
    std::size_t key_column = cur.column();
    std::string_view key = cur.word();
    if (key == "version") {
      std::size_t col = cur.column() + 1;
      if (cur.integer() != 1) cur.fail("unsupported version", col);
    } else if (key == "numerator" && !num) {
      num = coefficient_list(cur);
    } else if (key == "denominator" && !den) {
      den = coefficient_list(cur);
      if (den->is_zero()) cur.fail("zero denominator", key_column);
    } else if (key == "expr" && !expr) {
      std::string_view body = cur.rest();
      std::size_t offset = cur.offset_of(body);
      try {
        expr = parse_rational_map(body);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::syntax) throw;
        std::string message = e.what();
        if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
        cur.fail(message, offset + (e.column() ? e.column() - 1 : 0));
      }
    } else {
      cur.fail("unexpected '" + std::string(key) + "'", key_column);
    }
  }
  if (expr && (num || den)) throw Error(ErrorKind::syntax, "map file mixes 'expr' and coefficient lines");
  if (expr) return *expr;
  if (!num) throw Error(ErrorKind::syntax, "map file needs 'numerator' or 'expr'");
  return RationalMap(*num, den ? *den : Polynomial::constant(1));
}

std::string emit_map_file(const RationalMap& f) {
  auto list = [](const Polynomial& p) {
    std::string s;
    for (const auto& c : p.coefficients()) s += " " + c.to_string();
    return s;
  };
  return "version 1\nnumerator" + list(f.numerator()) + "\ndenominator" + list(f.denominator()) + "\n";
}

RationalMap parse_map_argument(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  std::string_view head = start == std::string_view::npos ? text : text.substr(start);
  for (std::string_view key : {"version", "numerator", "expr", "#"})
    if (head.substr(0, key.size()) == key) return parse_map_file(text);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  return parse_rational_map(head);
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path);
  os << in.rdbuf();
  return os.str();
}

}  // namespace fibercover

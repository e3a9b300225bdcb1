#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibercover/fiber.hpp"

namespace fibercover {

struct ReportBranch {
  std::string label;
  std::string cycles;  // 1-based cycle notation, "" for the identity
  bool padding = false;
  friend bool operator==(const ReportBranch&, const ReportBranch&) = default;
};

struct ReportCover {
  int base_genus = 0;
  std::size_t degree = 1;
  int genus = 0;
  bool regular = false;
  std::vector<std::pair<std::string, std::string>> handles;
  std::vector<ReportBranch> branches;
  friend bool operator==(const ReportCover&, const ReportCover&) = default;
};

struct ReportComponent {
  std::size_t size = 0;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  int genus = 0;
  std::vector<std::pair<std::string, std::string>> cycle_types;  // label, "[2,1]"
  friend bool operator==(const ReportComponent&, const ReportComponent&) = default;
};

struct ReportSingular {
  std::string label;
  std::size_t cycle1 = 0;  // 1-based least point
  std::size_t cycle2 = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t cone_count = 0;
  std::vector<std::size_t> cone_components;  // 1-based component ids
  friend bool operator==(const ReportSingular&, const ReportSingular&) = default;
};

struct ReportCriterion {
  std::string label;
  std::size_t a1 = 1;
  std::size_t a2 = 1;
  friend bool operator==(const ReportCriterion&, const ReportCriterion&) = default;
};

struct ReportJacobian {
  bool applicable = false;
  std::string failed_hypothesis;
  int g_component = 0;
  int g_base = 0;
  int g_first = 0;
  int g_second = 0;
  long dim_p = 0;
  friend bool operator==(const ReportJacobian&, const ReportJacobian&) = default;
};

struct ReportIsomorphism {
  bool all_isomorphic = true;
  std::vector<std::optional<std::string>> witnesses;  // cycle notation
  friend bool operator==(const ReportIsomorphism&, const ReportIsomorphism&) = default;
};

struct DecompositionReport {
  int version = 1;
  ReportCover first;
  ReportCover second;
  std::vector<std::string> labels;
  std::vector<ReportComponent> components;
  std::vector<ReportSingular> singular_points;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;  // 1-based
  bool connected = true;
  std::size_t bound = 1;
  bool cond1 = false;
  bool cond2 = false;
  bool predicted_irreducible = false;
  std::vector<ReportCriterion> per_label;
  std::optional<ReportJacobian> jacobian;
  std::optional<ReportIsomorphism> isomorphism;
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

DecompositionReport make_report(const FiberDecomposition& dec,
                                const IsomorphismReport* isomorphism = nullptr,
                                const JacobianReport* jacobian = nullptr);

enum class ReportFormat { text, structured };

std::string emit_report(const DecompositionReport& report, ReportFormat format);

// Inverse of the structured format. Throws Error(syntax) on malformed input.
DecompositionReport parse_structured_report(std::string_view text);

}  // namespace fibercover

#include "fibercover/corpus.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include <json.hpp>

#include "fibercover/cover_io.hpp"
#include "fibercover/error.hpp"
#include "fibercover/expression.hpp"
#include "fibercover/fiber.hpp"
#include "fibercover/monodromy.hpp"

namespace fibercover {

using nlohmann::json;

namespace {

constexpr std::size_t group_order_cap = 1'000'000;

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string singular_key(const std::string& label, std::size_t n1, std::size_t n2, std::size_t cones) {
  return label + ":" + std::to_string(n1) + "x" + std::to_string(n2) + "/" + std::to_string(cones);
}

void compare(std::vector<std::string>& out, const std::string& what, const std::string& expected,
             const std::string& observed) {
  if (expected != observed) out.push_back(what + " expected " + expected + ", got " + observed);
}

std::pair<BranchedCover, BranchedCover> load_inputs(const std::filesystem::path& dir, const json& inputs) {
  if (inputs.contains("covers")) {
    auto files = inputs.at("covers").get<std::vector<std::string>>();
    if (files.size() != 2) throw Error(ErrorKind::syntax, "case needs two cover files");
    return {parse_cover_file(read_input((dir / files[0]).string())),
            parse_cover_file(read_input((dir / files[1]).string()))};
  }
  auto maps = inputs.at("maps").get<std::vector<std::string>>();
  if (maps.size() != 2) throw Error(ErrorKind::syntax, "case needs two maps");
  return monodromy_pair(parse_rational_map(maps[0]), parse_rational_map(maps[1]));
}

void check(const json& expected, const FiberDecomposition& dec, Execution exec,
           std::vector<std::string>& mismatches) {
  std::vector<std::size_t> genera, sizes;
  for (const auto& c : dec.components) {
    genera.push_back(static_cast<std::size_t>(c.genus));
    sizes.push_back(c.orbit.size());
  }
  for (const auto& [key, value] : expected.items()) {
    if (key == "components") {
      compare(mismatches, key, value.dump(), std::to_string(dec.components.size()));
    } else if (key == "genera") {
      compare(mismatches, key, list(sorted(value.get<std::vector<std::size_t>>())), list(sorted(genera)));
    } else if (key == "sizes") {
      compare(mismatches, key, list(sorted(value.get<std::vector<std::size_t>>())), list(sorted(sizes)));
    } else if (key == "degree_pairs") {
      std::vector<std::string> want, got;
      for (const auto& p : value) want.push_back(p.dump());
      for (const auto& c : dec.components) got.push_back(json::array({c.d1, c.d2}).dump());
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      compare(mismatches, key, json(want).dump(), json(got).dump());
    } else if (key == "singular") {
      std::vector<std::string> want, got;
      for (const auto& s : value)
        want.push_back(singular_key(s.at("label").get<std::string>(), s.at("n1").get<std::size_t>(),
                                    s.at("n2").get<std::size_t>(), s.at("cone_count").get<std::size_t>()));
      for (const auto& s : dec.singular_points)
        got.push_back(singular_key(s.label.to_string(), s.n1, s.n2, s.cone_count));
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      compare(mismatches, key, json(want).dump(), json(got).dump());
    } else if (key == "cond1") {
      compare(mismatches, key, value.dump(), json(dec.criteria.cond1).dump());
    } else if (key == "cond2") {
      compare(mismatches, key, value.dump(), json(dec.criteria.cond2).dump());
    } else if (key == "connected") {
      compare(mismatches, key, value.dump(), json(dec.connected).dump());
    } else if (key == "bound") {
      compare(mismatches, key, value.dump(), std::to_string(dec.bound));
    } else if (key == "isomorphic") {
      compare(mismatches, key, value.dump(),
              json(components_pairwise_isomorphic(dec, exec).all_isomorphic).dump());
    } else if (key == "group_orders") {
      std::vector<std::size_t> orders;
      for (const auto& c : dec.components) {
        auto order = group_order_bounded(c.cover.generators(), c.cover.degree, group_order_cap);
        orders.push_back(order ? *order : 0);
      }
      compare(mismatches, key, list(sorted(value.get<std::vector<std::size_t>>())), list(sorted(orders)));
    } else if (key == "euler_characteristic") {
      long chi = 0;
      for (auto g : genera) chi += 2 - 2 * static_cast<long>(g);
      compare(mismatches, key, value.dump(), std::to_string(chi));
    } else {
      mismatches.push_back("unknown expectation '" + key + "'");
    }
  }
}

}  // namespace

std::filesystem::path default_corpus_dir() { return FIBERCOVER_CORPUS_DIR; }

CorpusOutcome run_case(const std::filesystem::path& case_dir, Execution exec) {
  CorpusOutcome out;
  out.name = case_dir.filename().string();
  try {
    json meta = json::parse(read_input((case_dir / "case.json").string()));
    out.name = meta.value("name", out.name);
    out.gate = meta.value("gate", true);
    if (!meta.contains("provenance")) throw Error(ErrorKind::syntax, "case.json lacks a provenance note");
    auto [c1, c2] = load_inputs(case_dir, meta.at("inputs"));
    FiberDecomposition dec = decompose(c1, c2, exec);
    std::vector<std::size_t> genera;
    for (const auto& c : dec.components) genera.push_back(static_cast<std::size_t>(c.genus));
    out.observed = "components " + std::to_string(dec.components.size()) + ", genera " +
                   list(sorted(genera)) + ", singular " + std::to_string(dec.singular_points.size()) +
                   ", connected " + (dec.connected ? "yes" : "no");
    check(meta.at("expected"), dec, exec, out.mismatches);
  } catch (const std::exception& e) {
    out.mismatches.push_back(e.what());
  }
  out.passed = out.mismatches.empty();
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::filesystem::path& dir, Execution exec) {
  std::vector<std::filesystem::path> cases;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_directory() && std::filesystem::exists(entry.path() / "case.json"))
      cases.push_back(entry.path());
  if (ec) throw Error(ErrorKind::io, "cannot list corpus directory " + dir.string());
  std::sort(cases.begin(), cases.end());
  std::vector<CorpusOutcome> outcomes(cases.size());
  const auto count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long k = 0; k < count; ++k) outcomes[k] = run_case(cases[k], Execution::serial);
  return outcomes;
}

std::string corpus_table(const std::vector<CorpusOutcome>& outcomes) {
  std::size_t width = 4;
  for (const auto& o : outcomes) width = std::max(width, o.name.size());
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  os << pad("case") << "  result  observed\n";
  for (const auto& o : outcomes) {
    std::string result = !o.gate ? "record" : (o.passed ? "pass  " : "FAIL  ");
    os << pad(o.name) << "  " << result << "  " << o.observed << "\n";
    for (const auto& m : o.mismatches) os << pad("") << "    " << m << "\n";
  }
  std::size_t failed = std::count_if(outcomes.begin(), outcomes.end(),
                                     [](const CorpusOutcome& o) { return o.gate && !o.passed; });
  os << outcomes.size() << " cases, " << failed << " failed\n";
  return os.str();
}

bool corpus_passed(const std::vector<CorpusOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CorpusOutcome& o) { return !o.gate || o.passed; });
}

}  // namespace fibercover

// fixtures.hpp
// Cutting specifications: one family plus parameters, written as a manifest
// line such as "random n=9 max=5 seed=42 dist=sparse".

#pragma once

#include "pizza/cuttings.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace pizza {

struct FamilyInfo {
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;  // name, description
  std::string description;
};

inline const std::vector<FamilyInfo>& cutting_families() {
  static const std::vector<FamilyInfo> families{
      {"p15", {{"omega", "rational in [0, 1]"}}, "15 slices 0010100(1+w)0(2-w)00202, total 9"},
      {"p15-scaled", {}, "002020030300404, total 18"},
      {"p21", {}, "21 slices of sizes 0 and 1, total 9"},
      {"p23", {}, "20200200202006060050500, total 32"},
      {"tight-zero-jump", {}, "the 9-slice pizza with characteristic cycle 100100100"},
      {"two-ones", {{"n", "integer >= 2"}}, "1100...0"},
      {"padded", {{"omega", "rational in [0, 1]"}, {"n", "odd integer >= 15"}}, "p15 with zero slices inserted"},
      {"forcing", {{"order", "legal play order, e.g. 0-1-3-2"}}, "sizes 1, 1/2, 1/4, ... in the given order"},
      {"all-jumps", {{"n", "integer >= 1"}}, "forcing cutting where Alice jumps whenever she can"},
      {"random",
       {{"n", "integer >= 1"},
        {"max", "largest slice size"},
        {"seed", "unsigned integer"},
        {"dist", "uniform or sparse"}},
       "reproducible integer sizes"},
  };
  return families;
}

struct CuttingSpec {
  std::string family;
  std::map<std::string, std::string> params;

  std::string param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument(family + ": missing parameter '" + key + "'");
    return it->second;
  }
};

namespace detail {

inline std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-')
    throw std::invalid_argument("bad value for " + what + ": '" + text + "'");
  return v;
}

inline std::vector<std::size_t> parse_order(const std::string& text) {
  std::vector<std::size_t> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, '-')) order.push_back(parse_unsigned(item, "order"));
  return order;
}

}  // namespace detail

inline std::string manifest_line(const CuttingSpec& spec) {
  std::string out = spec.family;
  for (const auto& [k, v] : spec.params) out += " " + k + "=" + v;
  return out;
}

inline CuttingSpec parse_manifest_line(std::string_view line) {
  std::stringstream in{std::string(line)};
  CuttingSpec spec;
  if (!(in >> spec.family)) throw std::invalid_argument("empty manifest line");
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected key=value, got '" + token + "'");
    spec.params[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return spec;
}

inline std::vector<CuttingSpec> read_manifest(std::istream& in) {
  std::vector<CuttingSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_manifest_line(line));
  }
  return out;
}

inline Cutting generate(const CuttingSpec& spec) {
  const std::string& f = spec.family;
  auto n_param = [&] { return static_cast<std::size_t>(detail::parse_unsigned(spec.param("n"), "n")); };
  if (f == "p15") return cutting_15(parse_rational(spec.param("omega")));
  if (f == "p15-scaled") return cutting_15_scaled();
  if (f == "p21") return cutting_21();
  if (f == "p23") return cutting_23_onejump();
  if (f == "tight-zero-jump") return tight_zero_jump();
  if (f == "two-ones") return two_ones(n_param());
  if (f == "padded") {
    std::size_t n = n_param();
    if (n < 15 || n % 2 == 0) throw std::invalid_argument("padded: n must be odd and at least 15");
    return extend_with_zeros(cutting_15(parse_rational(spec.param("omega"))), n, true);
  }
  if (f == "forcing") return permutation_forcing(detail::parse_order(spec.param("order")));
  if (f == "all-jumps") return permutation_forcing(alice_all_jumps_order(n_param()));
  if (f == "random") {
    auto max = static_cast<unsigned>(detail::parse_unsigned(spec.param("max"), "max"));
    auto seed = detail::parse_unsigned(spec.param("seed"), "seed");
    auto dist = SizeDistribution::Uniform;
    if (auto it = spec.params.find("dist"); it != spec.params.end()) {
      if (it->second == "sparse")
        dist = SizeDistribution::Sparse;
      else if (it->second != "uniform")
        throw std::invalid_argument("random: dist must be uniform or sparse");
    }
    return random_cutting(n_param(), max, seed, dist);
  }
  throw std::invalid_argument("unknown cutting family '" + f + "'");
}

inline CuttingSpec random_spec(std::size_t n, unsigned max, std::uint64_t seed, SizeDistribution dist) {
  return {"random",
          {{"n", std::to_string(n)}, {"max", std::to_string(max)}, {"seed", std::to_string(seed)}, {"dist", name(dist)}}};
}

/// The property-test battery: seeds 1..1000 with n cycling through 1..17,
/// then 200 more with n in 18..21. Sizes alternate between small and wider
/// ranges; every other fixture is sparse.
inline std::vector<CuttingSpec> standard_battery() {
  std::vector<CuttingSpec> out;
  auto add = [&](std::size_t n, std::uint64_t seed) {
    unsigned max = seed % 3 == 0 ? 1 : seed % 3 == 1 ? 4 : 12;
    auto dist = seed % 2 == 0 ? SizeDistribution::Sparse : SizeDistribution::Uniform;
    out.push_back(random_spec(n, max, seed, dist));
  };
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) add(1 + (seed - 1) % 17, seed);
  for (std::uint64_t seed = 1001; seed <= 1200; ++seed) add(18 + (seed - 1001) % 4, seed);
  return out;
}

}  // namespace pizza

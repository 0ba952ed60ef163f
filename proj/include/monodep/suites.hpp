#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monodep/order_matrix.hpp"
#include "monodep/rings.hpp"

namespace monodep {

using Json = nlohmann::ordered_json;

/// {"rat": "p/q", "irr": "r/s"}
Json quad_json(const QuadScalar& x);
Json matrix_json(const OrderMatrix& m);

struct CaseRecord {
  std::string part;
  Json inputs;
  std::optional<std::string> witness;
  bool pass = false;
  std::string reason;
  Json details;  // null unless the part reports extra data (search counters)
};

struct Report {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<CaseRecord> cases;

  bool all_pass() const;
  std::size_t passed() const;
  /// Deterministic serialization; the timing block only when requested.
  Json to_json(std::optional<double> seconds = std::nullopt) const;
};

/// Independent generator for one part of a suite, derived from the suite
/// seed and the part tag, so parts do not shift each other's streams.
Rng part_rng(std::uint64_t seed, std::string_view tag);

// Individual suite parts. Counts are numbers of random cases.
std::vector<CaseRecord> part_lprelim_identity(std::uint64_t seed, long count);
std::vector<CaseRecord> part_lprelim_transport(std::uint64_t seed, long count);
std::vector<CaseRecord> part_pR_a(std::uint64_t seed, long count);
std::vector<CaseRecord> part_pR_b_search();
std::vector<CaseRecord> part_pR_b_phi(std::uint64_t seed, long count);
std::vector<CaseRecord> part_pW_a(std::uint64_t seed, long count);
std::vector<CaseRecord> part_pW_b(std::uint64_t seed, long count_per_matrix);
std::vector<CaseRecord> part_pV_a(std::uint64_t seed, long count);
std::vector<CaseRecord> part_tDim(std::uint64_t seed, long count);
std::vector<CaseRecord> part_pV_b_search();
std::vector<CaseRecord> part_tVdimA(std::uint64_t seed, long count_per_matrix);
std::vector<CaseRecord> part_tVdimB(std::uint64_t seed, long count);
std::vector<CaseRecord> part_cAnalytic_V(std::uint64_t seed, long count);
std::vector<CaseRecord> part_cAnalytic_R();

const std::vector<std::string>& suite_names();

/// Runs a named suite (pR, pW, pV, lPrelim, tDim, tVdimA, tVdimB, cAnalytic)
/// at the given scale; throws std::invalid_argument for an unknown name.
Report run_suite(std::string_view name, std::uint64_t seed, long scale);

}  // namespace monodep

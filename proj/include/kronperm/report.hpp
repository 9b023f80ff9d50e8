#pragma once

#include "kronperm/perm.hpp"
#include "kronperm/theorems.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kronperm::report {

using Json = nlohmann::ordered_json;

/// Integer as a JSON number when exactly representable in a double, otherwise a decimal string.
Json json_int(std::uint64_t v);
Json json_int(const BigInt& v);

/// Rows {index, a, p, q, side, det_sign}; a, p and q are decimal strings.
Json convergent_table(const CFStream& stream, const std::vector<Convergent>& convs);

Json lengths_json(const CycleSignature& sig);

/// {alpha, n, builder, cycles, lengths, fixed_points}
Json signature_json(const std::string& alpha, std::uint64_t n, const SignatureResult& result);

/// {alpha, n, q, p, det_sign, case_label, lengths, fixed_points, witnesses}
Json verdict_json(const StructureVerdict& v);

/// One row per point: k, k/n, x_k (12 decimals, correctly rounded), rank.
struct PointRow {
  std::uint64_t k = 0;
  std::string k_over_n;
  std::string x;
  std::uint64_t rank = 0;
};

std::vector<PointRow> point_rows(const CFStream& alpha, const Permutation& pi, std::size_t precision_budget);

std::string points_csv(const std::vector<PointRow>& rows);

/// round(value * 10^places) rendered as a fixed-point decimal string.
std::string fixed_decimal(const BigInt& scaled, unsigned places);

/// "1:2,4:3" style multiset.
std::string lengths_text(const CycleSignature& sig);

/// "(1 13 8 9)(2 5 7 4)..." canonical cycle notation.
std::string cycles_text(const CycleSignature& sig);

} // namespace kronperm::report

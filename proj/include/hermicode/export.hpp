#pragma once

// Self-describing JSON / CSV serializations. Every field element is written
// as its integer encoding and every JSON document carries the field
// parameters needed to decode it.

#include <string>
#include <vector>

#include "hermicode/agcode.hpp"
#include "hermicode/curve.hpp"
#include "hermicode/verify.hpp"
#include "hermicode/weights.hpp"
#include "json.hpp"

namespace hermicode {

/// {q, p, k_ext, irreducible, omega}.
nlohmann::json field_header(const Field& field);

/// Generator matrix document: {q, p, k_ext, m, n, k, irreducible, omega,
/// base_point: [u, v], tau, rows}.
nlohmann::json code_to_json(const LinearCode& code);
/// One line per generator row, comma-separated encodings.
std::string code_to_csv(const LinearCode& code);

/// {q, m, n, k, counts: {"w": c}, method, elapsed_ms} plus the field header.
/// Only weights with a nonzero count are listed.
nlohmann::json enumerator_to_json(const LinearCode& code, const WeightEnumerator& we, Method method,
                                  double elapsed_ms);
/// "weight,count" header then one row per nonzero count, ascending weight.
std::string enumerator_to_csv(const WeightEnumerator& we);

/// Curve listing: all points, chord points, the orbit of `spec`.
nlohmann::json points_to_json(const HermitianCurve& curve, const OrbitSpec& spec);
/// "set,x1,x2,x3" rows for the same three listings.
std::string points_to_csv(const HermitianCurve& curve, const OrbitSpec& spec);

nlohmann::json reports_to_json(const std::vector<ClaimReport>& reports);

/// Drops the non-canonical "elapsed_ms" keys at any depth.
nlohmann::json canonical(nlohmann::json doc);

/// Keys sorted, two-space indentation, trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace hermicode

/**
 * @file datum_io.hpp
 * @brief JSON datum files.
 *
 * Reduced data:
 *   { "name": "...", "parameters": ["q"], "group_rank": r, "theta": n,
 *     "K": [[int]], "L": [[int]], "chi": [["q^2", ...]], "ell": ["1", ...],
 *     "cartan": [[int]] }            // "name" and "cartan" optional
 * YD data with a linking parameter (vertices 1-based):
 *   { "parameters": [...], "group_rank": r, "theta": n, "g": [[int]],
 *     "chi": [[...]], "lambda": [{"i": 1, "j": 2, "value": "1"}] }
 * Each "chi" row lists the values of χ_i on the generators of Γ.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hopfkit/datum.hpp"

namespace hopfkit {

struct LoadedDatum {
  std::optional<ReducedDatum> reduced;
  std::optional<YDDatum> yd;
  LinkingParameter lambda;
  std::optional<IntegerMatrix> declared_cartan;
};

/// Throws ParseError for malformed JSON or scalars and InvalidDatum /
/// RankMismatch for inconsistent shapes. A declared "cartan" must match detection.
LoadedDatum parse_datum_json(std::string_view text);
LoadedDatum load_datum_file(const std::string& path);

std::string reduced_to_json(const ReducedDatum& datum);
std::string yd_to_json(const YDDatum& datum, const LinkingParameter& lambda);

}  // namespace hopfkit

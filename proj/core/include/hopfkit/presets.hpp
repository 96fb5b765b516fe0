/**
 * @file presets.hpp
 * @brief Built-in reduced data. All presets use ℓ_i = 1.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hopfkit/datum.hpp"

namespace hopfkit {

/// "A1", "A2", "B2", "A2-two-parameter", "A1xA1-G-counterexample".
const std::vector<std::string>& preset_names();
/// Throws InvalidDatum for an unknown name.
ReducedDatum preset(std::string_view name);

}  // namespace hopfkit

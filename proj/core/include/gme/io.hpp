#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gme/convex_roof.hpp"
#include "gme/state.hpp"

namespace gme {

//- File schemas (JSON):
//-   pure state:    {"dims": [d1,...,dm], "amplitudes": [[re,im], ...]}
//-   density matrix:{"dims": [d1,...,dm], "matrix": [[[re,im],...], ...]}
//- Amplitudes and matrix rows follow the row-major, last-party-fastest
//- index convention. Numbers are emitted as shortest round-trip decimals.
//- Malformed documents raise InputError naming the offending field.

std::string state_to_json_text(const PureState& state);
PureState state_from_json_text(const std::string& text);

std::string density_to_json_text(const DensityMatrix& rho);
DensityMatrix density_from_json_text(const std::string& text);

PureState load_state(const std::string& path);
DensityMatrix load_density(const std::string& path);
void save_state(const PureState& state, const std::string& path);
void save_density(const DensityMatrix& rho, const std::string& path);

enum class StateFileKind { PURE, DENSITY };

//- Inspects a file for an "amplitudes" or "matrix" key.
StateFileKind probe_state_file(const std::string& path);

//- RoofConfig document: JSON object with any of the keys ensemble_size,
//- restarts, max_iterations, tolerance, seed; missing keys keep defaults.
RoofConfig roof_config_from_json_text(const std::string& text);
std::string roof_config_to_json_text(const RoofConfig& cfg);

//- FNV-1a, used to fingerprint configuration documents in reports.
std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t value);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gme

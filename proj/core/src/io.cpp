#include "gme/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gme {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const std::string& context) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw InputError(context + ": not valid JSON");
  }
  return doc;
}

std::vector<int> dims_of(const json& doc, const std::string& context) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw InputError(context + ": missing or empty \"dims\" array");
  }
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 2) {
      throw InputError(context + ": every entry of \"dims\" must be an integer >= 2");
    }
    dims.push_back(d.get<int>());
  }
  return dims;
}

Complex complex_of(const json& pair, const std::string& context) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number()) {
    throw InputError(context + ": complex entries must be [re, im] number pairs");
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

std::string state_to_json_text(const PureState& state) {
  json doc;
  doc["dims"] = state.dims;
  json amps = json::array();
  for (long i = 0; i < state.total_dim(); ++i) {
    amps.push_back(complex_to_json(state.amplitudes[i]));
  }
  doc["amplitudes"] = std::move(amps);
  return doc.dump();
}

PureState state_from_json_text(const std::string& text) {
  const std::string context = "state document";
  json doc = parse_or_throw(text, context);
  auto dims = dims_of(doc, context);
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw InputError(context + ": missing \"amplitudes\" array");
  }
  std::vector<Complex> amplitudes;
  for (const auto& value : doc["amplitudes"]) {
    amplitudes.push_back(complex_of(value, context + ", field \"amplitudes\""));
  }
  return make_pure_state(amplitudes, dims);
}

std::string density_to_json_text(const DensityMatrix& rho) {
  json doc;
  doc["dims"] = rho.dims;
  json rows = json::array();
  for (long i = 0; i < rho.total_dim(); ++i) {
    json row = json::array();
    for (long j = 0; j < rho.total_dim(); ++j) {
      row.push_back(complex_to_json(rho.matrix(i, j)));
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

DensityMatrix density_from_json_text(const std::string& text) {
  const std::string context = "density document";
  json doc = parse_or_throw(text, context);
  auto dims = dims_of(doc, context);
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw InputError(context + ": missing \"matrix\" array of rows");
  }
  const auto& rows = doc["matrix"];
  long side = static_cast<long>(rows.size());
  Matrix m(side, side);
  for (long i = 0; i < side; ++i) {
    if (!rows[i].is_array() || static_cast<long>(rows[i].size()) != side) {
      throw InputError(context + ": row " + std::to_string(i) +
                       " of \"matrix\" is not an array of the matrix side length");
    }
    for (long j = 0; j < side; ++j) {
      m(i, j) = complex_of(rows[i][j], context + ", field \"matrix\" row " +
                                           std::to_string(i));
    }
  }
  return make_density_matrix(m, dims);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

PureState load_state(const std::string& path) {
  try {
    return state_from_json_text(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

DensityMatrix load_density(const std::string& path) {
  try {
    return density_from_json_text(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_state(const PureState& state, const std::string& path) {
  write_text_file(path, state_to_json_text(state) + "\n");
}

void save_density(const DensityMatrix& rho, const std::string& path) {
  write_text_file(path, density_to_json_text(rho) + "\n");
}

StateFileKind probe_state_file(const std::string& path) {
  json doc = parse_or_throw(read_text_file(path), path);
  if (doc.contains("amplitudes")) return StateFileKind::PURE;
  if (doc.contains("matrix")) return StateFileKind::DENSITY;
  throw InputError(path + ": neither \"amplitudes\" nor \"matrix\" present");
}

RoofConfig roof_config_from_json_text(const std::string& text) {
  const std::string context = "roof config document";
  json doc = parse_or_throw(text, context);
  if (!doc.is_object()) throw InputError(context + ": expected a JSON object");
  RoofConfig cfg;
  auto read_int = [&doc, &context](const char* key, int& out) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_integer()) {
      throw InputError(context + ": \"" + key + "\" must be an integer");
    }
    out = doc[key].get<int>();
  };
  read_int("ensemble_size", cfg.ensemble_size);
  read_int("restarts", cfg.restarts);
  read_int("max_iterations", cfg.max_iterations);
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number()) {
      throw InputError(context + ": \"tolerance\" must be a number");
    }
    cfg.tolerance = doc["tolerance"].get<double>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw InputError(context + ": \"seed\" must be an integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (cfg.restarts < 1) throw InputError(context + ": restarts must be >= 1");
  if (cfg.tolerance <= 0) throw InputError(context + ": tolerance must be > 0");
  return cfg;
}

std::string roof_config_to_json_text(const RoofConfig& cfg) {
  json doc;
  doc["ensemble_size"] = cfg.ensemble_size;
  doc["restarts"] = cfg.restarts;
  doc["max_iterations"] = cfg.max_iterations;
  doc["tolerance"] = cfg.tolerance;
  doc["seed"] = cfg.seed;
  return doc.dump();
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace gme

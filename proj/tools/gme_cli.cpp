//- Command-line front end over the measure library.
//-
//- Subcommands: measure, triangle, tetra, alpha-scan, roof, sample.
//- Reports are JSON on stdout (or --out); campaign scans write CSV plus a
//- JSON summary. Every report embeds the tool version, the seed in effect
//- and a hash of the effective configuration, so runs are reproducible
//- from their artifacts alone.
//-
//- Exit codes: 0 success, 2 malformed input (files, flags, preconditions),
//- 3 numerical-contract violation (triangle/face relations, infeasible
//- exponents).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gme/bipartite.hpp"
#include "gme/convex_roof.hpp"
#include "gme/geometry.hpp"
#include "gme/io.hpp"
#include "gme/partition.hpp"
#include "gme/quadripartite.hpp"
#include "gme/state.hpp"
#include "gme/tripartite.hpp"
#include "gme/version.hpp"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 12345;

//- Flags shared across subcommands, merged with an optional --config
//- RunConfig document (explicit flags win).
struct RunConfig {
  std::string state_arg;
  std::string density_arg;
  std::string measure = "tangle";
  std::string variant = "ratio";
  std::string tri = "tau3";
  std::string family;
  std::string cut;
  double gamma = 1.0;
  long samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  long count = 1;
  int refine_iterations = 200;
  std::string out;
  std::string summary;
  std::string witness;
  std::string config_path;
  std::string roof_config_path;
  gme::RoofConfig roof;
};

json config_fingerprint(const RunConfig& cfg, const std::string& command) {
  json doc;
  doc["command"] = command;
  doc["state"] = cfg.state_arg;
  doc["density"] = cfg.density_arg;
  doc["measure"] = cfg.measure;
  doc["variant"] = cfg.variant;
  doc["tri"] = cfg.tri;
  doc["family"] = cfg.family;
  doc["cut"] = cfg.cut;
  doc["gamma"] = cfg.gamma;
  doc["samples"] = cfg.samples;
  doc["seed"] = cfg.seed;
  doc["count"] = cfg.count;
  doc["refine_iterations"] = cfg.refine_iterations;
  doc["roof"] = {{"ensemble_size", cfg.roof.ensemble_size},
                 {"restarts", cfg.roof.restarts},
                 {"max_iterations", cfg.roof.max_iterations},
                 {"tolerance", cfg.roof.tolerance},
                 {"seed", cfg.roof.seed}};
  return doc;
}

void stamp_report(json& report, const RunConfig& cfg, const std::string& command) {
  report["tool_version"] = gme::kVersion;
  report["seed"] = cfg.seed;
  report["config_hash"] = gme::hex64(gme::fnv1a64(config_fingerprint(cfg, command).dump()));
}

void emit_report(const json& report, const RunConfig& cfg) {
  std::string text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    gme::write_text_file(cfg.out, text);
  }
}

//- Resolves --state (named or file) / --density into a pure state and/or
//- a density matrix. Pure inputs also yield their projector.
struct ResolvedInput {
  std::optional<gme::PureState> pure;
  std::optional<gme::DensityMatrix> density;
  std::string label;
};

ResolvedInput resolve_input(const RunConfig& cfg) {
  ResolvedInput input;
  if (!cfg.state_arg.empty() && !cfg.density_arg.empty()) {
    throw gme::InputError("--state and --density are mutually exclusive");
  }
  if (!cfg.state_arg.empty()) {
    input.label = cfg.state_arg;
    std::ifstream probe(cfg.state_arg);
    if (probe.good()) {
      if (gme::probe_state_file(cfg.state_arg) == gme::StateFileKind::DENSITY) {
        input.density = gme::load_density(cfg.state_arg);
      } else {
        input.pure = gme::load_state(cfg.state_arg);
      }
    } else {
      input.pure = gme::named_state(gme::parse_named_state(cfg.state_arg));
    }
    return input;
  }
  if (!cfg.density_arg.empty()) {
    input.label = cfg.density_arg;
    input.density = gme::load_density(cfg.density_arg);
    return input;
  }
  throw gme::InputError("provide an input with --state <name|file> or --density <file>");
}

gme::MeasureDescriptor descriptor_of(const RunConfig& cfg) {
  gme::MeasureDescriptor d;
  d.kind = gme::parse_measure_kind(cfg.measure);
  d.mixed_strategy = d.kind == gme::MeasureKind::NEGATIVITY
                         ? gme::MixedStrategy::DIRECT
                         : gme::MixedStrategy::CONVEX_ROOF;
  return d;
}

gme::CompositeVariant variant_of(const RunConfig& cfg) {
  if (cfg.variant == "ratio") return gme::CompositeVariant::RATIO;
  if (cfg.variant == "product") return gme::CompositeVariant::PRODUCT;
  throw gme::InputError("unknown variant (expected ratio or product): " + cfg.variant);
}

gme::TriKind tri_kind_of(const RunConfig& cfg) {
  if (cfg.tri == "tau3") return gme::TriKind::TAU3;
  if (cfg.tri == "ef3") return gme::TriKind::EF3;
  if (cfg.tri == "eg123") return gme::TriKind::EG123;
  if (cfg.tri == "e123") return gme::TriKind::E123;
  if (cfg.tri == "f123") return gme::TriKind::F123;
  throw gme::InputError("unknown tripartite measure (tau3|ef3|eg123|e123|f123): " +
                        cfg.tri);
}

//- Shortest-round-trip decimal for CSV cells, stable across runs.
std::string csv_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

json edges3_json(const gme::EdgeVector3& e) {
  return json{{"A|BC", e.x}, {"AB|C", e.y}, {"B|AC", e.z}};
}

json measures3_json(const gme::EdgeVector3& e, std::optional<double> eg_override = {}) {
  json m;
  m["f123_ratio"] = gme::f123(e, gme::CompositeVariant::RATIO);
  m["f123_product"] = gme::f123(e, gme::CompositeVariant::PRODUCT);
  m["e123"] = gme::e123(e);
  m["eg123"] = eg_override ? *eg_override : gme::eg123(e);
  return m;
}

json edges_array_json(const auto& labels, const auto& values) {
  json out;
  for (size_t i = 0; i < values.size(); ++i) out[labels[i]] = values[i];
  return out;
}

double family_value(const json& measures, const std::string& family,
                    const std::string& variant) {
  std::string key = family;
  if (family == "f123" || family == "f1234_2" || family == "f1234_3" ||
      family == "tilde_f1234_3") {
    key += "_" + variant;
  }
  if (!measures.contains(key)) {
    throw gme::InputError("unknown measure family for this input: " + family);
  }
  return measures[key].get<double>();
}

int cmd_measure(const RunConfig& cfg) {
  ResolvedInput input = resolve_input(cfg);
  gme::MeasureDescriptor d = descriptor_of(cfg);
  int parties = input.pure ? input.pure->num_parties() : input.density->num_parties();

  json report;
  stamp_report(report, cfg, "measure");
  report["input"] = input.label;
  report["measure"] = gme::measure_name(d.kind);
  report["pure_input"] = input.pure.has_value();

  if (parties == 3) {
    json measures;
    if (input.pure) {
      gme::EdgeVector3 e = gme::edge_vector_3(*input.pure, d);
      report["edges"] = edges3_json(e);
      report["delta"] = gme::delta_pure_genuine(*input.pure, d);
      measures = measures3_json(e);
    } else {
      gme::EdgeVector3 e = gme::edge_vector_3(*input.density, d, cfg.roof);
      report["edges"] = edges3_json(e);
      //- Genuine composite on mixed states goes through the convex roof
      //- of the pure composite; the plain sum/ratio forms use the mixed
      //- edges directly.
      double eg = gme::roofed_composite(*input.density, gme::TriComposite::EG123, d,
                                        cfg.roof);
      measures = measures3_json(e, eg);
    }
    report["measures"] = measures;
    if (!cfg.family.empty()) {
      report["value"] = family_value(measures, cfg.family, cfg.variant);
    }
    emit_report(report, cfg);
    return 0;
  }

  if (parties == 4) {
    json measures;
    if (input.pure) {
      gme::EdgeVector4Bip eb = gme::edge_vector_4_bip(*input.pure, d);
      gme::EdgeVector4Tri et = gme::edge_vector_4_tri(*input.pure, tri_kind_of(cfg), d);
      int delta = gme::delta_bisep(*input.pure, d);
      report["edges_bip"] = edges_array_json(gme::EdgeVector4Bip::labels(), eb.values);
      report["edges_tri"] = edges_array_json(gme::EdgeVector4Tri::labels(), et.values);
      report["delta"] = delta;
      measures["f1234_2_ratio"] = gme::f1234_2(eb, gme::CompositeVariant::RATIO);
      measures["f1234_2_product"] = gme::f1234_2(eb, gme::CompositeVariant::PRODUCT);
      measures["e1234_2"] = gme::e1234_2(eb);
      measures["eg1234_2"] = gme::eg1234_2(eb);
      measures["f1234_3_ratio"] = gme::f1234_3(et, gme::CompositeVariant::RATIO);
      measures["f1234_3_product"] = gme::f1234_3(et, gme::CompositeVariant::PRODUCT);
      measures["tilde_f1234_3_ratio"] =
          gme::tilde_f1234_3(et, delta, gme::CompositeVariant::RATIO);
      measures["tilde_f1234_3_product"] =
          gme::tilde_f1234_3(et, delta, gme::CompositeVariant::PRODUCT);
      measures["e1234_3"] = gme::e1234_3(et);
      measures["eg1234_3"] = gme::eg1234_3(et, delta);
    } else {
      //- Mixed 4-party inputs: the seven bipartite cuts are well defined
      //- (roof or direct per measure); the six-entry tripartite family
      //- needs a pure input.
      gme::EdgeVector4Bip eb = gme::edge_vector_4_bip(*input.density, d, cfg.roof);
      report["edges_bip"] = edges_array_json(gme::EdgeVector4Bip::labels(), eb.values);
      measures["f1234_2_ratio"] = gme::f1234_2(eb, gme::CompositeVariant::RATIO);
      measures["f1234_2_product"] = gme::f1234_2(eb, gme::CompositeVariant::PRODUCT);
      measures["e1234_2"] = gme::e1234_2(eb);
      measures["eg1234_2"] = gme::eg1234_2(eb);
    }
    report["measures"] = measures;
    if (!cfg.family.empty()) {
      report["value"] = family_value(measures, cfg.family, cfg.variant);
    }
    emit_report(report, cfg);
    return 0;
  }

  throw gme::InputError("measure expects a 3- or 4-party input, got " +
                        std::to_string(parties) + " parties");
}

int cmd_triangle(const RunConfig& cfg) {
  ResolvedInput input = resolve_input(cfg);
  gme::MeasureDescriptor d = descriptor_of(cfg);
  gme::EdgeVector3 e = input.pure ? gme::edge_vector_3(*input.pure, d)
                                  : gme::edge_vector_3(*input.density, d, cfg.roof);
  double gx = std::pow(e.x, cfg.gamma);
  double gy = std::pow(e.y, cfg.gamma);
  double gz = std::pow(e.z, cfg.gamma);
  gme::TriangleGeom geom = gme::triangle_geom(gx, gy, gz);

  json report;
  stamp_report(report, cfg, "triangle");
  report["input"] = input.label;
  report["measure"] = gme::measure_name(d.kind);
  report["gamma"] = cfg.gamma;
  report["edges"] = edges3_json(e);
  report["lengths"] = {geom.a, geom.b, geom.c};
  report["area"] = geom.area;
  report["degenerate"] = geom.degenerate;
  if (!geom.degenerate) {
    report["circumradius"] = geom.circumradius;
    report["inradius"] = geom.inradius;
    report["Rr"] = geom.circumradius * geom.inradius;
  }
  auto gs = gme::try_gamma_star(e.x, e.y, e.z);
  report["gamma_star"] = gs ? json(*gs) : json(nullptr);
  emit_report(report, cfg);
  return 0;
}

int cmd_tetra(const RunConfig& cfg) {
  ResolvedInput input = resolve_input(cfg);
  if (!input.pure) {
    throw gme::InputError("tetra requires a pure 4-party state");
  }
  gme::MeasureDescriptor d = descriptor_of(cfg);
  gme::TetraGeom geom = gme::tetra_analysis(*input.pure, tri_kind_of(cfg), d, cfg.gamma);

  json report;
  stamp_report(report, cfg, "tetra");
  report["input"] = input.label;
  report["tri"] = cfg.tri;
  report["measure"] = gme::measure_name(d.kind);
  report["gamma"] = cfg.gamma;
  report["tri_values"] =
      edges_array_json(gme::EdgeVector4Tri::labels(), geom.tri_values);
  report["edges"] = edges_array_json(gme::kTetraEdgePairs, geom.edges);
  report["faces"] = edges_array_json(gme::kTetraFaces, geom.face_areas);
  report["case"] = gme::tetra_case_name(geom.case_label);
  report["volume"] = geom.volume ? json(*geom.volume) : json(nullptr);
  report["reduced_edge"] = geom.reduced_edge ? json(*geom.reduced_edge) : json(nullptr);
  report["delta"] = gme::delta_bisep(*input.pure, d);
  emit_report(report, cfg);
  return 0;
}

int cmd_alpha_scan(const RunConfig& cfg, const std::vector<int>& dims) {
  if (cfg.samples < 1) throw gme::InputError("alpha-scan requires --samples >= 1");
  if (cfg.out.empty()) throw gme::InputError("alpha-scan requires --out for the CSV");
  gme::MeasureDescriptor d = descriptor_of(cfg);

  if (dims.size() == 3) {
    std::string csv = "seed,gamma_star,x,y,z,case_label\n";
    long violations = 0;
    long skipped = 0;
    for (long i = 0; i < cfg.samples; ++i) {
      std::uint64_t sample_seed = cfg.seed + static_cast<std::uint64_t>(i);
      gme::PureState psi = gme::haar_random_pure(dims, sample_seed);
      gme::EdgeVector3 e = gme::edge_vector_3(psi, d);
      bool ok = gme::triangle_check(e.x, e.y, e.z, 1.0);
      if (!ok) ++violations;
      auto gs = gme::try_gamma_star(e.x, e.y, e.z);
      if (!gs) ++skipped;
      csv += std::to_string(sample_seed) + "," + (gs ? csv_number(*gs) : "") + "," +
             csv_number(e.x) + "," + csv_number(e.y) + "," + csv_number(e.z) + "," +
             (!ok ? "violation" : (gs ? "ok" : "unconstrained")) + "\n";
    }
    gme::write_text_file(cfg.out, csv);

    json summary;
    stamp_report(summary, cfg, "alpha-scan");
    summary["samples"] = cfg.samples;
    summary["violations"] = violations;
    summary["skipped"] = skipped;
    try {
      gme::RefineConfig refine;
      refine.iterations = cfg.refine_iterations;
      gme::AlphaEstimate estimate =
          gme::alpha_estimate(dims, d, cfg.samples, cfg.seed, refine);
      summary["alpha_hat"] = estimate.alpha_hat;
      summary["witness_seed"] = estimate.witness_seed;
      std::string witness_path =
          cfg.witness.empty() ? cfg.out + ".witness.json" : cfg.witness;
      gme::save_state(estimate.witness, witness_path);
      summary["witness_file"] = witness_path;
    } catch (const gme::NotApplicableError&) {
      summary["alpha_hat"] = nullptr;
      summary["witness_file"] = nullptr;
      summary["status"] = "not_applicable";
    }
    std::string summary_text = summary.dump(2) + "\n";
    if (!cfg.summary.empty()) gme::write_text_file(cfg.summary, summary_text);
    std::cout << summary_text;
    return 0;
  }

  if (dims.size() == 4) {
    //- Tetrahedron campaign: six tripartite values and the structure
    //- class per sample; logs any equality/reversal specimens.
    std::string csv = "seed,x1,x2,x3,x4,x5,x6,case_label\n";
    long violations = 0;
    json specimens = json::array();
    std::map<std::string, long> case_counts;
    for (long i = 0; i < cfg.samples; ++i) {
      std::uint64_t sample_seed = cfg.seed + static_cast<std::uint64_t>(i);
      gme::PureState psi = gme::haar_random_pure(dims, sample_seed);
      gme::EdgeVector4Tri e = gme::edge_vector_4_tri(psi, tri_kind_of(cfg), d);
      std::string label;
      try {
        gme::TetraGeom geom = gme::tetra_from_tripartitions(e, cfg.gamma);
        label = gme::tetra_case_name(geom.case_label);
        if (geom.case_label == gme::TetraCase::B1 ||
            geom.case_label == gme::TetraCase::C) {
          specimens.push_back(sample_seed);
        }
      } catch (const gme::FaceInequalityViolation&) {
        ++violations;
        label = "face_violation";
      }
      ++case_counts[label];
      csv += std::to_string(sample_seed);
      for (double v : e.values) csv += "," + csv_number(v);
      csv += "," + label + "\n";
    }
    gme::write_text_file(cfg.out, csv);

    json summary;
    stamp_report(summary, cfg, "alpha-scan");
    summary["samples"] = cfg.samples;
    summary["violations"] = violations;
    summary["alpha_hat"] = nullptr;
    summary["witness_file"] = nullptr;
    summary["cases"] = case_counts;
    summary["equality_or_reversal_seeds"] = specimens;
    std::string summary_text = summary.dump(2) + "\n";
    if (!cfg.summary.empty()) gme::write_text_file(cfg.summary, summary_text);
    std::cout << summary_text;
    return 0;
  }

  throw gme::InputError("alpha-scan supports 3-party (triangle) or 4-party "
                        "(tetrahedron) dims");
}

int cmd_roof(const RunConfig& cfg) {
  ResolvedInput input = resolve_input(cfg);
  gme::DensityMatrix rho = input.density ? *input.density : gme::density_of(*input.pure);
  gme::MeasureDescriptor d = descriptor_of(cfg);

  json report;
  stamp_report(report, cfg, "roof");
  report["input"] = input.label;
  report["measure"] = gme::measure_name(d.kind);

  if (!cfg.family.empty()) {
    gme::TriComposite which;
    if (cfg.family == "eg123") {
      which = gme::TriComposite::EG123;
    } else if (cfg.family == "e123") {
      which = gme::TriComposite::E123;
    } else {
      throw gme::InputError("roof --family supports eg123 or e123");
    }
    report["family"] = cfg.family;
    report["value"] = gme::roofed_composite(rho, which, d, cfg.roof);
    emit_report(report, cfg);
    return 0;
  }

  gme::Partition cut =
      cfg.cut.empty()
          ? gme::make_partition({{0}, [&] {
                                   std::vector<int> rest;
                                   for (int p = 1; p < rho.num_parties(); ++p)
                                     rest.push_back(p);
                                   return rest;
                                 }()})
          : gme::parse_partition(cfg.cut, rho.num_parties());
  report["cut"] = gme::canonical_label(cut);

  gme::PureFunctional functional = [&cut, &d](const gme::PureState& psi) {
    return gme::pure_measure(psi, cut, d);
  };
  gme::RoofResult result = gme::roof_minimize(rho, functional, cfg.roof);
  report["value"] = result.value;
  report["eigen_average"] = result.eigen_average;
  report["upper_bound"] = result.upper_bound;
  report["restarts_used"] = result.restarts_used;
  report["evaluations"] = result.evaluations;
  emit_report(report, cfg);
  return 0;
}

int cmd_sample(const RunConfig& cfg, const std::vector<int>& dims) {
  if (cfg.out.empty()) throw gme::InputError("sample requires --out");
  if (cfg.count < 1) throw gme::InputError("sample requires --count >= 1");

  json files = json::array();
  for (long i = 0; i < cfg.count; ++i) {
    std::uint64_t sample_seed = cfg.seed + static_cast<std::uint64_t>(i);
    gme::PureState psi = gme::haar_random_pure(dims, sample_seed);
    std::string path = cfg.out;
    if (cfg.count > 1) {
      auto dot = path.rfind(".json");
      std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
      path = stem + "-" + std::to_string(i) + ".json";
    }
    gme::save_state(psi, path);
    files.push_back(path);
  }
  json report;
  stamp_report(report, cfg, "sample");
  report["dims"] = dims;
  report["count"] = cfg.count;
  report["files"] = files;
  std::cout << report.dump(2) << "\n";
  return 0;
}

//- Applies --config document values beneath any explicitly set flags.
void merge_config_file(RunConfig& cfg, const CLI::App& app) {
  if (cfg.config_path.empty()) return;
  json doc = json::parse(gme::read_text_file(cfg.config_path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw gme::InputError(cfg.config_path + ": not a JSON object");
  }
  auto unset = [&app](const std::string& flag) {
    auto* opt = app.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  auto take_string = [&](const char* key, const std::string& flag, std::string& out) {
    if (doc.contains(key) && unset(flag)) out = doc[key].get<std::string>();
  };
  take_string("state", "--state", cfg.state_arg);
  take_string("density", "--density", cfg.density_arg);
  take_string("measure", "--measure", cfg.measure);
  take_string("variant", "--variant", cfg.variant);
  take_string("tri", "--tri", cfg.tri);
  take_string("family", "--family", cfg.family);
  take_string("cut", "--cut", cfg.cut);
  take_string("out", "--out", cfg.out);
  take_string("summary", "--summary", cfg.summary);
  take_string("witness", "--witness", cfg.witness);
  if (doc.contains("gamma") && unset("--gamma")) cfg.gamma = doc["gamma"].get<double>();
  if (doc.contains("samples") && unset("--samples"))
    cfg.samples = doc["samples"].get<long>();
  if (doc.contains("seed") && unset("--seed"))
    cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("count") && unset("--count")) cfg.count = doc["count"].get<long>();
  if (doc.contains("refine_iterations") && unset("--refine"))
    cfg.refine_iterations = doc["refine_iterations"].get<int>();
  if (doc.contains("roof")) {
    cfg.roof = gme::roof_config_from_json_text(doc["roof"].dump());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipartite entanglement measures: edge vectors, composite "
               "measures, convex roofs, triangle/tetrahedron structure and "
               "exponent scans"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gme::kVersion));

  RunConfig cfg;
  std::vector<int> dims;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--config", cfg.config_path, "RunConfig JSON document");
    sub->add_option("--roof-config", cfg.roof_config_path,
                    "RoofConfig JSON document (overrides --config roof section)");
    sub->add_option("--seed", cfg.seed, "seed for sampling and the roof optimizer");
    sub->add_option("--out", cfg.out, "output path (default stdout; CSV for scans)");
  };

  CLI::App* measure = app.add_subcommand("measure", "edge vectors and composites");
  measure->add_option("--state", cfg.state_arg, "named state (ghz|w|ghz4|w4|product) or file");
  measure->add_option("--density", cfg.density_arg, "density-matrix JSON file");
  measure->add_option("--measure", cfg.measure, "tangle|concurrence|eof|negativity");
  measure->add_option("--variant", cfg.variant, "ratio|product");
  measure->add_option("--tri", cfg.tri, "tripartite entry measure: tau3|ef3|eg123|e123|f123");
  measure->add_option("--family", cfg.family, "report a single family value");
  add_common(measure);

  CLI::App* triangle = app.add_subcommand("triangle", "edge triangle geometry");
  triangle->add_option("--state", cfg.state_arg, "named state or file");
  triangle->add_option("--density", cfg.density_arg, "density-matrix JSON file");
  triangle->add_option("--measure", cfg.measure, "tangle|concurrence|eof|negativity");
  triangle->add_option("--gamma", cfg.gamma, "exponent applied to edges");
  add_common(triangle);

  CLI::App* tetra = app.add_subcommand("tetra", "tripartition tetrahedron structure");
  tetra->add_option("--state", cfg.state_arg, "named state or file (pure, 4 parties)");
  tetra->add_option("--tri", cfg.tri, "tau3|ef3|eg123|e123|f123");
  tetra->add_option("--measure", cfg.measure, "bipartite measure for composite entries");
  tetra->add_option("--gamma", cfg.gamma, "exponent applied to edges");
  add_common(tetra);

  CLI::App* scan = app.add_subcommand("alpha-scan", "saturation-exponent campaign");
  scan->add_option("--dims", dims, "per-party dimensions, e.g. --dims 2 2 2")
      ->delimiter(',');
  scan->add_option("--measure", cfg.measure, "tangle|concurrence|eof|negativity");
  scan->add_option("--tri", cfg.tri, "tripartite measure for 4-party campaigns");
  scan->add_option("--samples", cfg.samples, "number of Haar samples");
  scan->add_option("--gamma", cfg.gamma, "exponent for the 4-party structure classes");
  scan->add_option("--refine", cfg.refine_iterations, "local-search refinement steps");
  scan->add_option("--summary", cfg.summary, "summary JSON path (also on stdout)");
  scan->add_option("--witness", cfg.witness, "witness state path");
  add_common(scan);

  CLI::App* roof = app.add_subcommand("roof", "convex-roof minimization");
  roof->add_option("--state", cfg.state_arg, "named state or file (used as projector)");
  roof->add_option("--density", cfg.density_arg, "density-matrix JSON file");
  roof->add_option("--measure", cfg.measure, "tangle|concurrence|eof|negativity");
  roof->add_option("--cut", cfg.cut, "bipartition, e.g. \"A|BC\" (default first-vs-rest)");
  roof->add_option("--family", cfg.family, "roof of a composite: eg123|e123");
  add_common(roof);

  CLI::App* sample = app.add_subcommand("sample", "write Haar-random states");
  sample->add_option("--dims", dims, "per-party dimensions")->delimiter(',');
  sample->add_option("--count", cfg.count, "number of states");
  add_common(sample);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    merge_config_file(cfg, *sub);
    if (!cfg.roof_config_path.empty()) {
      cfg.roof = gme::roof_config_from_json_text(gme::read_text_file(cfg.roof_config_path));
    }
    //- The roof optimizer inherits the campaign seed unless a roof config
    //- document pinned its own.
    if (cfg.roof_config_path.empty()) cfg.roof.seed = cfg.seed;

    if (sub == measure) return cmd_measure(cfg);
    if (sub == triangle) return cmd_triangle(cfg);
    if (sub == tetra) return cmd_tetra(cfg);
    if (sub == scan) return cmd_alpha_scan(cfg, dims);
    if (sub == roof) return cmd_roof(cfg);
    if (sub == sample) return cmd_sample(cfg, dims);
    throw gme::InputError("unhandled subcommand");
  } catch (const gme::ContractError& e) {
    std::cerr << "numerical-contract violation: " << e.what() << "\n";
    return 3;
  } catch (const gme::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

// polarmap: Jones/Mueller/Stokes calculus, Cloude decomposition, one- and
// two-qubit map application, Werner/MEMS generation and the linear-optical
// network simulator, behind one deterministic command-line surface.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarmap/cloude.hpp"
#include "polarmap/ent_metrics.hpp"
#include "polarmap/json_io.hpp"
#include "polarmap/mems.hpp"
#include "polarmap/network.hpp"
#include "polarmap/qmaps.hpp"

namespace {

using nlohmann::json;
using namespace polarmap;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLARMAP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("POLARMAP_SEED is not an unsigned integer");
    }
  }
  return 0;
}

MuellerStd as_mueller_std(const MatrixDocument& doc) {
  switch (doc.kind) {
    case DocKind::jones:
      return mueller_from_jones(std::get<JonesMatrix>(doc.value)).std_form;
    case DocKind::mueller_std:
      return std::get<MuellerStd>(doc.value);
    case DocKind::mueller_real:
      return std_from_real(std::get<MuellerReal>(doc.value));
    default:
      throw ValidationError("expected a jones or mueller document");
  }
}

json classification_json(const MapClassification& c) {
  return json{{"physical", c.physical},
              {"trace_preserving", c.trace_preserving},
              {"unital", c.unital},
              {"dichroic", c.dichroic},
              {"min_eigenvalue", c.min_eigenvalue},
              {"diattenuation_norm", c.diattenuation_norm},
              {"polarizance_norm", c.polarizance_norm}};
}

json kraus_json(const KrausSet& ks) {
  json lambdas = json::array(), jones = json::array();
  for (const auto& [weight, t] : ks.terms) {
    lambdas.push_back(weight);
    jones.push_back(serialize(t));
  }
  return json{{"lambdas", lambdas}, {"jones", jones}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  return file;
}

int cmd_jones2mueller(const std::string& file) {
  const MatrixDocument doc = parse_matrix_file(file);
  if (doc.kind != DocKind::jones) throw ValidationError("jones2mueller expects a jones document");
  const MuellerForms forms = mueller_from_jones(std::get<JonesMatrix>(doc.value));
  emit(json{{"mueller_std", serialize(forms.std_form)},
            {"mueller_real", serialize(forms.real_form)}});
  return kExitOk;
}

int cmd_cloude(const std::string& file) {
  const MuellerStd m = as_mueller_std(parse_matrix_file(file));
  const KrausSet ks = cloude_decompose(m);  // throws on unphysical input
  json out = kraus_json(ks);
  out["classification"] = classification_json(classify(m));
  emit(out);
  return kExitOk;
}

int cmd_validate(const std::string& file) {
  const MuellerStd m = as_mueller_std(parse_matrix_file(file));
  emit(classification_json(classify(m)));
  return kExitOk;
}

int cmd_apply(const std::string& map_file, const std::string& map_b_file,
              const std::string& state_file, bool singlet) {
  const MuellerStd mA = as_mueller_std(parse_matrix_file(map_file));

  if (singlet) {
    if (!map_b_file.empty()) throw UsageError("--singlet uses only the A-side map");
    const DensityMatrix2 out = apply_to_singlet(mA);
    emit(json{{"state", serialize(out)}, {"trace", 1.0}});
    return kExitOk;
  }

  if (state_file.empty()) throw UsageError("--state is required unless --singlet is given");
  const MatrixDocument state = parse_matrix_file(state_file);

  if (state.kind == DocKind::density1) {
    if (!map_b_file.empty()) throw UsageError("--map-b needs a two-qubit state");
    const Applied1 out = apply_one_qubit(mA, std::get<DensityMatrix1>(state.value));
    emit(json{{"state", serialize(out.state)}, {"trace", out.trace}});
    return kExitOk;
  }
  if (state.kind == DocKind::density2) {
    const MuellerStd mB = map_b_file.empty() ? MuellerStd::identity()
                                             : as_mueller_std(parse_matrix_file(map_b_file));
    const Applied2 out = apply_bilocal(mA, mB, std::get<DensityMatrix2>(state.value));
    emit(json{{"state", serialize(out.state)}, {"trace", out.trace}});
    return kExitOk;
  }
  throw ValidationError("--state expects a density1 or density2 document");
}

int cmd_simulate_dichroic(std::size_t samples, std::uint64_t seed, const std::string& out_path) {
  const auto rows = monte_carlo_dichroic(samples, seed);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "index,p,d0,d1,theta,linear_entropy,tangle,class\n";
  for (const auto& s : rows) {
    out << s.index << ',' << format_double(s.p) << ',' << format_double(s.d0) << ','
        << format_double(s.d1) << ',' << format_double(s.theta) << ','
        << format_double(s.linear_entropy) << ',' << format_double(s.tangle) << ','
        << to_string(s.cls) << "\n";
  }
  return kExitOk;
}

int cmd_curves(int grid, const std::string& out_path) {
  const BoundaryCurves curves = boundary_curves(grid);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "curve,p,linear_entropy,tangle\n";
  for (const auto* curve : {&curves.werner, &curves.mems})
    for (const auto& pt : curve->points)
      out << curve->label << ',' << format_double(pt.p) << ',' << format_double(pt.linear_entropy)
          << ',' << format_double(pt.tangle) << "\n";
  return kExitOk;
}

int cmd_mems(double p, bool check) {
  const MemsMapPair pair = mems_mueller_pair(p);
  json out{{"p", p},
           {"g", pair.params.g},
           {"region", pair.params.region == MemsRegion::I ? "I" : "II"},
           {"state", serialize(mems_state(p))},
           {"mueller_a", serialize(pair.mA_real)},
           {"mueller_b", serialize(pair.mB_real)},
           {"kraus_a", kraus_json(pair.krausA)},
           {"kraus_b", kraus_json(pair.krausB)},
           {"spectrum", pair.spectrum}};
  int code = kExitOk;
  if (check) {
    const MemsReport rep = verify_mems(p);
    out["report"] = json{{"state_error", rep.state_error},
                         {"imag_error", rep.imag_error},
                         {"reduced_a_error", rep.reduced_a_error},
                         {"reduced_b_error", rep.reduced_b_error},
                         {"trace_cond_error", rep.trace_cond_error},
                         {"unitality_error", rep.unitality_error},
                         {"mueller_recon_error", rep.mueller_recon_error},
                         {"spectrum_error", rep.spectrum_error},
                         {"max_error", rep.max_error()}};
    if (rep.max_error() > 1e-9) code = kExitValidation;
  }
  emit(out);
  return code;
}

JonesVector parse_input_amplitudes(const std::string& text) {
  std::array<double, 4> v{1.0, 0.0, 0.0, 0.0};
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string item;
    for (int k = 0; k < 4; ++k) {
      if (!std::getline(ss, item, ','))
        throw UsageError("--input needs four comma-separated numbers");
      try {
        v[k] = std::stod(item);
      } catch (const std::exception&) {
        throw UsageError("--input needs four comma-separated numbers");
      }
    }
    if (std::getline(ss, item, ',')) throw UsageError("--input needs exactly four numbers");
  }
  return {cplx{v[0], v[1]}, cplx{v[2], v[3]}};
}

int cmd_network(int figure, double p, const std::string& input, bool check) {
  const NetworkSpec spec = build_figure_network(figure, p);
  const NetworkResult res = run_network(spec, parse_input_amplitudes(input));

  json branches = json::array();
  for (const auto& br : res.branches)
    branches.push_back(
        json{{"mode", br.mode}, {"state", {complex_to_json(br.h), complex_to_json(br.v)}}});
  json rho = json::array();
  for (int r = 0; r < 2; ++r)
    rho.push_back(json::array({complex_to_json(res.rho(r, 0)), complex_to_json(res.rho(r, 1))}));

  json out{
      {"figure", figure}, {"p", p}, {"branches", branches}, {"rho", rho}, {"trace", res.trace}};
  int code = kExitOk;
  if (check) {
    const Side side = (figure == 5 || figure == 7) ? Side::A : Side::B;
    const double err = network_equals_kraus(side, p, 20);
    out["kraus_equivalence_error"] = err;
    if (err > 1e-10) code = kExitValidation;
  }
  emit(out);
  return code;
}

int run(int argc, char** argv) {
  CLI::App app{"classical polarization maps as one- and two-qubit quantum channels"};
  app.require_subcommand(1);

  std::string in_file, map_file, map_b_file, state_file, out_path, input_text;
  bool singlet = false, check = false;
  std::size_t samples = 10000;
  std::optional<std::uint64_t> seed;
  int grid = 201, figure = 5;
  double p = 1.0;

  auto* j2m = app.add_subcommand("jones2mueller", "Jones matrix to both Mueller forms");
  j2m->add_option("file", in_file, "jones JSON document")->required();

  auto* cloude = app.add_subcommand("cloude", "spectral decomposition into Jones matrices");
  cloude->add_option("file", in_file, "mueller or jones JSON document")->required();

  auto* validate = app.add_subcommand("validate", "classify a map");
  validate->add_option("file", in_file, "mueller or jones JSON document")->required();

  auto* apply = app.add_subcommand("apply", "apply a map to a state");
  apply->add_option("--map", map_file, "A-side map document")->required();
  apply->add_option("--map-b", map_b_file, "B-side map document");
  apply->add_option("--state", state_file, "density1 or density2 document");
  apply->add_flag("--singlet", singlet, "apply the A-side map to the singlet exactly");

  auto* sim = app.add_subcommand("simulate-dichroic", "dichroic-scatterer Monte Carlo");
  sim->add_option("--samples", samples, "number of samples")->default_val(std::size_t{10000});
  sim->add_option("--seed", seed, "RNG seed (default: POLARMAP_SEED or 0)");
  sim->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* curves = app.add_subcommand("curves", "Werner and MEMS boundary curves");
  curves->add_option("--grid", grid, "points per curve")->default_val(201);
  curves->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* mems = app.add_subcommand("mems", "MEMS state, Mueller pair and Kraus operators");
  mems->add_option("--p", p, "MEMS parameter in [0,1]")->required();
  mems->add_flag("--check", check, "verify the construction end to end");

  auto* network = app.add_subcommand("network", "simulate one of the optical networks");
  network->add_option("--figure", figure, "network figure: 5, 6, 7 or 8")->required();
  network->add_option("--p", p, "map parameter in the figure's region")->required();
  network->add_option("--input", input_text, "input amplitudes a_re,a_im,b_re,b_im");
  network->add_flag("--check", check, "compare against the Kraus map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "polarmap: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*j2m) return cmd_jones2mueller(in_file);
    if (*cloude) return cmd_cloude(in_file);
    if (*validate) return cmd_validate(in_file);
    if (*apply) return cmd_apply(map_file, map_b_file, state_file, singlet);
    if (*sim) return cmd_simulate_dichroic(samples, seed ? *seed : default_seed(), out_path);
    if (*curves) return cmd_curves(grid, out_path);
    if (*mems) return cmd_mems(p, check);
    if (*network) return cmd_network(figure, p, input_text, check);
  } catch (const UsageError& e) {
    std::cerr << "polarmap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileNotFoundError& e) {
    std::cerr << "polarmap: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "polarmap: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

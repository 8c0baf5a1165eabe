// Python bindings for the core operations.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarmap/cloude.hpp"
#include "polarmap/ent_metrics.hpp"
#include "polarmap/mems.hpp"
#include "polarmap/network.hpp"
#include "polarmap/qmaps.hpp"

namespace py = pybind11;
using namespace polarmap;

namespace {

using PyMat = std::vector<std::vector<cplx>>;
using PyRMat = std::vector<std::vector<double>>;

template <int N>
CMatrix<N> to_cmat(const PyMat& rows) {
  if (rows.size() != N) throw ValidationError("matrix must have " + std::to_string(N) + " rows");
  CMatrix<N> out;
  for (int r = 0; r < N; ++r) {
    if (rows[r].size() != N)
      throw ValidationError("matrix row must have " + std::to_string(N) + " entries");
    for (int c = 0; c < N; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

template <int N>
PyMat from_cmat(const CMatrix<N>& m) {
  PyMat rows(N, std::vector<cplx>(N));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) rows[r][c] = m(r, c);
  return rows;
}

PyRMat from_rmat4(const RMat4& m) {
  PyRMat rows(4, std::vector<double>(4));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rows[r][c] = m(r, c);
  return rows;
}

RMat4 to_rmat4(const PyRMat& rows) {
  if (rows.size() != 4) throw ValidationError("matrix must have 4 rows");
  RMat4 out;
  for (int r = 0; r < 4; ++r) {
    if (rows[r].size() != 4) throw ValidationError("matrix row must have 4 entries");
    for (int c = 0; c < 4; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

Side side_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Side::A;
  if (s == "B" || s == "b") return Side::B;
  throw ValidationError("side must be 'A' or 'B'");
}

std::vector<std::pair<double, PyMat>> kraus_to_py(const KrausSet& ks) {
  std::vector<std::pair<double, PyMat>> out;
  for (const auto& [weight, t] : ks.terms) out.emplace_back(weight, from_cmat(t.t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_polarmap, m) {
  m.doc() = "Polarization maps as one- and two-qubit quantum channels";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ZeroIntensityError>(m, "ZeroIntensityError", PyExc_ValueError);

  py::class_<MapClassification>(m, "MapClassification")
      .def_readonly("physical", &MapClassification::physical)
      .def_readonly("trace_preserving", &MapClassification::trace_preserving)
      .def_readonly("unital", &MapClassification::unital)
      .def_readonly("dichroic", &MapClassification::dichroic)
      .def_readonly("min_eigenvalue", &MapClassification::min_eigenvalue)
      .def_readonly("diattenuation_norm", &MapClassification::diattenuation_norm)
      .def_readonly("polarizance_norm", &MapClassification::polarizance_norm);

  py::class_<MemsReport>(m, "MemsReport")
      .def_readonly("p", &MemsReport::p)
      .def_readonly("state_error", &MemsReport::state_error)
      .def_readonly("imag_error", &MemsReport::imag_error)
      .def_readonly("reduced_a_error", &MemsReport::reduced_a_error)
      .def_readonly("reduced_b_error", &MemsReport::reduced_b_error)
      .def_readonly("trace_cond_error", &MemsReport::trace_cond_error)
      .def_readonly("unitality_error", &MemsReport::unitality_error)
      .def_readonly("mueller_recon_error", &MemsReport::mueller_recon_error)
      .def_readonly("spectrum_error", &MemsReport::spectrum_error)
      .def("max_error", &MemsReport::max_error);

  py::class_<ScatterSample>(m, "ScatterSample")
      .def_readonly("index", &ScatterSample::index)
      .def_readonly("p", &ScatterSample::p)
      .def_readonly("d0", &ScatterSample::d0)
      .def_readonly("d1", &ScatterSample::d1)
      .def_readonly("theta", &ScatterSample::theta)
      .def_readonly("linear_entropy", &ScatterSample::linear_entropy)
      .def_readonly("tangle", &ScatterSample::tangle)
      .def_property_readonly("cls",
                             [](const ScatterSample& s) { return std::string(to_string(s.cls)); });

  m.def("hwp", [](double theta) { return from_cmat(jones_hwp(theta).t); }, py::arg("theta"));
  m.def("rotator", [](double theta) { return from_cmat(jones_rotator(theta).t); },
        py::arg("theta"));
  m.def("diattenuator",
        [](double d0, double d1, double theta) {
          return from_cmat(jones_diattenuator(d0, d1, theta).t);
        },
        py::arg("d0"), py::arg("d1"), py::arg("theta"));
  m.def("retarder",
        [](std::array<double, 3> axis, double delta) {
          return from_cmat(jones_retarder(axis, delta).t);
        },
        py::arg("axis"), py::arg("delta"));
  m.def("depolarizer",
        [](double a, double b, double c) { return from_cmat(make_depolarizer(a, b, c).m); },
        py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("jones_to_mueller",
        [](const PyMat& t) {
          const MuellerForms f = mueller_from_jones(JonesMatrix{to_cmat<2>(t)});
          return py::make_tuple(from_cmat(f.std_form.m), from_rmat4(f.real_form.m));
        },
        py::arg("t"), "Returns (standard-basis 4x4 complex, real 4x4) Mueller forms");
  m.def("ensemble_to_mueller",
        [](const std::vector<std::pair<double, PyMat>>& members) {
          EnsembleSpec spec;
          for (const auto& [w, t] : members) spec.push_back({w, JonesMatrix{to_cmat<2>(t)}});
          const MuellerForms f = mueller_from_ensemble(spec);
          return py::make_tuple(from_cmat(f.std_form.m), from_rmat4(f.real_form.m));
        },
        py::arg("members"));
  m.def("mueller_real_from_std",
        [](const PyMat& m) { return from_rmat4(real_from_std(MuellerStd{to_cmat<4>(m)}).m); },
        py::arg("m"));
  m.def("mueller_std_from_real",
        [](const PyRMat& m) {
          MuellerReal r;
          r.m = to_rmat4(m);
          return from_cmat(std_from_real(r).m);
        },
        py::arg("m"));

  m.def("reshuffle", [](const PyMat& m) { return from_cmat(reshuffle_indices(to_cmat<4>(m))); },
        py::arg("m"), "Mueller <-> Choi / rho <-> rho^R index permutation (involution)");
  m.def("cloude_decompose",
        [](const PyMat& m) { return kraus_to_py(cloude_decompose(MuellerStd{to_cmat<4>(m)})); },
        py::arg("m"), "Weighted Jones matrices, weights descending");
  m.def("classify", [](const PyMat& m) { return classify(MuellerStd{to_cmat<4>(m)}); },
        py::arg("m"));

  m.def("apply_one_qubit",
        [](const PyMat& m, const PyMat& rho) {
          const Applied1 out =
              apply_one_qubit(MuellerStd{to_cmat<4>(m)}, DensityMatrix1::checked(to_cmat<2>(rho)));
          return py::make_tuple(from_cmat(out.state.r), out.trace);
        },
        py::arg("m"), py::arg("rho"));
  m.def("apply_bilocal",
        [](const PyMat& ma, const PyMat& mb, const PyMat& rho) {
          const Applied2 out = apply_bilocal(MuellerStd{to_cmat<4>(ma)}, MuellerStd{to_cmat<4>(mb)},
                                             DensityMatrix2::checked(to_cmat<4>(rho)));
          return py::make_tuple(from_cmat(out.state.r), out.trace);
        },
        py::arg("ma"), py::arg("mb"), py::arg("rho"));
  m.def("apply_to_singlet",
        [](const PyMat& ma) { return from_cmat(apply_to_singlet(MuellerStd{to_cmat<4>(ma)}).r); },
        py::arg("ma"), "Exact output for the singlet input; requires M00 = 1");
  m.def("purity_from_mueller",
        [](const PyRMat& m) {
          MuellerReal r;
          r.m = to_rmat4(m);
          return purity_from_mueller(r);
        },
        py::arg("m"));
  m.def("partial_trace",
        [](const PyMat& rho, const std::string& side) {
          return from_cmat(partial_trace(to_cmat<4>(rho), side_from_string(side)));
        },
        py::arg("rho"), py::arg("side"), "Reduced state of the requested qubit");

  m.def("singlet", []() { return from_cmat(singlet_state().r); });
  m.def("bell_state", [](int k) { return from_cmat(bell_state(k).r); }, py::arg("k"));
  m.def("werner_state", [](double p) { return from_cmat(werner_state(p).r); }, py::arg("p"));
  m.def("generalized_werner",
        [](double p, const PyMat& u) {
          return from_cmat(generalized_werner(p, JonesMatrix{to_cmat<2>(u)}).r);
        },
        py::arg("p"), py::arg("u"));
  m.def("mems_state", [](double p) { return from_cmat(mems_state(p).r); }, py::arg("p"));

  m.def("linear_entropy",
        [](const PyMat& rho) { return linear_entropy(DensityMatrix2::checked(to_cmat<4>(rho))); },
        py::arg("rho"));
  m.def("concurrence_tangle",
        [](const PyMat& rho) {
          const auto ct = concurrence_tangle(DensityMatrix2::checked(to_cmat<4>(rho)));
          return py::make_tuple(ct.concurrence, ct.tangle);
        },
        py::arg("rho"));
  m.def("werner_tangle_at", &werner_tangle_at, py::arg("linear_entropy"));

  m.def("dichroic_sample",
        [](double p, double d0, double d1, double theta) {
          const Applied2 out = dichroic_sample(p, d0, d1, theta);
          return py::make_tuple(from_cmat(out.state.r), out.trace);
        },
        py::arg("p"), py::arg("d0"), py::arg("d1"), py::arg("theta"));
  m.def("monte_carlo_dichroic", &monte_carlo_dichroic, py::arg("n"), py::arg("seed"));
  m.def("boundary_curves",
        [](int grid) {
          const BoundaryCurves curves = boundary_curves(grid);
          py::dict out;
          for (const auto* curve : {&curves.werner, &curves.mems}) {
            py::list pts;
            for (const auto& pt : curve->points)
              pts.append(py::make_tuple(pt.p, pt.linear_entropy, pt.tangle));
            out[curve->label.c_str()] = pts;
          }
          return out;
        },
        py::arg("grid"));

  m.def("mems_pair",
        [](double p) {
          const MemsMapPair pair = mems_mueller_pair(p);
          py::dict out;
          out["p"] = pair.params.p;
          out["g"] = pair.params.g;
          out["region"] = pair.params.region == MemsRegion::I ? "I" : "II";
          out["mueller_a"] = from_rmat4(pair.mA_real.m);
          out["mueller_b"] = from_rmat4(pair.mB_real.m);
          out["mueller_a_std"] = from_cmat(pair.mA.m);
          out["mueller_b_std"] = from_cmat(pair.mB.m);
          out["kraus_a"] = kraus_to_py(pair.krausA);
          out["kraus_b"] = kraus_to_py(pair.krausB);
          out["spectrum"] = pair.spectrum;
          return out;
        },
        py::arg("p"));
  m.def("verify_mems", &verify_mems, py::arg("p"));

  m.def("run_network",
        [](int figure, double p, const cplx& a, const cplx& b) {
          const NetworkResult res = run_network(build_figure_network(figure, p), {a, b});
          py::list branches;
          for (const auto& br : res.branches)
            branches.append(py::make_tuple(br.mode, br.h, br.v));
          return py::make_tuple(branches, from_cmat(res.rho), res.trace);
        },
        py::arg("figure"), py::arg("p"), py::arg("a"), py::arg("b"));
  m.def("network_equals_kraus",
        [](const std::string& side, double p, int trials) {
          return network_equals_kraus(side_from_string(side), p, trials);
        },
        py::arg("side"), py::arg("p"), py::arg("trials") = 20);

#ifdef POLARMAP_VERSION
#define POLARMAP_STR2(x) #x
#define POLARMAP_STR(x) POLARMAP_STR2(x)
  m.attr("__version__") = POLARMAP_STR(POLARMAP_VERSION);
#else
  m.attr("__version__") = "dev";
#endif
}

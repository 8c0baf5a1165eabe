#include "polarmap/network.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polarmap/mueller.hpp"
#include "polarmap/rng.hpp"

namespace polarmap {

cplx ModeState::get(Pol pol, int mode) const {
  const auto it = amp.find({mode, pol});
  return it == amp.end() ? cplx{} : it->second;
}

void ModeState::add(Pol pol, int mode, const cplx& value) {
  if (value == cplx{}) return;
  amp[{mode, pol}] += value;
}

void ModeState::set(Pol pol, int mode, const cplx& value) {
  if (value == cplx{})
    amp.erase({mode, pol});
  else
    amp[{mode, pol}] = value;
}

double ModeState::norm2() const {
  double s = 0.0;
  for (const auto& [key, a] : amp) s += std::norm(a);
  return s;
}

std::array<cplx, 2> ModeState::polarization_at(int mode) const {
  return {get(Pol::H, mode), get(Pol::V, mode)};
}

namespace {

// 2x2 action on the polarization amplitudes of one spatial mode.
void apply_jones_at(ModeState& s, const CMat2& t, int mode) {
  const cplx h = s.get(Pol::H, mode), v = s.get(Pol::V, mode);
  s.set(Pol::H, mode, t(0, 0) * h + t(0, 1) * v);
  s.set(Pol::V, mode, t(1, 0) * h + t(1, 1) * v);
}

// 2x2 action on one polarization across two spatial modes (n, m).
void apply_spatial(ModeState& s, Pol pol, const CMat2& u, int n, int m) {
  const cplx an = s.get(pol, n), am = s.get(pol, m);
  s.set(pol, n, u(0, 0) * an + u(0, 1) * am);
  s.set(pol, m, u(1, 0) * an + u(1, 1) * am);
}

}  // namespace

ModeState apply_element(const Element& e, const ModeState& s) {
  ModeState out = s;
  switch (e.kind) {
    case Element::Kind::pbs: {
      // H passes, V swaps spatial modes
      const cplx vn = out.get(Pol::V, e.n), vm = out.get(Pol::V, e.m);
      out.set(Pol::V, e.n, vm);
      out.set(Pol::V, e.m, vn);
      break;
    }
    case Element::Kind::hwp:
      apply_jones_at(out, jones_hwp(e.theta).t, e.n);
      break;
    case Element::Kind::rotator:
      apply_jones_at(out, jones_rotator(e.theta).t, e.n);
      break;
    case Element::Kind::hvbs: {
      // |H,n> -> cos |H,n> + sin |H,m>, completed to a rotation
      const double c = std::cos(e.theta), sn = std::sin(e.theta);
      apply_spatial(out, Pol::H, CMat2{{c, -sn, sn, c}}, e.n, e.m);
      break;
    }
    case Element::Kind::vvbs: {
      // |V,m> -> cos |V,n> + sin |V,m>, completed to a rotation
      const double c = std::cos(e.theta), sn = std::sin(e.theta);
      apply_spatial(out, Pol::V, CMat2{{sn, c, -c, sn}}, e.n, e.m);
      break;
    }
    case Element::Kind::mirror: {
      for (Pol pol : {Pol::H, Pol::V}) {
        const cplx an = out.get(pol, e.n), am = out.get(pol, e.m);
        out.set(pol, e.n, am);
        out.set(pol, e.m, an);
      }
      break;
    }
    case Element::Kind::arm_phase: {
      const cplx ph = std::polar(1.0, e.theta);
      out.set(Pol::H, e.n, ph * out.get(Pol::H, e.n));
      out.set(Pol::V, e.n, ph * out.get(Pol::V, e.n));
      break;
    }
  }
  return out;
}

std::vector<Element> hvbs_composite(double theta, int n, int m) {
  return {Element::hwp(0.5 * (std::numbers::pi - theta), n), Element::pbs(n, m),
          Element::hwp(0.25 * std::numbers::pi, m)};
}

std::vector<Element> vvbs_composite(double theta, int n, int m) {
  return {Element::hwp(0.5 * theta, m), Element::pbs(n, m),
          Element::hwp(0.25 * std::numbers::pi, m)};
}

namespace {

bool declared(const NetworkSpec& spec, int mode) {
  return std::find(spec.modes.begin(), spec.modes.end(), mode) != spec.modes.end();
}

}  // namespace

NetworkResult run_network(const NetworkSpec& spec, const JonesVector& psi0) {
  if (!declared(spec, spec.input_mode))
    throw ValidationError("run_network: input mode is not declared");
  for (const Element& e : spec.elements)
    if (!declared(spec, e.n) || !declared(spec, e.m))
      throw ValidationError("run_network: element references an undeclared mode");

  ModeState state;
  state.set(Pol::H, spec.input_mode, psi0.e0);
  state.set(Pol::V, spec.input_mode, psi0.e1);
  for (const Element& e : spec.elements) state = apply_element(e, state);

  std::vector<int> bins = spec.detector_modes.empty() ? spec.modes : spec.detector_modes;
  std::sort(bins.begin(), bins.end());

  NetworkResult out;
  for (int mode : bins) {
    const auto [h, v] = state.polarization_at(mode);
    out.branches.push_back({mode, h, v});
    out.rho(0, 0) += h * std::conj(h);
    out.rho(0, 1) += h * std::conj(v);
    out.rho(1, 0) += v * std::conj(h);
    out.rho(1, 1) += v * std::conj(v);
  }
  out.trace = out.rho.trace().real();
  return out;
}

NetworkSpec build_mems_network(Side side, double p) {
  const MemsParams mp = mems_params(p);
  const MemsAngles ang = mems_angles(p);
  const double pi = std::numbers::pi;
  NetworkSpec spec;

  if (mp.region == MemsRegion::I) {
    spec.modes = {1, 2};
    spec.elements.push_back(Element::pbs(1, 2));
    spec.elements.push_back(Element::vvbs(ang.theta_p, 1, 2));
    if (side == Side::A)
      spec.elements.push_back(Element::hwp(-0.25 * pi, 2));
    else
      spec.elements.push_back(Element::rotator(0.5 * pi, 1));
  } else {
    spec.modes = {1, 2, 3, 4};
    spec.elements.push_back(Element::pbs(1, 2));
    spec.elements.push_back(Element::vvbs(ang.theta_13, 3, 2));
    if (side == Side::A) spec.elements.push_back(Element::hwp(-0.25 * pi, 3));
    spec.elements.push_back(Element::vvbs(ang.theta_psi, 4, 2));
    spec.elements.push_back(Element::hvbs(ang.theta_phi, 4, 1));
    if (side == Side::B) spec.elements.push_back(Element::rotator(-0.5 * pi, 4));
    spec.elements.push_back(Element::pbs(1, 2));
    if (side == Side::B) spec.elements.push_back(Element::rotator(0.5 * pi, 1));
  }
  spec.detector_modes = spec.modes;
  return spec;
}

NetworkSpec build_figure_network(int figure, double p) {
  const bool region1 = figure == 5 || figure == 6;
  if (figure < 5 || figure > 8) throw ValidationError("build_figure_network: figure must be 5..8");
  const MemsParams mp = mems_params(p);
  if (region1 && mp.region != MemsRegion::I)
    throw ValidationError("build_figure_network: figures 5 and 6 require p > 2/3");
  if (!region1 && mp.region != MemsRegion::II)
    throw ValidationError("build_figure_network: figures 7 and 8 require p <= 2/3");
  const Side side = (figure == 5 || figure == 7) ? Side::A : Side::B;
  return build_mems_network(side, p);
}

double network_equals_kraus(Side side, double p, int trials) {
  if (trials < 1) throw ValidationError("network_equals_kraus: need at least one trial");
  const MemsMapPair pair = mems_mueller_pair(p);
  const KrausSet& ks = (side == Side::A) ? pair.krausA : pair.krausB;
  const NetworkSpec spec = build_mems_network(side, p);
  const CounterRng rng{0x706f6c61726d6170ULL};  // fixed stream for the check

  double max_err = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::array<double, 4> u{};
    for (int k = 0; k < 4; ++k) u[k] = 2.0 * rng.uniform(t, k) - 1.0;
    cplx a{u[0], u[1]}, b{u[2], u[3]};
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    if (norm < 1e-6) {
      a = 1.0;
      b = 0.0;
    } else {
      a /= norm;
      b /= norm;
    }

    const NetworkResult net = run_network(spec, {a, b});

    CMat2 rho0, kraus_out;
    rho0(0, 0) = a * std::conj(a);
    rho0(0, 1) = a * std::conj(b);
    rho0(1, 0) = b * std::conj(a);
    rho0(1, 1) = b * std::conj(b);
    for (const auto& [weight, tk] : ks.terms)
      kraus_out = kraus_out + weight * (tk.t * rho0 * tk.t.adjoint());

    max_err = std::max(max_err, max_abs_diff(net.rho, kraus_out));
  }
  return max_err;
}

}  // namespace polarmap

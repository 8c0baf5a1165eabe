#ifndef POLARMAP_NETWORK_HPP
#define POLARMAP_NETWORK_HPP

#include <map>
#include <vector>

#include "polarmap/mems.hpp"

namespace polarmap {

enum class Pol { H, V };

// Single-photon pure state over (polarization, spatial mode) labels.
struct ModeState {
  std::map<std::pair<int, Pol>, cplx> amp;  // keyed by (mode, pol)

  cplx get(Pol pol, int mode) const;
  void add(Pol pol, int mode, const cplx& value);
  void set(Pol pol, int mode, const cplx& value);

  double norm2() const;

  // (H, V) amplitudes at one spatial mode.
  std::array<cplx, 2> polarization_at(int mode) const;
};

// Norm-preserving optical primitives. A PBS routes V between two spatial
// modes, wave plates act on polarization at one mode, the variable beam
// splitters couple one polarization across two modes, and arm_phase exists
// only for balance-sensitivity experiments (the canonical networks have
// equal arm lengths, i.e. no phase elements).
struct Element {
  enum class Kind { pbs, hwp, rotator, hvbs, vvbs, mirror, arm_phase };

  Kind kind = Kind::pbs;
  double theta = 0.0;
  int n = 0;
  int m = 0;

  static Element pbs(int n, int m) { return {Kind::pbs, 0.0, n, m}; }
  static Element hwp(double theta, int mode) { return {Kind::hwp, theta, mode, mode}; }
  static Element rotator(double theta, int mode) { return {Kind::rotator, theta, mode, mode}; }
  static Element hvbs(double theta, int n, int m) { return {Kind::hvbs, theta, n, m}; }
  static Element vvbs(double theta, int n, int m) { return {Kind::vvbs, theta, n, m}; }
  static Element mirror(int n, int m) { return {Kind::mirror, 0.0, n, m}; }
  static Element arm_phase(double phi, int mode) { return {Kind::arm_phase, phi, mode, mode}; }
};

ModeState apply_element(const Element& e, const ModeState& s);

// PBS + HWP realizations of the variable beam splitters; they agree with
// the primitives on the defining input port.
std::vector<Element> hvbs_composite(double theta, int n, int m);
std::vector<Element> vvbs_composite(double theta, int n, int m);

struct NetworkSpec {
  std::vector<int> modes;      // declared spatial modes
  int input_mode = 1;          // where the photon enters
  std::vector<Element> elements;
  std::vector<int> detector_modes;  // one bin; the detector resolves none of them
};

struct Branch {
  int mode = 0;
  cplx h{};
  cplx v{};
};

struct NetworkResult {
  std::vector<Branch> branches;  // per detector mode, ascending mode order
  CMat2 rho;                     // incoherent sum of the branch projectors
  double trace = 0.0;
};

// Throws ValidationError if an element references an undeclared mode.
NetworkResult run_network(const NetworkSpec& spec, const JonesVector& psi0);

// Networks of Figs. 5-8; region picked from p exactly as in mems_params.
NetworkSpec build_mems_network(Side side, double p);

// figure in {5, 6, 7, 8}; rejects p outside the figure's region.
NetworkSpec build_figure_network(int figure, double p);

// Max entrywise difference between the network output and the Kraus sum of
// the matching MEMS map, over deterministic random pure inputs.
double network_equals_kraus(Side side, double p, int trials);

}  // namespace polarmap

#endif

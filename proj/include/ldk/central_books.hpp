#pragma once

#include <set>
#include <string>
#include <vector>

#include "ldk/linalg.hpp"
#include "ldk/root_datum.hpp"
#include "ldk/unipotent_lab.hpp"
#include "ldk/weight_mult.hpp"

/*
  Numerical bookkeeping for the sheaf-theoretic statements: standard /
  costandard multiplicity tables of central objects, support sets, the
  two-step filtration quotient, the consolidated hypothesis report, and
  the quasi-minuscule fixed-point verification.
*/

namespace ldk {

// table mu |-> multiplicity of the mu-standard (equivalently costandard)
// object; equals the weight multiplicity dim V_mu
MultTable delta_multiplicities(const RootDatum& d, const IVec& lambda_high);

// dominant orbit labels of the support: W(lambda_high) intersected with
// the dominant cone
std::set<IVec> support_orbits(const RootDatum& d, const IVec& lambda_high);

struct TwoStepCheck {
  IVec varpi;
  Int r = 0;           // level of varpi
  MultTable top_layer; // exact level r
  MultTable next_layer;// exact level r - 2
  bool ok = false;
};

// layers of the level filtration on the induced module of highest
// weight varpi = fundamental_like(alpha): both top layers must be a
// single weight line (varpi, then varpi - alpha^vee)
TwoStepCheck two_step_check(const RootDatum& d, std::size_t alpha_index);

struct ComponentVerdict {
  CartanType type;
  RootDatum::PrimeTableEntry table;
};

struct PrimeReport {
  std::size_t rank = 0;
  std::size_t num_components = 0;
  Int ell = 0;
  std::vector<ComponentVerdict> components;
  IVec torsion_roots;
  IVec torsion_coroots;
  bool weight_quotient_free = false; // X*/ZR free
  bool center_smooth = false;
  bool centralizer_smooth = false;
  std::string smoothness_reason;
  bool hypothesis_lattice = false; // X*/ZR free and X_*/ZR^vee ell-torsion-free
  bool hypothesis_very_good = false;
  bool hypothesis_bounds = false;  // bound_ok for every component
  bool theorem_main_ok = false;
  std::vector<std::string> notes;
};

PrimeReport theorem_report(const RootDatum& d, Int ell);

struct QminVerification {
  char family = 'B';
  int n = 0;
  Int ell = 0;
  std::string module_name;
  Int dim_Vu = 0;
  Int dim_V0 = 0;
  bool ok = false;
};

// dim V^u against the zero-weight space dimension for the
// quasi-minuscule tilting module of the family; refuses (InputError)
// when the characteristic conditions are violated
QminVerification qmin_verification(char family, int n, Int ell);

} // namespace ldk

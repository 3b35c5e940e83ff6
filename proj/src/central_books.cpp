#include "ldk/central_books.hpp"

#include <algorithm>

namespace ldk {

MultTable delta_multiplicities(const RootDatum& d, const IVec& lambda_high) {
  return weyl_character(d, lambda_high);
}

std::set<IVec> support_orbits(const RootDatum& d, const IVec& lambda_high) {
  if (!d.is_dominant(lambda_high)) throw InputError("support_orbits: weight not dominant");
  std::set<IVec> out;
  for (const IVec& mu : weight_set(d, lambda_high))
    if (d.is_dominant(mu)) out.insert(mu);
  return out;
}

TwoStepCheck two_step_check(const RootDatum& d, std::size_t alpha_index) {
  TwoStepCheck res;
  res.varpi = fundamental_like(d, alpha_index);
  res.r = level(d, res.varpi);
  const MultTable tbl = weyl_character(d, res.varpi);
  auto layers = filtration_layers(d, tbl);
  if (layers.count(res.r)) res.top_layer = layers.at(res.r);
  if (layers.count(res.r - 2)) res.next_layer = layers.at(res.r - 2);

  MultTable expect_top, expect_next;
  expect_top.entries[res.varpi] = 1;
  expect_next.entries[vec_sub(res.varpi, d.simple_coroot(alpha_index))] = 1;
  res.ok = res.top_layer == expect_top && res.next_layer == expect_next;
  return res;
}

PrimeReport theorem_report(const RootDatum& d, Int ell) {
  if (!is_prime(ell)) throw InputError("theorem_report: ell must be prime");
  PrimeReport rep;
  rep.rank = d.rank();
  rep.num_components = d.components().size();
  rep.ell = ell;
  bool all_bounds = true;
  bool all_very_good = true;
  bool has_type_a = false;
  for (const auto& t : d.components()) {
    ComponentVerdict cv{t, RootDatum::prime_tables(t, ell)};
    all_bounds = all_bounds && cv.table.bound_ok;
    all_very_good = all_very_good && cv.table.very_good;
    has_type_a = has_type_a || t.family == 'A';
    rep.components.push_back(std::move(cv));
  }
  rep.torsion_roots = d.torsion_invariants(LatticeSide::roots);
  rep.torsion_coroots = d.torsion_invariants(LatticeSide::coroots);
  rep.weight_quotient_free = d.weight_quotient_free();

  const SmoothnessVerdict sv = smoothness_verdict(d, ell);
  rep.center_smooth = sv.center_smooth;
  rep.centralizer_smooth = sv.centralizer_smooth;
  rep.smoothness_reason = sv.reason;

  rep.hypothesis_lattice =
      rep.weight_quotient_free && !d.has_ell_torsion(LatticeSide::coroots, ell);
  rep.hypothesis_very_good = all_very_good;
  rep.hypothesis_bounds = all_bounds;
  rep.theorem_main_ok = (rep.hypothesis_lattice || rep.hypothesis_very_good) && rep.hypothesis_bounds;

  if (rep.hypothesis_lattice)
    rep.notes.push_back(
        "lattice hypothesis holds: the dual group has simply-connected derived subgroup and a "
        "smooth centralizer of the regular unipotent (dimension = rank)");
  else if (rep.hypothesis_very_good)
    rep.notes.push_back("ell is very good for every component");
  if (rep.hypothesis_bounds)
    rep.notes.push_back(
        "ell clears every component bound: tilting objects are generated by minuscule and "
        "quasi-minuscule ones, and the central multiplicity identities apply");
  if (rep.theorem_main_ok)
    rep.notes.push_back(
        "all hypotheses hold: the regular quotient is equivalent to representations of the "
        "regular unipotent centralizer");
  if (has_type_a)
    rep.notes.push_back(
        "type A component: no quasi-minuscule condition is defined; qmin_ok reported true by "
        "convention");
  return rep;
}

QminVerification qmin_verification(char family, int n, Int ell) {
  if (!is_prime(ell)) throw InputError("qmin: ell must be prime");
  if (ell == 2) throw InputError("qmin: ell = 2 is outside the verified range");
  QminVerification v;
  v.family = family;
  v.n = n;
  v.ell = ell;
  switch (family) {
    case 'B': {
      if (n < 2) throw InputError("qmin: family B needs n >= 2");
      v.module_name = "natural";
      MatrixGroupModel g = make_group_model("SO(" + std::to_string(2 * n + 1) + ")", ell);
      const IMat u = regular_unipotent(g);
      v.dim_Vu = fixed_dim(module_action(g, u, ModuleKind::natural), ell);
      break;
    }
    case 'C': {
      if (n < 3) throw InputError("qmin: family C needs n >= 3");
      if (n % ell == 0)
        throw InputError("qmin: condition ell does not divide n is violated for C" +
                         std::to_string(n) + ", ell = " + std::to_string(ell));
      v.module_name = "wedge2_kernel";
      MatrixGroupModel g = make_group_model("Sp(" + std::to_string(2 * n) + ")", ell);
      const IMat u = regular_unipotent(g);
      v.dim_Vu = fixed_dim(module_action(g, u, ModuleKind::wedge2_kernel), ell);
      break;
    }
    case 'D': {
      if (n < 4) throw InputError("qmin: family D needs n >= 4");
      v.module_name = "adjoint";
      MatrixGroupModel g = make_group_model("SO(" + std::to_string(2 * n) + ")", ell);
      const IMat u = regular_unipotent(g);
      // the u-fixed space of the adjoint module is the centralizer algebra
      v.dim_Vu = lie_centralizer_dim(g, u, LieKind::so);
      break;
    }
    default:
      throw InputError("qmin: family must be one of B, C, D");
  }
  const RootDatum datum = RootDatum::named("adjoint:" + std::string(1, family) + std::to_string(n));
  v.dim_V0 = zero_weight_dim_qmin(datum, datum.components().at(0));
  v.ok = v.dim_Vu == v.dim_V0;
  return v;
}

} // namespace ldk

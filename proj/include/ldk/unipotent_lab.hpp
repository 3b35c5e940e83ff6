#pragma once

#include <string>
#include <vector>

#include "ldk/linalg.hpp"
#include "ldk/root_datum.hpp"

/*
  Explicit matrix models of SL(n), Sp(2n), SO(2n+1), SO(2n), PGL(n)
  over Q or F_ell, regular unipotent elements, Jordan types, and exact
  Lie-algebra centralizer dimensions.

  Forms: Sp(2n) uses the antidiagonal form with a sign split in the
  middle; SO(m) uses the all-ones antidiagonal, with the middle entry 2
  in odd dimension so that every root subgroup stays integral. The
  upper-triangular Borel then contains all the positive root subgroups,
  and the regular unipotent is the product of the simple ones.

  Characteristic 2 is rejected for Sp and SO models.
*/

namespace ldk {

enum class GroupFamily { SL, Sp, SOodd, SOeven, PGL };
enum class ModuleKind { natural, wedge2, wedge2_kernel, adjoint };
enum class LieKind { gl, sl, sp, so, pgl };

struct MatrixGroupModel {
  GroupFamily family;
  int n = 0;       // SL(n)/PGL(n): n;  Sp(2n): n;  SO(2n+1): n;  SO(2n): n
  Int ell = 0;     // 0 = characteristic zero
  std::size_t dim = 0; // natural module dimension
  IMat form;           // Gram matrix of the invariant form; empty for SL/PGL

  std::string label() const;
  Int group_rank() const; // rank of the root system of the model
};

// labels: SL(n), Sp(2n), SO(2n+1), SO(2n), PGL(n);  ell = 0 means Q
MatrixGroupModel make_group_model(const std::string& label, Int ell);

ModuleKind parse_module_kind(const std::string& name);
LieKind parse_lie_kind(const std::string& name);

struct JordanType {
  IVec partition; // weakly decreasing, parts >= 1
  std::size_t parts() const { return partition.size(); }
  bool operator==(const JordanType& o) const = default;
};

// product of the simple root subgroup elements x_alpha(1), taken in
// decreasing root order; checked unipotent and form-preserving
IMat regular_unipotent(const MatrixGroupModel& g);

bool preserves_form(const MatrixGroupModel& g, const IMat& u);

// matrix of u on the requested module, entries reduced mod ell when
// ell > 0 (integral in characteristic zero)
IMat module_action(const MatrixGroupModel& g, const IMat& u, ModuleKind module);

// partition from the rank sequence of (m - 1)^k over the given field
JordanType jordan_type(const IMat& m, Int ell);
Int fixed_dim(const IMat& m, Int ell);

// dim { X in g : u X u^{-1} = X } over the model's field
Int lie_centralizer_dim(const MatrixGroupModel& g, const IMat& u, LieKind lie);

struct SmoothnessVerdict {
  bool center_smooth = false;
  bool centralizer_smooth = false;
  std::string reason;
};

// smoothness of Z(G) and of the centralizer of a regular unipotent in
// the group with the given root datum over characteristic ell
SmoothnessVerdict smoothness_verdict(const RootDatum& d, Int ell);

} // namespace ldk

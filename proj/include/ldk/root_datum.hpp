#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ldk/linalg.hpp"

/*
  Exact integer model of a root datum (X*, R, X_*, R^vee).

  Both lattices are Z^rank in a fixed basis; the pairing <.,.> between
  X_* and X* is the dot product of coordinate vectors. Coweights (IVec
  of length rank) live in X_*, weights in X*. Data differing by a
  unimodular change of basis are distinct objects; no canonicalization.

  The finite Weyl group acts on X_* through FiniteWeylElt::action; the
  contragredient action on X* is derived from the reduced word.
*/

namespace ldk {

struct CartanType {
  char family = 'A'; // one of A B C D E F G
  int n = 0;         // Cartan rank
  std::vector<std::size_t> indices; // into the datum's simple roots, ascending

  std::string label() const { return std::string(1, family) + std::to_string(n); }
  bool operator==(const CartanType& o) const = default;
};

struct FiniteWeylElt {
  IMat action;           // matrix on X_* coordinates
  std::vector<int> word; // canonical reduced word, smallest-index descents

  std::size_t length() const { return word.size(); }
  bool operator==(const FiniteWeylElt& o) const { return action == o.action; }
};

enum class LatticeSide { roots, coroots };

class RootDatum {
public:
  // Validates every type invariant; throws InputError on violation.
  RootDatum(IMat simple_roots, IMat simple_coroots);

  static RootDatum named(const std::string& label);
  static RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

  std::size_t rank() const { return rank_; }
  std::size_t num_simples() const { return simple_roots_.size(); }
  const IMat& simple_roots() const { return simple_roots_; }
  const IMat& simple_coroots() const { return simple_coroots_; }
  const IVec& simple_root(std::size_t i) const { return simple_roots_[i]; }
  const IVec& simple_coroot(std::size_t i) const { return simple_coroots_[i]; }

  // <coroot_i, root_j>, the (i,j) entry of the standard Cartan matrix
  Int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  // the canonical pairing <lambda, beta> for lambda in X_*, beta in X*
  static Int pair(const IVec& coweight, const IVec& weight) { return dot(coweight, weight); }

  RootDatum dual() const;
  bool operator==(const RootDatum& o) const {
    return simple_roots_ == o.simple_roots_ && simple_coroots_ == o.simple_coroots_;
  }

  // content fingerprint (used for cache keys and cross-context checks)
  std::uint64_t content_hash() const { return hash_; }

  // ---- classification and torsion -------------------------------------

  const std::vector<CartanType>& components() const { return components_; }
  // invariant factors of X*/ZR (roots) or X_*/ZR^vee (coroots);
  // nontrivial entries in divisibility order, one 0 per free factor
  IVec torsion_invariants(LatticeSide side) const;
  bool has_ell_torsion(LatticeSide side, Int ell) const;
  bool weight_quotient_free() const; // X*/ZR free (no torsion at all)

  // relative length-squared of simple root i (1 on short roots of its
  // component; all roots of a simply-laced component count as short)
  Int root_length_marker(std::size_t i) const { return symmetrizer_[i]; }

  // ---- root system data ------------------------------------------------

  const IMat& positive_roots() const { return positive_roots_; }
  const IMat& positive_coroots() const { return positive_coroots_; } // parallel order
  const IVec& two_rho() const { return two_rho_; }               // in X*
  const IVec& two_rho_check() const { return two_rho_check_; }   // in X_*
  bool is_positive_root(const IVec& root) const;                 // sign by height

  // highest root of one irreducible component, with its coroot
  IVec highest_root(const CartanType& component) const;
  IVec highest_short_coroot(const CartanType& component) const;

  // ---- finite Weyl group ----------------------------------------------

  FiniteWeylElt weyl_identity() const;
  FiniteWeylElt weyl_simple(int i) const;
  FiniteWeylElt weyl_from_word(const std::vector<int>& word) const;
  FiniteWeylElt weyl_mul(const FiniteWeylElt& x, const FiniteWeylElt& y) const;
  FiniteWeylElt weyl_inverse(const FiniteWeylElt& x) const;
  // reflection along an arbitrary root (given with its coroot)
  FiniteWeylElt weyl_reflection(const IVec& root, const IVec& coroot) const;

  IVec weyl_act(const FiniteWeylElt& x, const IVec& coweight) const;
  IVec weyl_act_weight(const FiniteWeylElt& x, const IVec& weight) const;

  bool is_dominant(const IVec& coweight) const;
  // unique dominant conjugate together with a minimal-length x, x(lambda) dominant
  std::pair<IVec, FiniteWeylElt> dominant_rep(const IVec& coweight) const;
  FiniteWeylElt longest_element() const;
  std::vector<IVec> weyl_orbit(const IVec& coweight) const; // deterministic order

  // ---- prime diagnostics ------------------------------------------------

  struct PrimeTableEntry {
    Int bound = 0;
    bool bound_ok = false;
    bool qmin_ok = false;
    bool qmin_defined = true; // false exactly for type A (no table column)
    bool good = false;
    bool very_good = false;
  };
  static PrimeTableEntry prime_tables(const CartanType& t, Int ell);

  // all nonzero dominant coweights pairing in {0,+-1} with every root,
  // one canonical representative per central coset
  std::vector<IVec> minuscule_coweights() const;

private:
  void classify();
  void generate_roots();
  int descent_from_inverse_action(const IMat& inv_action) const;

  std::size_t rank_ = 0;
  IMat simple_roots_;
  IMat simple_coroots_;
  IMat cartan_;
  IVec symmetrizer_;
  std::vector<CartanType> components_;
  IMat positive_roots_;
  IMat positive_coroots_;
  IVec two_rho_;
  IVec two_rho_check_;
  std::uint64_t hash_ = 0;
};

std::string format_ivec(const IVec& v); // "[a, b, c]"

} // namespace ldk

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "ldk/linalg.hpp"
#include "ldk/root_datum.hpp"

/*
  The extended affine Weyl group W = W_f x X_* in the normal form
  t(lambda) x. Lengths use the Iwahori--Matsumoto pairing formula; the
  group splits as Omega x W^Cox with W^Cox = W_f x ZR^vee a Coxeter
  group on the finite simple reflections plus one affine reflection
  t(theta^vee) s_theta per irreducible component.

  Word letters: 0..num_simples-1 are finite reflections, and
  rank..rank+#components-1 are the affine reflections in component
  order (this indexing is part of the serialization contract).
*/

namespace ldk {

struct AffineWeylElt {
  IVec translation;
  FiniteWeylElt finite;

  bool operator==(const AffineWeylElt& o) const {
    return translation == o.translation && finite == o.finite;
  }
  bool operator<(const AffineWeylElt& o) const {
    if (translation != o.translation) return translation < o.translation;
    return finite.action < o.finite.action;
  }
};

struct OmegaDecomp {
  AffineWeylElt omega; // length 0
  AffineWeylElt cox;   // in W^Cox
};

class AffineWeyl {
public:
  explicit AffineWeyl(const RootDatum& datum);

  const RootDatum& datum() const { return *d_; }

  AffineWeylElt identity() const;
  AffineWeylElt translation_elt(const IVec& coweight) const;
  AffineWeylElt from_finite(const FiniteWeylElt& x) const;
  AffineWeylElt multiply(const AffineWeylElt& v, const AffineWeylElt& w) const;
  AffineWeylElt inverse(const AffineWeylElt& w) const;

  // Iwahori--Matsumoto length
  Int length(const AffineWeylElt& w) const;

  // the Coxeter generating set S of W^Cox, each of length 1
  const std::vector<AffineWeylElt>& simple_reflections() const { return gens_; }
  // generator by word letter (finite index or rank+component)
  const AffineWeylElt& generator(int letter) const;
  std::vector<int> generator_letters() const;

  bool in_coxeter_subgroup(const AffineWeylElt& w) const;
  OmegaDecomp omega_decompose(const AffineWeylElt& w) const;

  AffineWeylElt from_word(const std::vector<int>& word) const;
  std::vector<int> reduced_word(const AffineWeylElt& w) const;

  bool bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const;

  AffineWeylElt min_coset_rep(const IVec& coweight) const;
  bool is_antispherical(const AffineWeylElt& w) const;
  // closure order on Iwahori--Whittaker orbit labels
  bool iw_closure_leq(const IVec& lambda, const IVec& mu) const;

  // both rank-1 identities: l(t(varpi)s) = l(t(varpi)) - 1 and
  // l(t(2 varpi - alpha^vee)) = l(t(2 varpi)) - 2
  bool rank_one_length_identities(std::size_t alpha_index, const IVec& varpi) const;

private:
  void check_element(const AffineWeylElt& w) const;
  AffineWeylElt omega_of_class(const IVec& translation) const;
  bool coxeter_bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const;

  const RootDatum* d_;
  Lattice coroot_lattice_;
  std::vector<AffineWeylElt> gens_;      // finite simples then affines
  std::vector<int> letters_;             // word letter of gens_[k]
  mutable std::mutex omega_mutex_;
  mutable std::map<IVec, AffineWeylElt> omega_cache_; // class label -> omega
};

} // namespace ldk

#include "ldk/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace ldk {

AffineWeyl::AffineWeyl(const RootDatum& datum)
    : d_(&datum), coroot_lattice_(datum.simple_coroots(), datum.rank()) {
  for (std::size_t i = 0; i < d_->num_simples(); ++i) {
    gens_.push_back(from_finite(d_->weyl_simple(static_cast<int>(i))));
    letters_.push_back(static_cast<int>(i));
  }
  for (std::size_t c = 0; c < d_->components().size(); ++c) {
    const IVec theta = d_->highest_root(d_->components()[c]);
    const IVec theta_check = d_->highest_short_coroot(d_->components()[c]);
    AffineWeylElt s0{theta_check, d_->weyl_reflection(theta, theta_check)};
    if (length(s0) != 1) throw LdkError("affine reflection does not have length 1");
    gens_.push_back(std::move(s0));
    letters_.push_back(static_cast<int>(d_->rank() + c));
  }
}

void AffineWeyl::check_element(const AffineWeylElt& w) const {
  if (w.translation.size() != d_->rank() || w.finite.action.size() != d_->rank())
    throw InputError("affine Weyl element does not match the datum");
}

AffineWeylElt AffineWeyl::identity() const {
  return AffineWeylElt{IVec(d_->rank(), 0), d_->weyl_identity()};
}

AffineWeylElt AffineWeyl::translation_elt(const IVec& coweight) const {
  if (coweight.size() != d_->rank()) throw InputError("translation: coweight size mismatch");
  return AffineWeylElt{coweight, d_->weyl_identity()};
}

AffineWeylElt AffineWeyl::from_finite(const FiniteWeylElt& x) const {
  return AffineWeylElt{IVec(d_->rank(), 0), x};
}

AffineWeylElt AffineWeyl::multiply(const AffineWeylElt& v, const AffineWeylElt& w) const {
  check_element(v);
  check_element(w);
  // t(l)x . t(m)y = t(l + x(m)) xy
  return AffineWeylElt{vec_add(v.translation, d_->weyl_act(v.finite, w.translation)),
                       d_->weyl_mul(v.finite, w.finite)};
}

AffineWeylElt AffineWeyl::inverse(const AffineWeylElt& w) const {
  check_element(w);
  const FiniteWeylElt xi = d_->weyl_inverse(w.finite);
  return AffineWeylElt{vec_scale(-1, d_->weyl_act(xi, w.translation)), xi};
}

Int AffineWeyl::length(const AffineWeylElt& w) const {
  check_element(w);
  // rewrite t(lambda) x = x . t(x^{-1} lambda) and apply the pairing formula
  IVec lam = w.translation;
  for (int i : w.finite.word) { // x^{-1} = reversed word applied left-to-right
    const Int p = dot(lam, d_->simple_root(i));
    lam = vec_sub(lam, vec_scale(p, d_->simple_coroot(i)));
  }
  Int total = 0;
  const IMat& pos = d_->positive_roots();
  for (const IVec& alpha : pos) {
    const IVec xalpha = d_->weyl_act_weight(w.finite, alpha);
    const Int p = dot(lam, alpha);
    total += d_->is_positive_root(xalpha) ? std::abs(p) : std::abs(p + 1);
  }
  return total;
}

const AffineWeylElt& AffineWeyl::generator(int letter) const {
  for (std::size_t k = 0; k < letters_.size(); ++k)
    if (letters_[k] == letter) return gens_[k];
  throw InputError("unknown reflection letter " + std::to_string(letter));
}

std::vector<int> AffineWeyl::generator_letters() const { return letters_; }

bool AffineWeyl::in_coxeter_subgroup(const AffineWeylElt& w) const {
  check_element(w);
  return coroot_lattice_.contains(w.translation);
}

AffineWeylElt AffineWeyl::omega_of_class(const IVec& translation) const {
  const IVec label = coroot_lattice_.class_label(translation);
  {
    std::lock_guard<std::mutex> lock(omega_mutex_);
    auto it = omega_cache_.find(label);
    if (it != omega_cache_.end()) return it->second;
  }
  // smallest dominant representative of the class (level minimal)
  const IVec seed = coroot_lattice_.reduce(translation);
  IVec best = d_->dominant_rep(seed).first;
  std::set<IVec> seen{best};
  std::queue<IVec> work;
  work.push(best);
  Int best_level = dot(best, d_->two_rho());
  while (!work.empty()) {
    IVec mu = work.front();
    work.pop();
    for (std::size_t i = 0; i < d_->num_simples(); ++i) {
      IVec nu = vec_sub(mu, d_->simple_coroot(i));
      const Int lvl = dot(nu, d_->two_rho());
      if (lvl < 0) continue;
      if (!seen.insert(nu).second) continue;
      work.push(nu);
      if (d_->is_dominant(nu) && lvl < best_level) {
        best = nu;
        best_level = lvl;
      }
    }
  }
  // reduce t(best) from the right by finite simple reflections
  AffineWeylElt omega = translation_elt(best);
  Int len = length(omega);
  bool progress = true;
  while (len > 0 && progress) {
    progress = false;
    for (std::size_t i = 0; i < d_->num_simples(); ++i) {
      AffineWeylElt cand = multiply(omega, gens_[i]);
      const Int l = length(cand);
      if (l < len) {
        omega = std::move(cand);
        len = l;
        progress = true;
        break;
      }
    }
  }
  if (len != 0)
    throw LdkError("omega_decompose: class representative did not reduce to length 0");
  std::lock_guard<std::mutex> lock(omega_mutex_);
  return omega_cache_.emplace(label, omega).first->second;
}

OmegaDecomp AffineWeyl::omega_decompose(const AffineWeylElt& w) const {
  check_element(w);
  AffineWeylElt omega = omega_of_class(w.translation);
  AffineWeylElt cox = multiply(inverse(omega), w);
  if (!in_coxeter_subgroup(cox))
    throw LdkError("omega_decompose: complement is not in the Coxeter subgroup");
  if (length(cox) != length(w))
    throw LdkError("omega_decompose: length was not preserved");
  return OmegaDecomp{std::move(omega), std::move(cox)};
}

AffineWeylElt AffineWeyl::from_word(const std::vector<int>& word) const {
  AffineWeylElt w = identity();
  for (int letter : word) w = multiply(w, generator(letter));
  return w;
}

std::vector<int> AffineWeyl::reduced_word(const AffineWeylElt& w) const {
  if (!in_coxeter_subgroup(w))
    throw InputError("reduced_word: element is not in W^Cox (omega-decompose first)");
  std::vector<int> rev;
  AffineWeylElt u = w;
  Int len = length(u);
  while (len > 0) {
    bool found = false;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      AffineWeylElt cand = multiply(u, gens_[k]);
      const Int l = length(cand);
      if (l < len) {
        rev.push_back(letters_[k]);
        u = std::move(cand);
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw LdkError("reduced_word: no descent found");
  }
  if (!(u == identity())) throw LdkError("reduced_word: reduction missed the identity");
  return {rev.rbegin(), rev.rend()};
}

bool AffineWeyl::coxeter_bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const {
  const Int lv = length(v);
  const Int lw = length(w);
  if (lv > lw) return false;
  if (lw == 0) return v == identity();
  if (lv == lw) return v == w;
  // take the first right descent s of w and recurse on ws
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    AffineWeylElt ws = multiply(w, gens_[k]);
    if (length(ws) < lw) {
      AffineWeylElt vs = multiply(v, gens_[k]);
      if (length(vs) < lv) return coxeter_bruhat_leq(vs, ws);
      return coxeter_bruhat_leq(v, ws);
    }
  }
  throw LdkError("bruhat: element of positive length has no descent");
}

bool AffineWeyl::bruhat_leq(const AffineWeylElt& v, const AffineWeylElt& w) const {
  const OmegaDecomp dv = omega_decompose(v);
  const OmegaDecomp dw = omega_decompose(w);
  if (!(dv.omega == dw.omega)) return false; // incomparable across Omega-cosets
  return coxeter_bruhat_leq(dv.cox, dw.cox);
}

AffineWeylElt AffineWeyl::min_coset_rep(const IVec& coweight) const {
  AffineWeylElt w = translation_elt(coweight);
  Int len = length(w);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < d_->num_simples(); ++i) {
      AffineWeylElt cand = multiply(gens_[i], w);
      const Int l = length(cand);
      if (l < len) {
        w = std::move(cand);
        len = l;
        progress = true;
        break;
      }
    }
  }
  return w;
}

bool AffineWeyl::is_antispherical(const AffineWeylElt& w) const {
  const Int len = length(w);
  for (std::size_t i = 0; i < d_->num_simples(); ++i)
    if (length(multiply(gens_[i], w)) <= len) return false;
  return true;
}

bool AffineWeyl::iw_closure_leq(const IVec& lambda, const IVec& mu) const {
  return bruhat_leq(min_coset_rep(lambda), min_coset_rep(mu));
}

bool AffineWeyl::rank_one_length_identities(std::size_t alpha_index, const IVec& varpi) const {
  if (alpha_index >= d_->num_simples())
    throw InputError("rank_one_length_identities: bad simple root index");
  if (dot(varpi, d_->simple_root(alpha_index)) != 1)
    throw InputError("rank_one_length_identities: <varpi, alpha> must be 1");
  if (!d_->is_dominant(varpi))
    throw InputError("rank_one_length_identities: varpi must be dominant");
  const AffineWeylElt t1 = translation_elt(varpi);
  const AffineWeylElt s = gens_[alpha_index];
  const bool first = length(multiply(t1, s)) == length(t1) - 1;
  const IVec two_varpi = vec_scale(2, varpi);
  const AffineWeylElt t2 = translation_elt(two_varpi);
  const AffineWeylElt t2m =
      translation_elt(vec_sub(two_varpi, d_->simple_coroot(alpha_index)));
  const bool second = length(t2m) == length(t2) - 2;
  return first && second;
}

} // namespace ldk

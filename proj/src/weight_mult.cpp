#include "ldk/weight_mult.hpp"

#include <algorithm>
#include <queue>

namespace ldk {

bool dominance_leq(const RootDatum& d, const IVec& mu, const IVec& lambda) {
  if (mu.size() != d.rank() || lambda.size() != d.rank())
    throw InputError("dominance_leq: coweight size mismatch");
  auto sol = solve_integer(transpose(d.simple_coroots()), vec_sub(lambda, mu));
  if (!sol) return false;
  return std::all_of(sol->point.begin(), sol->point.end(), [](Int c) { return c >= 0; });
}

namespace {

// dominant members of W(lambda^+), by downward coroot subtraction
std::vector<IVec> dominant_weight_members(const RootDatum& d, const IVec& lambda_plus) {
  const Int top = dot(lambda_plus, d.two_rho());
  std::set<IVec> seen{lambda_plus};
  std::queue<IVec> work;
  work.push(lambda_plus);
  std::vector<IVec> dominants;
  while (!work.empty()) {
    IVec mu = work.front();
    work.pop();
    if (d.is_dominant(mu)) dominants.push_back(mu);
    for (std::size_t i = 0; i < d.num_simples(); ++i) {
      IVec nu = vec_sub(mu, d.simple_coroot(i));
      // every weight of the module has |level| bounded by the top level
      if (std::abs(dot(nu, d.two_rho())) > top) continue;
      if (seen.insert(nu).second) work.push(nu);
    }
  }
  std::sort(dominants.begin(), dominants.end());
  return dominants;
}

} // namespace

std::set<IVec> weight_set(const RootDatum& d, const IVec& lambda) {
  const IVec lambda_plus = d.dominant_rep(lambda).first;
  std::set<IVec> out;
  for (const IVec& mu : dominant_weight_members(d, lambda_plus))
    for (const IVec& nu : d.weyl_orbit(mu)) out.insert(nu);
  return out;
}

bool in_hull_and_coset(const RootDatum& d, const IVec& lambda, const IVec& mu) {
  // coset: lambda - mu in ZR^vee
  Lattice coroot_lattice(d.simple_coroots(), d.rank());
  if (!coroot_lattice.contains(vec_sub(lambda, mu))) return false;
  // hull: for dominant representatives, lambda+ - mu+ must be a
  // nonnegative *rational* combination of simple coroots
  const IVec lp = d.dominant_rep(lambda).first;
  const IVec mp = d.dominant_rep(mu).first;
  QQ qq;
  FMat<QQ> a = to_field(qq, transpose(d.simple_coroots()));
  FVec<QQ> b;
  for (Int v : vec_sub(lp, mp)) b.push_back(mpq_class(v));
  auto x = solve_linear(qq, a, b);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const mpq_class& c) { return c >= 0; });
}

namespace {

// W_f-invariant pairing on X_*: sum over positive roots of the products
// of the pairings
Int invariant_form(const RootDatum& d, const IVec& a, const IVec& b) {
  Int s = 0;
  for (const IVec& alpha : d.positive_roots()) s += dot(a, alpha) * dot(b, alpha);
  return s;
}

} // namespace

MultTable weyl_character(const RootDatum& d, const IVec& lambda_high) {
  if (!d.is_dominant(lambda_high)) throw InputError("weyl_character: highest weight not dominant");

  std::vector<IVec> dominants = dominant_weight_members(d, lambda_high);
  // Freudenthal runs from the top down; positive roots of the dual side
  // are the positive coroots of d
  std::sort(dominants.begin(), dominants.end(), [&](const IVec& a, const IVec& b) {
    const Int la = dot(a, d.two_rho());
    const Int lb = dot(b, d.two_rho());
    if (la != lb) return la > lb;
    return a < b;
  });

  std::map<IVec, Int> dominant_mult;
  const IVec& two_rho_dual = d.two_rho_check();
  for (const IVec& mu : dominants) {
    if (mu == lambda_high) {
      dominant_mult[mu] = 1;
      continue;
    }
    mpz_class acc = 0;
    for (const IVec& beta : d.positive_coroots()) {
      for (Int k = 1;; ++k) {
        const IVec nu = vec_add(mu, vec_scale(k, beta));
        const IVec nu_plus = d.dominant_rep(nu).first;
        auto it = dominant_mult.find(nu_plus);
        if (it == dominant_mult.end()) break;
        acc += mpz_class(it->second) * invariant_form(d, nu, beta);
      }
    }
    const Int den =
        invariant_form(d, vec_sub(lambda_high, mu), vec_add(vec_add(lambda_high, mu), two_rho_dual));
    if (den <= 0) throw LdkError("freudenthal: nonpositive denominator");
    mpz_class m = 2 * acc;
    if (m % den != 0) throw LdkError("freudenthal: non-integral multiplicity");
    dominant_mult[mu] = checked_int(m / den);
  }

  MultTable tbl;
  tbl.highest = lambda_high;
  for (const auto& [mu, m] : dominant_mult)
    for (const IVec& nu : d.weyl_orbit(mu)) tbl.entries[nu] = m;
  return tbl;
}

Int weyl_multiplicity(const RootDatum& d, const IVec& lambda_high, const IVec& mu) {
  return weyl_character(d, lambda_high).at(mu);
}

mpz_class weyl_dimension(const RootDatum& d, const IVec& lambda_high) {
  if (!d.is_dominant(lambda_high)) throw InputError("weyl_dimension: highest weight not dominant");
  // product over positive coroots of <lambda + rho, beta> / <rho, beta>,
  // written with 2rho to stay integral
  mpq_class prod = 1;
  const IVec& two_rho_dual = d.two_rho_check();
  for (const IVec& beta : d.positive_coroots()) {
    const Int num = invariant_form(d, vec_add(vec_scale(2, lambda_high), two_rho_dual), beta);
    const Int den = invariant_form(d, two_rho_dual, beta);
    if (den == 0) throw LdkError("weyl_dimension: degenerate form");
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw LdkError("weyl_dimension: non-integral value");
  return prod.get_num();
}

Int zero_weight_dim_qmin(const RootDatum& d, const CartanType& component) {
  Int count = 0;
  for (std::size_t i : component.indices)
    if (d.root_length_marker(i) == 1) ++count;
  return count;
}

Int level(const RootDatum& d, const IVec& coweight) { return dot(coweight, d.two_rho()); }

std::map<Int, MultTable> filtration_layers(const RootDatum& d, const MultTable& tbl) {
  std::map<Int, MultTable> layers;
  for (const auto& [mu, m] : tbl.entries) layers[level(d, mu)].entries[mu] = m;
  return layers;
}

IVec fundamental_like(const RootDatum& d, std::size_t alpha_index) {
  if (alpha_index >= d.num_simples()) throw InputError("fundamental_like: bad simple root index");
  IVec rhs(d.num_simples(), 0);
  rhs[alpha_index] = 1;
  auto sol = solve_integer(d.simple_roots(), rhs);
  if (!sol) {
    throw InputError("fundamental_like: no integral coweight pairs to delta_" +
                     std::to_string(alpha_index) + " (X*/ZR has torsion " +
                     format_ivec(d.torsion_invariants(LatticeSide::roots)) + ")");
  }
  Lattice central(sol->null_basis, d.rank());
  return central.reduce(sol->point);
}

MultTable wakimoto_grading(const RootDatum& d, const MultTable& tbl) {
  const FiniteWeylElt w0 = d.longest_element();
  MultTable out;
  out.highest = tbl.highest;
  for (const auto& [mu, m] : tbl.entries) out.entries[d.weyl_act(w0, mu)] = m;
  if (out.total() != tbl.total()) throw LdkError("wakimoto_grading: total changed");
  return out;
}

std::vector<IVec> dominant_coweights_up_to_level(const RootDatum& d, Int max_level) {
  if (d.num_simples() != d.rank())
    throw InputError("dominant_coweights_up_to_level: datum must be semisimple");
  QQ qq;
  // rational fundamental coweights: rows f_i with <f_i, alpha_j> = delta_ij
  std::vector<FVec<QQ>> fund;
  for (std::size_t i = 0; i < d.num_simples(); ++i) {
    FMat<QQ> a = to_field(qq, d.simple_roots());
    FVec<QQ> b(d.num_simples(), mpq_class(0));
    b[i] = 1;
    auto x = solve_linear(qq, a, b);
    if (!x) throw LdkError("dominant enumeration: fundamental system unsolvable");
    fund.push_back(*x);
  }
  std::vector<mpq_class> fund_level(fund.size());
  for (std::size_t i = 0; i < fund.size(); ++i) {
    mpq_class l = 0;
    for (std::size_t j = 0; j < d.rank(); ++j) l += fund[i][j] * d.two_rho()[j];
    fund_level[i] = l;
  }

  std::vector<IVec> out;
  IVec m(fund.size(), 0);
  auto emit = [&]() {
    std::vector<mpq_class> lam(d.rank(), mpq_class(0));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < d.rank(); ++j) lam[j] += fund[i][j] * m[i];
    IVec v(d.rank());
    for (std::size_t j = 0; j < d.rank(); ++j) {
      mpq_class c = lam[j];
      c.canonicalize();
      if (c.get_den() != 1) return; // not an integral coweight
      v[j] = checked_int(c.get_num());
    }
    out.push_back(v);
  };
  // depth-first over pairing vectors with bounded total level
  auto rec = [&](auto&& self, std::size_t i, const mpq_class& used) -> void {
    if (i == m.size()) {
      emit();
      return;
    }
    for (m[i] = 0;; ++m[i]) {
      const mpq_class lvl = used + fund_level[i] * m[i];
      if (lvl > max_level) break;
      self(self, i + 1, lvl);
    }
    m[i] = 0;
  };
  rec(rec, 0, mpq_class(0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace ldk

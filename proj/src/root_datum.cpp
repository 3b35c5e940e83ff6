#include "ldk/root_datum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace ldk {

namespace {

// determinant of a small integer matrix (Bareiss, exact)
mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[sel], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace

std::string format_ivec(const IVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

RootDatum::RootDatum(IMat simple_roots, IMat simple_coroots)
    : simple_roots_(std::move(simple_roots)), simple_coroots_(std::move(simple_coroots)) {
  if (simple_roots_.size() != simple_coroots_.size())
    throw InputError("root datum: need as many coroots as roots");
  const std::size_t n = simple_roots_.size();
  if (n == 0 && simple_coroots_.empty())
    throw InputError("root datum: empty datum (rank unknown); give at least one root");
  rank_ = simple_roots_[0].size();
  for (const auto& r : simple_roots_)
    if (r.size() != rank_) throw InputError("root datum: ragged simple_roots");
  for (const auto& c : simple_coroots_)
    if (c.size() != rank_) throw InputError("root datum: coroot dimension mismatch");
  if (n > rank_)
    throw InputError("root datum: more simple roots than the rank allows");

  cartan_.assign(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = dot(simple_coroots_[i], simple_roots_[j]);

  for (std::size_t i = 0; i < n; ++i)
    if (cartan_[i][i] != 2)
      throw InputError("root datum: <coroot_" + std::to_string(i) + ", root_" + std::to_string(i) +
                       "> = " + std::to_string(cartan_[i][i]) + ", expected 2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw InputError("root datum: positive off-diagonal Cartan entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InputError("root datum: Cartan matrix not symmetrizable (zero pattern)");
    }

  // components of the Cartan graph
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(i);
    comp[i] = ncomp;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && cartan_[a][b] != 0) {
          comp[b] = ncomp;
          q.push(b);
        }
    }
    ++ncomp;
  }

  // symmetrizer within each component: d_i * a_ij = d_j * a_ji, min d = 1
  symmetrizer_.assign(n, 0);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    std::map<std::size_t, mpq_class> d;
    std::queue<std::size_t> q;
    d[idx[0]] = 1;
    q.push(idx[0]);
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t b : idx) {
        if (d.count(b) || cartan_[a][b] == 0) continue;
        d[b] = d[a] * cartan_[a][b] / cartan_[b][a];
        q.push(b);
      }
    }
    mpq_class dmin = d[idx[0]];
    for (std::size_t i : idx) dmin = std::min(dmin, d[i]);
    for (std::size_t i : idx) {
      mpq_class r = d[i] / dmin;
      if (r.get_den() != 1) throw InputError("root datum: non-integral symmetrizer ratio");
      symmetrizer_[i] = checked_int(r.get_num());
    }
  }
  // symmetry of D*A must hold globally, not just along the spanning tree
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
        throw InputError("root datum: Cartan matrix not symmetrizable");

  // finite type <=> symmetrized matrix positive definite (Sylvester)
  std::vector<std::vector<mpz_class>> s(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = symmetrizer_[i] * cartan_[i][j];
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> lead(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = s[i][j];
    if (determinant(lead) <= 0)
      throw InputError("root datum: Cartan matrix is not of finite type");
  }

  QQ qq;
  if (mat_rank(qq, simple_roots_) != n)
    throw InputError("root datum: simple roots are linearly dependent");
  if (mat_rank(qq, simple_coroots_) != n)
    throw InputError("root datum: simple coroots are linearly dependent");

  classify();
  generate_roots();

  std::uint64_t h = 1469598103934665603ULL;
  const std::uint64_t r64 = rank_;
  h = fnv1a(h, &r64, sizeof r64);
  for (const IMat* m : {&simple_roots_, &simple_coroots_})
    for (const auto& row : *m)
      h = fnv1a(h, row.data(), row.size() * sizeof(Int));
  hash_ = h;
}

void RootDatum::classify() {
  const std::size_t n = num_simples();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(i);
    comp[i] = ncomp;
    while (!q.empty()) {
      std::size_t a = q.front();
      q.pop();
      for (std::size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && cartan_[a][b] != 0) {
          comp[b] = ncomp;
          q.push(b);
        }
    }
    ++ncomp;
  }

  components_.clear();
  for (int c = 0; c < ncomp; ++c) {
    CartanType t;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) t.indices.push_back(i);
    const std::size_t m = t.indices.size();
    t.n = static_cast<int>(m);

    auto bond = [&](std::size_t a, std::size_t b) { return cartan_[a][b] * cartan_[b][a]; };
    Int maxbond = 0;
    std::vector<int> degree(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b || cartan_[t.indices[a]][t.indices[b]] == 0) continue;
        ++degree[a];
        maxbond = std::max(maxbond, bond(t.indices[a], t.indices[b]));
      }
    std::size_t shorts = 0;
    for (std::size_t i : t.indices)
      if (symmetrizer_[i] == 1) ++shorts;

    if (m == 1) {
      t.family = 'A';
    } else if (maxbond == 3) {
      t.family = 'G';
    } else if (maxbond == 2) {
      if (m == 2) {
        // B2 and C2 are isomorphic; report the family admissible at rank 2
        t.family = 'B';
      } else {
        // locate the double bond; interior position means F4
        bool interior = false;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = a + 1; b < m; ++b) {
            if (cartan_[t.indices[a]][t.indices[b]] == 0) continue;
            if (bond(t.indices[a], t.indices[b]) == 2 && degree[a] == 2 && degree[b] == 2)
              interior = true;
          }
        if (interior) {
          t.family = 'F';
        } else if (shorts == 1) {
          t.family = 'B';
        } else if (shorts + 1 == m) {
          t.family = 'C';
        } else {
          throw LdkError("classify: unrecognized doubly-laced diagram");
        }
      }
    } else {
      // simply laced
      std::size_t branch = m;
      for (std::size_t a = 0; a < m; ++a)
        if (degree[a] == 3) branch = a;
      if (branch == m) {
        t.family = 'A';
      } else {
        // arm lengths from the branch node
        std::vector<std::size_t> arms;
        std::vector<char> seen(m, 0);
        seen[branch] = 1;
        for (std::size_t a = 0; a < m; ++a) {
          if (seen[a] || cartan_[t.indices[branch]][t.indices[a]] == 0) continue;
          std::size_t len = 0, cur = a, prev = branch;
          for (;;) {
            ++len;
            seen[cur] = 1;
            std::size_t next = m;
            for (std::size_t b = 0; b < m; ++b)
              if (b != prev && b != cur && cartan_[t.indices[cur]][t.indices[b]] != 0) next = b;
            if (next == m) break;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) throw LdkError("classify: bad branch in simply-laced diagram");
        if (arms[0] == 1 && arms[1] == 1) {
          t.family = 'D';
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) {
          t.family = 'E'; // E6
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) {
          t.family = 'E'; // E7
        } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) {
          t.family = 'E'; // E8
        } else {
          throw LdkError("classify: unrecognized simply-laced diagram");
        }
      }
    }
    components_.push_back(std::move(t));
  }
  std::sort(components_.begin(), components_.end(),
            [](const CartanType& a, const CartanType& b) { return a.indices[0] < b.indices[0]; });
}

void RootDatum::generate_roots() {
  const std::size_t n = num_simples();
  std::set<IVec> seen;
  std::vector<std::pair<IVec, IVec>> roots; // (root, coroot)
  std::vector<IVec> expans;
  std::queue<std::size_t> work;
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    if (seen.insert(simple_roots_[i]).second) {
      roots.emplace_back(simple_roots_[i], simple_coroots_[i]);
      expans.push_back(e);
      work.push(roots.size() - 1);
    }
  }
  while (!work.empty()) {
    const std::size_t k = work.front();
    work.pop();
    for (std::size_t i = 0; i < n; ++i) {
      const auto [root, coroot] = roots[k];
      const Int c1 = dot(simple_coroots_[i], root);
      const Int c2 = dot(coroot, simple_roots_[i]);
      IVec nr = vec_sub(root, vec_scale(c1, simple_roots_[i]));
      IVec nc = vec_sub(coroot, vec_scale(c2, simple_coroots_[i]));
      if (seen.insert(nr).second) {
        IVec ex = expans[k];
        ex[i] -= c1;
        roots.emplace_back(std::move(nr), std::move(nc));
        expans.push_back(std::move(ex));
        work.push(roots.size() - 1);
      }
    }
  }

  // keep positives (all expansion coefficients >= 0), sorted for determinism
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool pos = std::all_of(expans[k].begin(), expans[k].end(), [](Int c) { return c >= 0; });
    if (pos) order.push_back(k);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Int ha = std::accumulate(expans[a].begin(), expans[a].end(), Int(0));
    const Int hb = std::accumulate(expans[b].begin(), expans[b].end(), Int(0));
    if (ha != hb) return ha < hb;
    return expans[a] < expans[b];
  });
  positive_roots_.clear();
  positive_coroots_.clear();
  for (std::size_t k : order) {
    positive_roots_.push_back(roots[k].first);
    positive_coroots_.push_back(roots[k].second);
  }
  if (2 * positive_roots_.size() != roots.size())
    throw LdkError("root generation: positives do not account for half of the roots");

  two_rho_.assign(rank_, 0);
  two_rho_check_.assign(rank_, 0);
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    two_rho_ = vec_add(two_rho_, positive_roots_[k]);
    two_rho_check_ = vec_add(two_rho_check_, positive_coroots_[k]);
  }
}

RootDatum RootDatum::dual() const { return RootDatum(simple_coroots_, simple_roots_); }

IVec RootDatum::torsion_invariants(LatticeSide side) const {
  // columns of the matrix are the generators of the sublattice
  const IMat& gens = side == LatticeSide::roots ? simple_roots_ : simple_coroots_;
  return cokernel_invariants(transpose(gens), rank_);
}

bool RootDatum::has_ell_torsion(LatticeSide side, Int ell) const {
  for (Int d : torsion_invariants(side))
    if (d != 0 && d % ell == 0) return true;
  return false;
}

bool RootDatum::weight_quotient_free() const {
  for (Int d : torsion_invariants(LatticeSide::roots))
    if (d != 0) return false;
  return true;
}

bool RootDatum::is_positive_root(const IVec& root) const {
  const Int h = dot(two_rho_check_, root);
  if (h == 0) throw LdkError("is_positive_root: vector has height zero");
  return h > 0;
}

IVec RootDatum::highest_root(const CartanType& component) const {
  std::vector<char> in_comp(num_simples(), 0);
  for (std::size_t i : component.indices) in_comp[i] = 1;
  std::optional<IVec> found;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    const IVec& beta = positive_roots_[k];
    // support check: beta is in the component iff it pairs only with it
    bool dominant = true, in_component = false, outside = false;
    for (std::size_t i = 0; i < num_simples(); ++i) {
      const Int p = dot(simple_coroots_[i], beta);
      if (p != 0 && in_comp[i]) in_component = true;
      if (p != 0 && !in_comp[i]) outside = true;
      if (p < 0) dominant = false;
    }
    if (!dominant || !in_component || outside) continue;
    if (found) throw LdkError("highest_root: component has two dominant roots");
    found = beta;
  }
  if (!found) throw LdkError("highest_root: no dominant root in component");
  return *found;
}

IVec RootDatum::highest_short_coroot(const CartanType& component) const {
  const IVec theta = highest_root(component);
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (positive_roots_[k] == theta) return positive_coroots_[k];
  throw LdkError("highest_short_coroot: highest root not found in table");
}

// ------------------------------------------------------------- Weyl group

FiniteWeylElt RootDatum::weyl_identity() const {
  return FiniteWeylElt{identity_mat(rank_), {}};
}

FiniteWeylElt RootDatum::weyl_simple(int i) const {
  return weyl_from_word({i});
}

int RootDatum::descent_from_inverse_action(const IMat& inv_action) const {
  // right descent at i  <=>  x(alpha_i) < 0  <=>  <x^{-1}(2rho^vee), alpha_i> < 0
  const IVec v = mat_vec(inv_action, two_rho_check_);
  for (std::size_t i = 0; i < num_simples(); ++i)
    if (dot(v, simple_roots_[i]) < 0) return static_cast<int>(i);
  return -1;
}

FiniteWeylElt RootDatum::weyl_from_word(const std::vector<int>& word) const {
  // inverse action from the reversed word, then extract the canonical word
  IMat inv = identity_mat(rank_);
  auto apply_simple = [&](std::size_t i, IMat& m) {
    // m <- M_i * m  where  M_i = I - coroot_i * root_i^T
    IVec pairings(rank_, 0);
    for (std::size_t c = 0; c < rank_; ++c) {
      Int p = 0;
      for (std::size_t r = 0; r < rank_; ++r) p += simple_roots_[i][r] * m[r][c];
      pairings[c] = p;
    }
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) m[r][c] -= simple_coroots_[i][r] * pairings[c];
  };
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= num_simples())
      throw InputError("weyl_from_word: reflection index out of range");
    apply_simple(static_cast<std::size_t>(*it), inv);
  }

  std::vector<int> canonical;
  IMat k = inv;
  for (;;) {
    const int i = descent_from_inverse_action(k);
    if (i < 0) break;
    canonical.push_back(i);
    apply_simple(static_cast<std::size_t>(i), k);
  }
  if (k != identity_mat(rank_))
    throw LdkError("weyl_from_word: descent reduction did not reach the identity");

  IMat action = identity_mat(rank_);
  for (auto it = canonical.rbegin(); it != canonical.rend(); ++it)
    apply_simple(static_cast<std::size_t>(*it), action);
  return FiniteWeylElt{std::move(action), std::move(canonical)};
}

FiniteWeylElt RootDatum::weyl_mul(const FiniteWeylElt& x, const FiniteWeylElt& y) const {
  std::vector<int> w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return weyl_from_word(w);
}

FiniteWeylElt RootDatum::weyl_inverse(const FiniteWeylElt& x) const {
  std::vector<int> w(x.word.rbegin(), x.word.rend());
  return weyl_from_word(w);
}

FiniteWeylElt RootDatum::weyl_reflection(const IVec& root, const IVec& coroot) const {
  if (dot(coroot, root) != 2) throw LdkError("weyl_reflection: <coroot, root> != 2");
  IMat m = identity_mat(rank_);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t c = 0; c < rank_; ++c) m[r][c] -= coroot[r] * root[c];
  // reflections are involutions, so m is its own inverse
  std::vector<int> canonical;
  IMat k = m;
  for (;;) {
    const int i = descent_from_inverse_action(k);
    if (i < 0) break;
    canonical.push_back(i);
    IMat mi = identity_mat(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) mi[r][c] -= simple_coroot(i)[r] * simple_root(i)[c];
    k = mat_mul(mi, k);
  }
  if (k != identity_mat(rank_))
    throw LdkError("weyl_reflection: not an element of the Weyl group");
  return weyl_from_word(canonical);
}

IVec RootDatum::weyl_act(const FiniteWeylElt& x, const IVec& coweight) const {
  return mat_vec(x.action, coweight);
}

IVec RootDatum::weyl_act_weight(const FiniteWeylElt& x, const IVec& weight) const {
  IVec v = weight;
  for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(*it);
    const Int p = dot(simple_coroots_[i], v);
    v = vec_sub(v, vec_scale(p, simple_roots_[i]));
  }
  return v;
}

bool RootDatum::is_dominant(const IVec& coweight) const {
  for (std::size_t i = 0; i < num_simples(); ++i)
    if (dot(coweight, simple_roots_[i]) < 0) return false;
  return true;
}

std::pair<IVec, FiniteWeylElt> RootDatum::dominant_rep(const IVec& coweight) const {
  IVec mu = coweight;
  std::vector<int> applied;
  for (;;) {
    int i = -1;
    for (std::size_t j = 0; j < num_simples(); ++j)
      if (dot(mu, simple_roots_[j]) < 0) {
        i = static_cast<int>(j);
        break;
      }
    if (i < 0) break;
    const Int p = dot(mu, simple_roots_[i]);
    mu = vec_sub(mu, vec_scale(p, simple_coroots_[i]));
    applied.push_back(i);
  }
  std::vector<int> word(applied.rbegin(), applied.rend());
  return {mu, weyl_from_word(word)};
}

FiniteWeylElt RootDatum::longest_element() const {
  std::vector<int> word;
  IMat k = identity_mat(rank_); // inverse action of the element built so far
  for (;;) {
    const IVec v = mat_vec(k, two_rho_check_);
    int i = -1;
    for (std::size_t j = 0; j < num_simples(); ++j)
      if (dot(v, simple_roots_[j]) > 0) {
        i = static_cast<int>(j);
        break;
      }
    if (i < 0) break;
    word.push_back(i);
    // k <- M_i * k
    IMat mi = identity_mat(rank_);
    for (std::size_t r = 0; r < rank_; ++r)
      for (std::size_t c = 0; c < rank_; ++c) mi[r][c] -= simple_coroot(i)[r] * simple_root(i)[c];
    k = mat_mul(mi, k);
  }
  return weyl_from_word(word);
}

std::vector<IVec> RootDatum::weyl_orbit(const IVec& coweight) const {
  std::set<IVec> seen{coweight};
  std::queue<IVec> work;
  work.push(coweight);
  while (!work.empty()) {
    IVec mu = work.front();
    work.pop();
    for (std::size_t i = 0; i < num_simples(); ++i) {
      const Int p = dot(mu, simple_roots_[i]);
      IVec nu = vec_sub(mu, vec_scale(p, simple_coroots_[i]));
      if (seen.insert(nu).second) work.push(nu);
    }
  }
  return {seen.begin(), seen.end()};
}

// --------------------------------------------------------- prime tables

RootDatum::PrimeTableEntry RootDatum::prime_tables(const CartanType& t, Int ell) {
  if (!is_prime(ell)) throw InputError("prime_tables: " + std::to_string(ell) + " is not prime");
  PrimeTableEntry e;
  const int n = t.n;
  switch (t.family) {
    case 'A': e.bound = 1; break;
    case 'B': e.bound = n; break;
    case 'C': e.bound = 2; break;
    case 'D': e.bound = 2; break;
    case 'E': e.bound = n == 6 ? 3 : (n == 7 ? 19 : 31); break;
    case 'F': e.bound = 3; break;
    case 'G': e.bound = 3; break;
    default: throw LdkError("prime_tables: bad family");
  }
  e.bound_ok = ell > e.bound;
  switch (t.family) {
    case 'A':
      e.qmin_ok = true;      // no column in the conditions table for type A
      e.qmin_defined = false;
      break;
    case 'B': e.qmin_ok = ell != 2; break;
    case 'C': e.qmin_ok = n % ell != 0; break;
    case 'D': e.qmin_ok = ell != 2; break;
    case 'E':
      e.qmin_ok = n == 6 ? ell != 3 : (n == 7 ? ell != 2 : true);
      break;
    case 'F': e.qmin_ok = ell != 3; break;
    case 'G': e.qmin_ok = ell != 2; break;
    default: break;
  }
  switch (t.family) {
    case 'A': e.good = true; break;
    case 'B':
    case 'C':
    case 'D': e.good = ell != 2; break;
    case 'E': e.good = n == 8 ? (ell != 2 && ell != 3 && ell != 5) : (ell != 2 && ell != 3); break;
    case 'F':
    case 'G': e.good = ell != 2 && ell != 3; break;
    default: break;
  }
  e.very_good = e.good && (t.family != 'A' || (n + 1) % ell != 0);
  return e;
}

std::vector<IVec> RootDatum::minuscule_coweights() const {
  const std::size_t n = num_simples();
  // marks: coefficients of the highest root of each component
  std::vector<std::vector<std::size_t>> candidates_per_comp;
  for (const auto& comp : components_) {
    const IVec theta = highest_root(comp);
    auto sol = solve_integer(transpose(simple_roots_), theta);
    if (!sol) throw LdkError("minuscule: highest root outside the root lattice");
    std::vector<std::size_t> mark_one;
    for (std::size_t i : comp.indices)
      if (sol->point[i] == 1) mark_one.push_back(i);
    candidates_per_comp.push_back(std::move(mark_one));
  }

  // one mark-1 node or none per component, not all empty
  std::vector<IVec> result;
  std::vector<std::size_t> choice(components_.size(), 0);
  for (;;) {
    IVec pairings(n, 0);
    bool nonempty = false;
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (choice[c] > 0) {
        pairings[candidates_per_comp[c][choice[c] - 1]] = 1;
        nonempty = true;
      }
    }
    if (nonempty) {
      auto sol = solve_integer(simple_roots_, pairings);
      if (sol) {
        Lattice central(sol->null_basis, rank_);
        result.push_back(central.reduce(sol->point));
      }
    }
    // advance mixed-radix counter
    std::size_t c = 0;
    while (c < components_.size()) {
      if (++choice[c] <= candidates_per_comp[c].size()) break;
      choice[c] = 0;
      ++c;
    }
    if (c == components_.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ----------------------------------------------------------- named data

namespace {

// simple roots in the standard orthogonal models (scaled to be integral)
IMat model_simple_roots(char family, int n) {
  auto e = [](int dim, int i) {
    IVec v(dim, 0);
    v[i] = 1;
    return v;
  };
  IMat roots;
  switch (family) {
    case 'A': {
      for (int i = 0; i < n; ++i) {
        IVec v(n + 1, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      break;
    }
    case 'B': {
      for (int i = 0; i + 1 < n; ++i) {
        IVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(e(n, n - 1));
      break;
    }
    case 'C': {
      for (int i = 0; i + 1 < n; ++i) {
        IVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      roots.push_back(vec_scale(2, e(n, n - 1)));
      break;
    }
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) {
        IVec v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
      }
      IVec v(n, 0);
      v[n - 2] = 1;
      v[n - 1] = 1;
      roots.push_back(v);
      break;
    }
    case 'G': {
      roots.push_back({1, -1, 0});
      roots.push_back({-2, 1, 1});
      break;
    }
    case 'F': {
      // doubled Bourbaki model to stay in Z^4
      roots.push_back({0, 2, -2, 0});
      roots.push_back({0, 0, 2, -2});
      roots.push_back({0, 0, 0, 2});
      roots.push_back({1, -1, -1, -1});
      break;
    }
    case 'E': {
      // doubled Bourbaki E8 model, truncated for E6/E7
      roots.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      roots.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int i = 0; i + 2 < n; ++i) {
        IVec v(8, 0);
        v[i] = -2;
        v[i + 1] = 2;
        roots.push_back(v);
      }
      break;
    }
    default:
      throw InputError(std::string("unknown family '") + family + "'");
  }
  return roots;
}

IMat cartan_of(char family, int n) {
  const IMat roots = model_simple_roots(family, n);
  IMat a(roots.size(), IVec(roots.size(), 0));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Int num = 2 * dot(roots[i], roots[j]);
      const Int den = dot(roots[i], roots[i]);
      if (num % den != 0) throw LdkError("cartan_of: non-integral Cartan entry");
      a[i][j] = num / den;
    }
  return a;
}

void check_family_rank(char family, int n) {
  const bool ok = (family == 'A' && n >= 1) || (family == 'B' && n >= 2) ||
                  (family == 'C' && n >= 2) || (family == 'D' && n >= 2) ||
                  (family == 'E' && n >= 6 && n <= 8) || (family == 'F' && n == 4) ||
                  (family == 'G' && n == 2);
  if (!ok)
    throw InputError(std::string("unsupported Cartan type ") + family + std::to_string(n));
}

RootDatum build_adjoint(char family, int n) {
  check_family_rank(family, n);
  const IMat a = cartan_of(family, n);
  return RootDatum(identity_mat(a.size()), a);
}

RootDatum build_simply_connected(char family, int n) {
  check_family_rank(family, n);
  const IMat a = cartan_of(family, n);
  return RootDatum(transpose(a), identity_mat(a.size()));
}

std::pair<char, int> parse_type(const std::string& s) {
  if (s.empty()) throw InputError("empty Cartan type");
  const char family = s[0];
  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (...) {
    throw InputError("cannot parse Cartan type '" + s + "'");
  }
  return {family, n};
}

RootDatum named_single(const std::string& label) {
  auto arg_of = [&](const std::string& prefix, const std::string& suffix) -> std::optional<int> {
    if (label.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (label.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (label.compare(label.size() - suffix.size(), suffix.size(), suffix) != 0)
      return std::nullopt;
    const std::string inner =
        label.substr(prefix.size(), label.size() - prefix.size() - suffix.size());
    try {
      return std::stoi(inner);
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto k = arg_of("SL(", ")")) {
    if (*k < 2) throw InputError("SL(n) needs n >= 2");
    return build_simply_connected('A', *k - 1);
  }
  if (auto k = arg_of("PGL(", ")")) {
    if (*k < 2) throw InputError("PGL(n) needs n >= 2");
    return build_adjoint('A', *k - 1);
  }
  if (auto k = arg_of("Sp(", ")")) {
    if (*k < 4 || *k % 2 != 0) throw InputError("Sp(2n) needs an even argument >= 4");
    return build_simply_connected('C', *k / 2);
  }
  if (auto k = arg_of("Spin(", ")")) {
    if (*k < 5 || *k % 2 != 1) throw InputError("Spin(2n+1) needs an odd argument >= 5");
    return build_simply_connected('B', (*k - 1) / 2);
  }
  if (auto k = arg_of("SO(", ")-adjoint")) {
    if (*k < 5 || *k % 2 != 1) throw InputError("SO(2n+1)-adjoint needs an odd argument >= 5");
    return build_adjoint('B', (*k - 1) / 2);
  }
  if (label.rfind("adjoint:", 0) == 0) {
    auto [f, n] = parse_type(label.substr(8));
    return build_adjoint(f, n);
  }
  if (label.rfind("simply-connected:", 0) == 0) {
    auto [f, n] = parse_type(label.substr(17));
    return build_simply_connected(f, n);
  }
  throw InputError("unknown datum label '" + label + "'");
}

} // namespace

RootDatum RootDatum::direct_sum(const RootDatum& a, const RootDatum& b) {
  const std::size_t rank = a.rank() + b.rank();
  IMat roots, coroots;
  auto pad = [&](const IVec& v, std::size_t offset) {
    IVec w(rank, 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
  };
  for (const auto& r : a.simple_roots()) roots.push_back(pad(r, 0));
  for (const auto& r : b.simple_roots()) roots.push_back(pad(r, a.rank()));
  for (const auto& c : a.simple_coroots()) coroots.push_back(pad(c, 0));
  for (const auto& c : b.simple_coroots()) coroots.push_back(pad(c, a.rank()));
  return RootDatum(std::move(roots), std::move(coroots));
}

RootDatum RootDatum::named(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == 'x' && !cur.empty() && (cur.back() == ')' || std::isdigit(cur.back()))) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw InputError("empty datum label");
  RootDatum d = named_single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) d = direct_sum(d, named_single(parts[i]));
  return d;
}

} // namespace ldk

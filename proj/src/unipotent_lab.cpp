#include "ldk/unipotent_lab.hpp"

#include <algorithm>
#include <optional>

namespace ldk {

namespace {

template <class F>
FMat<F> fmat_mul(const F& f, const FMat<F>& a, const FMat<F>& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  FMat<F> r(n, FVec<F>(m, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (f.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j)
        r[i][j] = f.add(r[i][j], f.mul(a[i][l], b[l][j]));
    }
  return r;
}

template <class F>
FMat<F> fmat_identity(const F& f, std::size_t n) {
  FMat<F> m(n, FVec<F>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

template <class F>
FMat<F> fmat_inverse(const F& f, const FMat<F>& a) {
  const std::size_t n = a.size();
  FMat<F> aug(n, FVec<F>(2 * n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = f.one();
  }
  if (row_reduce(f, aug) != n) throw LdkError("fmat_inverse: singular matrix");
  FMat<F> inv(n, FVec<F>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

template <class F>
FVec<F> flatten(const FMat<F>& m) {
  FVec<F> v;
  v.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (const auto& x : row) v.push_back(x);
  return v;
}

} // namespace

std::string MatrixGroupModel::label() const {
  switch (family) {
    case GroupFamily::SL: return "SL(" + std::to_string(n) + ")";
    case GroupFamily::Sp: return "Sp(" + std::to_string(2 * n) + ")";
    case GroupFamily::SOodd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case GroupFamily::SOeven: return "SO(" + std::to_string(2 * n) + ")";
    case GroupFamily::PGL: return "PGL(" + std::to_string(n) + ")";
  }
  return "?";
}

Int MatrixGroupModel::group_rank() const {
  switch (family) {
    case GroupFamily::SL:
    case GroupFamily::PGL: return n - 1;
    default: return n;
  }
}

MatrixGroupModel make_group_model(const std::string& label, Int ell) {
  if (ell != 0 && !is_prime(ell))
    throw InputError("group model: characteristic must be 0 or a prime");
  auto arg_of = [&](const std::string& prefix) -> std::optional<int> {
    if (label.size() <= prefix.size() + 1) return std::nullopt;
    if (label.compare(0, prefix.size(), prefix) != 0 || label.back() != ')') return std::nullopt;
    try {
      return std::stoi(label.substr(prefix.size(), label.size() - prefix.size() - 1));
    } catch (...) {
      return std::nullopt;
    }
  };
  MatrixGroupModel g;
  g.ell = ell;
  if (auto k = arg_of("SL(")) {
    if (*k < 2) throw InputError("SL(n) needs n >= 2");
    g.family = GroupFamily::SL;
    g.n = *k;
    g.dim = *k;
    return g;
  }
  if (auto k = arg_of("PGL(")) {
    if (*k < 2) throw InputError("PGL(n) needs n >= 2");
    g.family = GroupFamily::PGL;
    g.n = *k;
    g.dim = *k;
    return g;
  }
  if (auto k = arg_of("Sp(")) {
    if (*k < 2 || *k % 2 != 0) throw InputError("Sp(2n) needs an even argument >= 2");
    g.family = GroupFamily::Sp;
    g.n = *k / 2;
    g.dim = *k;
    g.form.assign(g.dim, IVec(g.dim, 0));
    for (int i = 0; i < *k; ++i) g.form[i][*k - 1 - i] = i < g.n ? 1 : -1;
    return g;
  }
  if (auto k = arg_of("SO(")) {
    if (*k < 3) throw InputError("SO(m) needs m >= 3");
    if (ell == 2) throw InputError("SO models are not available in characteristic 2");
    g.dim = *k;
    g.form.assign(g.dim, IVec(g.dim, 0));
    for (int i = 0; i < *k; ++i) g.form[i][*k - 1 - i] += 1;
    if (*k % 2 == 1) {
      g.family = GroupFamily::SOodd;
      g.n = (*k - 1) / 2;
      g.form[g.n][g.n] = 2; // quadratic middle coordinate
    } else {
      g.family = GroupFamily::SOeven;
      g.n = *k / 2;
      if (g.n < 2) throw InputError("SO(2n) needs n >= 2");
    }
    return g;
  }
  throw InputError("unknown group label '" + label + "'");
}

ModuleKind parse_module_kind(const std::string& name) {
  if (name == "natural") return ModuleKind::natural;
  if (name == "wedge2") return ModuleKind::wedge2;
  if (name == "wedge2_kernel") return ModuleKind::wedge2_kernel;
  if (name == "adjoint") return ModuleKind::adjoint;
  throw InputError("unknown module '" + name + "'");
}

LieKind parse_lie_kind(const std::string& name) {
  if (name == "gl") return LieKind::gl;
  if (name == "sl") return LieKind::sl;
  if (name == "sp") return LieKind::sp;
  if (name == "so") return LieKind::so;
  if (name == "pgl") return LieKind::pgl;
  throw InputError("unknown Lie algebra '" + name + "'");
}

namespace {

IMat reduce_mod(const IMat& m, Int ell) {
  if (ell == 0) return m;
  IMat r = m;
  for (auto& row : r)
    for (auto& v : row) {
      v %= ell;
      if (v < 0) v += ell;
    }
  return r;
}

// x_alpha(1) for the simple roots of the model, upper triangular
std::vector<IMat> simple_root_elements(const MatrixGroupModel& g) {
  const std::size_t m = g.dim;
  std::vector<IMat> out;
  auto elt = [&]() { return identity_mat(m); };
  switch (g.family) {
    case GroupFamily::SL:
    case GroupFamily::PGL: {
      for (int i = 0; i + 1 < g.n; ++i) {
        IMat e = elt();
        e[i][i + 1] = 1;
        out.push_back(e);
      }
      break;
    }
    case GroupFamily::Sp: {
      const int n = g.n;
      for (int i = 0; i + 1 < n; ++i) {
        IMat e = elt();
        e[i][i + 1] = 1;
        e[2 * n - 2 - i][2 * n - 1 - i] = -1;
        out.push_back(e);
      }
      IMat e = elt();
      e[n - 1][n] = 1; // long root 2e_n
      out.push_back(e);
      break;
    }
    case GroupFamily::SOodd: {
      const int n = g.n;
      for (int i = 0; i + 1 < n; ++i) {
        IMat e = elt();
        e[i][i + 1] = 1;
        e[2 * n - 1 - i][2 * n - i] = -1;
        out.push_back(e);
      }
      IMat e = elt(); // short root e_n
      e[n - 1][n] = 2;
      e[n - 1][n + 1] = -1;
      e[n][n + 1] = -1;
      out.push_back(e);
      break;
    }
    case GroupFamily::SOeven: {
      const int n = g.n;
      for (int i = 0; i + 1 < n; ++i) {
        IMat e = elt();
        e[i][i + 1] = 1;
        e[2 * n - 2 - i][2 * n - 1 - i] = -1;
        out.push_back(e);
      }
      IMat e = elt(); // root e_{n-1} + e_n
      e[n - 2][n] = 1;
      e[n - 1][n + 1] = -1;
      out.push_back(e);
      break;
    }
  }
  return out;
}

template <class F>
bool is_unipotent_over(const F& f, const IMat& m) {
  const std::size_t n = m.size();
  FMat<F> nm = to_field(f, m);
  for (std::size_t i = 0; i < n; ++i) nm[i][i] = f.sub(nm[i][i], f.one());
  FMat<F> p = nm;
  for (std::size_t k = 1; k < n; ++k) p = fmat_mul(f, p, nm);
  for (const auto& row : p)
    for (const auto& v : row)
      if (!f.is_zero(v)) return false;
  return true;
}

} // namespace

bool preserves_form(const MatrixGroupModel& g, const IMat& u) {
  if (g.form.empty()) return true;
  const IMat lhs = mat_mul(mat_mul(transpose(u), g.form), u);
  if (g.ell == 0) return lhs == g.form;
  return reduce_mod(lhs, g.ell) == reduce_mod(g.form, g.ell);
}

IMat regular_unipotent(const MatrixGroupModel& g) {
  if (g.ell == 2 && (g.family == GroupFamily::Sp || g.family == GroupFamily::SOodd ||
                     g.family == GroupFamily::SOeven))
    throw InputError("regular_unipotent: characteristic 2 is excluded for Sp/SO models");
  const std::vector<IMat> gens = simple_root_elements(g);
  IMat u = identity_mat(g.dim);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) u = mat_mul(u, *it);
  u = reduce_mod(u, g.ell);
  const bool unip =
      g.ell == 0 ? is_unipotent_over(QQ{}, u) : is_unipotent_over(GF(g.ell), u);
  if (!unip) throw LdkError("regular_unipotent: constructed element is not unipotent");
  if (!preserves_form(g, u))
    throw LdkError("regular_unipotent: constructed element does not preserve the form");
  return u;
}

namespace {

// ----- Lie algebra bases (flattened matrices over the field) ------------

template <class F>
std::vector<FVec<F>> lie_basis(const F& f, const MatrixGroupModel& g, LieKind lie,
                               std::vector<FVec<F>>* pgl_ambient = nullptr) {
  const std::size_t n = g.dim;
  auto e_mat = [&](std::size_t i, std::size_t j) {
    FMat<F> m(n, FVec<F>(n, f.zero()));
    m[i][j] = f.one();
    return flatten(m);
  };
  std::vector<FVec<F>> basis;
  switch (lie) {
    case LieKind::gl: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.push_back(e_mat(i, j));
      break;
    }
    case LieKind::sl: {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) basis.push_back(e_mat(i, j));
      for (std::size_t i = 0; i + 1 < n; ++i) {
        FVec<F> h = e_mat(i, i);
        const FVec<F> next = e_mat(i + 1, i + 1);
        for (std::size_t k = 0; k < h.size(); ++k) h[k] = f.sub(h[k], next[k]);
        basis.push_back(std::move(h));
      }
      break;
    }
    case LieKind::sp:
    case LieKind::so: {
      if (g.form.empty()) throw InputError("lie_basis: model carries no bilinear form");
      // nullspace of X |-> X^T F + F X, unknowns X[k][l] flattened
      FMat<F> sys(n * n, FVec<F>(n * n, f.zero()));
      const FMat<F> form = to_field(f, g.form);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          auto& row = sys[a * n + b];
          for (std::size_t k = 0; k < n; ++k) {
            row[k * n + a] = f.add(row[k * n + a], form[k][b]); // X^T F
            row[b * n + k] = f.add(row[b * n + k], form[a][k]); // F X  (entry X[k][b] times F[a][k])
          }
        }
      basis = null_space(f, sys);
      break;
    }
    case LieKind::pgl: {
      // complement of the scalar line in gl, greedy deterministic extension
      std::vector<FVec<F>> ambient;
      FVec<F> id(n * n, f.zero());
      for (std::size_t i = 0; i < n; ++i) id[i * n + i] = f.one();
      ambient.push_back(id);
      FMat<F> echelon{id};
      for (std::size_t i = 0; i < n && ambient.size() < n * n; ++i)
        for (std::size_t j = 0; j < n && ambient.size() < n * n; ++j) {
          FVec<F> cand = e_mat(i, j);
          FMat<F> trial = echelon;
          trial.push_back(cand);
          if (row_reduce(f, trial) == ambient.size() + 1) {
            echelon = std::move(trial);
            row_reduce(f, echelon);
            ambient.push_back(cand);
            basis.push_back(std::move(cand));
          }
        }
      if (ambient.size() != n * n) throw LdkError("lie_basis: pgl complement incomplete");
      if (pgl_ambient) *pgl_ambient = ambient;
      break;
    }
  }
  return basis;
}

bool lie_compatible(const MatrixGroupModel& g, LieKind lie) {
  switch (lie) {
    case LieKind::gl: return g.family == GroupFamily::SL || g.family == GroupFamily::PGL;
    case LieKind::sl: return g.family == GroupFamily::SL;
    case LieKind::pgl: return g.family == GroupFamily::PGL;
    case LieKind::sp: return g.family == GroupFamily::Sp;
    case LieKind::so: return g.family == GroupFamily::SOodd || g.family == GroupFamily::SOeven;
  }
  return false;
}

template <class F>
Int centralizer_dim_over(const F& f, const MatrixGroupModel& g, const IMat& u, LieKind lie) {
  const std::size_t n = g.dim;
  const FMat<F> uf = to_field(f, u);
  const FMat<F> uinv = fmat_inverse(f, uf);

  auto ad = [&](const FVec<F>& flat) {
    FMat<F> x(n, FVec<F>(n, f.zero()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i][j] = flat[i * n + j];
    FMat<F> y = fmat_mul(f, fmat_mul(f, uf, x), uinv);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i][j] = f.sub(y[i][j], x[i][j]);
    return flatten(y);
  };

  if (lie == LieKind::pgl) {
    // work in gl/(scalars): coordinates in {I} + representatives, drop I
    std::vector<FVec<F>> ambient;
    std::vector<FVec<F>> reps = lie_basis(f, g, LieKind::pgl, &ambient);
    SpanBasis<F> full(f, ambient);
    const std::size_t k = reps.size();
    FMat<F> t(k, FVec<F>(k, f.zero()));
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = full.coords(ad(reps[j]));
      if (!coords) throw LdkError("centralizer: image left gl");
      for (std::size_t i = 0; i < k; ++i) t[i][j] = (*coords)[i + 1]; // skip the I coordinate
    }
    return static_cast<Int>(k - row_reduce(f, t));
  }

  std::vector<FVec<F>> basis = lie_basis(f, g, lie);
  SpanBasis<F> span(f, basis);
  const std::size_t k = basis.size();
  FMat<F> t(k, FVec<F>(k, f.zero()));
  for (std::size_t j = 0; j < k; ++j) {
    auto coords = span.coords(ad(basis[j]));
    if (!coords) throw LdkError("centralizer: Ad(u) does not preserve the Lie algebra");
    for (std::size_t i = 0; i < k; ++i) t[i][j] = (*coords)[i];
  }
  return static_cast<Int>(k - row_reduce(f, t));
}

template <class F>
std::size_t rank_over(const F& f, const IMat& m) {
  return mat_rank(f, m);
}

template <class F>
JordanType jordan_type_over(const F& f, const IMat& m) {
  const std::size_t n = m.size();
  IMat nm = m;
  for (std::size_t i = 0; i < n; ++i) nm[i][i] -= 1;

  // rank sequence of powers of (m - 1)
  std::vector<std::size_t> ranks{n}; // rank of the 0th power
  FMat<F> p = fmat_identity(f, n);
  const FMat<F> nf = to_field(f, nm);
  for (std::size_t k = 1; k <= n; ++k) {
    p = fmat_mul(f, p, nf);
    FMat<F> copy = p;
    ranks.push_back(row_reduce(f, copy));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw InputError("jordan_type: matrix is not unipotent");

  JordanType jt;
  // number of parts >= k is ranks[k-1] - ranks[k]
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const std::size_t geq_k = ranks[k - 1] - ranks[k];
    const std::size_t geq_k1 = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = geq_k1; c < geq_k; ++c) jt.partition.push_back(static_cast<Int>(k));
  }
  std::sort(jt.partition.rbegin(), jt.partition.rend());
  Int sum = 0;
  for (Int p_ : jt.partition) sum += p_;
  if (sum != static_cast<Int>(n)) throw LdkError("jordan_type: partition does not sum to dim");
  return jt;
}

} // namespace

JordanType jordan_type(const IMat& m, Int ell) {
  if (ell == 0) return jordan_type_over(QQ{}, m);
  return jordan_type_over(GF(ell), reduce_mod(m, ell));
}

Int fixed_dim(const IMat& m, Int ell) {
  const std::size_t n = m.size();
  IMat nm = m;
  for (std::size_t i = 0; i < n; ++i) nm[i][i] -= 1;
  const std::size_t r = ell == 0 ? rank_over(QQ{}, nm) : rank_over(GF(ell), reduce_mod(nm, ell));
  return static_cast<Int>(n - r);
}

IMat module_action(const MatrixGroupModel& g, const IMat& u, ModuleKind module) {
  const std::size_t n = g.dim;
  if (u.size() != n) throw InputError("module_action: element has wrong size");
  switch (module) {
    case ModuleKind::natural:
      return reduce_mod(u, g.ell);
    case ModuleKind::wedge2: {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      IMat w(pairs.size(), IVec(pairs.size(), 0));
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          const auto [i, j] = pairs[a];
          const auto [k, l] = pairs[b];
          w[a][b] = u[i][k] * u[j][l] - u[i][l] * u[j][k];
        }
      return reduce_mod(w, g.ell);
    }
    case ModuleKind::wedge2_kernel: {
      if (g.family != GroupFamily::Sp)
        throw InputError("wedge2_kernel is only defined for Sp(2n)");
      if (g.ell != 0 && g.n % g.ell == 0)
        throw InputError("wedge2_kernel: ell | n, the kernel does not split off the trivial summand");
      const IMat w = module_action(g, u, ModuleKind::wedge2);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      auto restrict_to_kernel = [&](auto field) -> IMat {
        using F = decltype(field);
        // kernel of e_i ^ e_j |-> chi(e_i, e_j)
        FMat<F> phi(1, FVec<F>(pairs.size(), field.zero()));
        for (std::size_t a = 0; a < pairs.size(); ++a)
          phi[0][a] = field.from_int(g.form[pairs[a].first][pairs[a].second]);
        std::vector<FVec<F>> kernel = null_space(field, phi);
        SpanBasis<F> span(field, kernel);
        const FMat<F> wf = to_field(field, w);
        IMat out(kernel.size(), IVec(kernel.size(), 0));
        for (std::size_t b = 0; b < kernel.size(); ++b) {
          FVec<F> img(pairs.size(), field.zero());
          for (std::size_t r = 0; r < pairs.size(); ++r)
            for (std::size_t c = 0; c < pairs.size(); ++c)
              img[r] = field.add(img[r], field.mul(wf[r][c], kernel[b][c]));
          auto coords = span.coords(img);
          if (!coords) throw LdkError("wedge2_kernel: image leaves the kernel");
          for (std::size_t r = 0; r < kernel.size(); ++r) {
            if constexpr (std::is_same_v<F, QQ>) {
              mpq_class c = (*coords)[r];
              c.canonicalize();
              if (c.get_den() != 1) throw LdkError("wedge2_kernel: non-integral matrix entry");
              out[r][b] = checked_int(c.get_num());
            } else {
              out[r][b] = (*coords)[r];
            }
          }
        }
        return out;
      };
      return g.ell == 0 ? restrict_to_kernel(QQ{}) : restrict_to_kernel(GF(g.ell));
    }
    case ModuleKind::adjoint: {
      LieKind lie;
      switch (g.family) {
        case GroupFamily::SL: lie = LieKind::sl; break;
        case GroupFamily::PGL: lie = LieKind::pgl; break;
        case GroupFamily::Sp: lie = LieKind::sp; break;
        default: lie = LieKind::so; break;
      }
      auto build = [&](auto field) -> IMat {
        using F = decltype(field);
        const FMat<F> uf = to_field(field, u);
        const FMat<F> uinv = fmat_inverse(field, uf);
        std::vector<FVec<F>> ambient;
        std::vector<FVec<F>> basis =
            lie == LieKind::pgl ? lie_basis(field, g, lie, &ambient) : lie_basis(field, g, lie);
        std::optional<SpanBasis<F>> span;
        if (lie == LieKind::pgl)
          span.emplace(field, ambient);
        else
          span.emplace(field, basis);
        IMat out(basis.size(), IVec(basis.size(), 0));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          FMat<F> x(n, FVec<F>(n, field.zero()));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[i][j] = basis[b][i * n + j];
          const FMat<F> y = fmat_mul(field, fmat_mul(field, uf, x), uinv);
          auto coords = span->coords(flatten(y));
          if (!coords) throw LdkError("adjoint: Ad(u) leaves the Lie algebra");
          const std::size_t off = lie == LieKind::pgl ? 1 : 0; // drop the scalar coordinate
          for (std::size_t r = 0; r < basis.size(); ++r) {
            if constexpr (std::is_same_v<F, QQ>) {
              mpq_class c = (*coords)[r + off];
              c.canonicalize();
              if (c.get_den() != 1) throw LdkError("adjoint: non-integral matrix entry");
              out[r][b] = checked_int(c.get_num());
            } else {
              out[r][b] = (*coords)[r + off];
            }
          }
        }
        return out;
      };
      return g.ell == 0 ? build(QQ{}) : build(GF(g.ell));
    }
  }
  throw InputError("module_action: unsupported module");
}

Int lie_centralizer_dim(const MatrixGroupModel& g, const IMat& u, LieKind lie) {
  if (!lie_compatible(g, lie))
    throw InputError("lie_centralizer_dim: Lie algebra incompatible with the group model");
  if (u.size() != g.dim) throw InputError("lie_centralizer_dim: element has wrong size");
  if (g.ell == 0) return centralizer_dim_over(QQ{}, g, u, lie);
  return centralizer_dim_over(GF(g.ell), g, reduce_mod(u, g.ell), lie);
}

SmoothnessVerdict smoothness_verdict(const RootDatum& d, Int ell) {
  if (!is_prime(ell)) throw InputError("smoothness_verdict: ell must be prime");
  SmoothnessVerdict v;
  v.center_smooth = !d.has_ell_torsion(LatticeSide::roots, ell);
  const bool coweight_free = !d.has_ell_torsion(LatticeSide::coroots, ell);
  bool exclusions = true;
  for (const auto& t : d.components()) {
    const bool bcde7 =
        t.family == 'B' || t.family == 'C' || t.family == 'D' || (t.family == 'E' && t.n == 7);
    if (bcde7 && ell == 2) exclusions = false;
    if (t.family == 'E' && t.n == 6 && ell == 3) exclusions = false;
  }
  if (!v.center_smooth) {
    v.centralizer_smooth = false;
    v.reason = "X*/ZR has " + std::to_string(ell) + "-torsion: center and Z_G(u) non-smooth";
  } else if (coweight_free) {
    v.centralizer_smooth = true;
    v.reason = "X_*/ZR^vee has no " + std::to_string(ell) +
               "-torsion: Steinberg branch, Z_G(u) smooth of dimension rank";
  } else if (exclusions) {
    v.centralizer_smooth = true;
    v.reason = "type exclusions hold (no B/C/D/E7 component at ell=2, no E6 at ell=3): Z_G(u) smooth";
  } else {
    v.centralizer_smooth = false;
    v.reason = "coweight torsion present and type exclusions fail: smoothness criterion not met";
  }
  return v;
}

} // namespace ldk

#include "ldk/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace ldk {

Int checked_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw LdkError("integer overflow converting from GMP");
  return z.get_si();
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

IMat identity_mat(std::size_t n) {
  IMat m(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  IMat r(n, IVec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw LdkError("mat_mul: shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      const Int ail = a[i][l];
      if (ail == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += ail * b[l][j];
    }
  }
  return r;
}

IVec mat_vec(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw LdkError("mat_vec: shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

IMat transpose(const IMat& a) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  IMat r(m, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

IVec vec_add(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw LdkError("vec_add: size mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec vec_sub(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw LdkError("vec_sub: size mismatch");
  IVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec vec_scale(Int c, const IVec& v) {
  IVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw LdkError("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

GF::GF(Int prime) : p(prime) {
  if (!is_prime(prime)) throw InputError("GF: modulus " + std::to_string(prime) + " is not prime");
}

GF::Elem GF::inv(const Elem& a) const {
  if (a == 0) throw LdkError("division by zero in GF(" + std::to_string(p) + ")");
  // extended Euclid
  Int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ----------------------------------------------------------------- Smith

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat z_identity(std::size_t n) {
  ZMat m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_op(ZMat& m, std::size_t dst, std::size_t src, const mpz_class& c) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= c * m[src][j];
}

void col_op(ZMat& m, std::size_t dst, std::size_t src, const mpz_class& c) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] -= c * m[i][src];
}

IMat from_z(const ZMat& m) {
  IMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& z : m[i]) r[i].push_back(checked_int(z));
  }
  return r;
}

} // namespace

SmithDecomposition smith_normal_form(const IMat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  ZMat m(rows, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw LdkError("smith_normal_form: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
  }
  ZMat u = z_identity(rows);
  ZMat v = z_identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t s = 0; s < steps; ++s) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    for (;;) {
      std::size_t pi = s, pj = s;
      mpz_class best = 0;
      for (std::size_t i = s; i < rows; ++i)
        for (std::size_t j = s; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          mpz_class av = abs(m[i][j]);
          if (best == 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) goto done; // trailing block vanished
      std::swap(m[pi], m[s]);
      std::swap(u[pi], u[s]);
      if (pj != s) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][s]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][pj], v[i][s]);
      }
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m[i][s] == 0) continue;
        mpz_class q = m[i][s] / m[s][s];
        row_op(m, i, s, q);
        row_op(u, i, s, q);
        if (m[i][s] != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m[s][j] == 0) continue;
        mpz_class q = m[s][j] / m[s][s];
        col_op(m, j, s, q);
        col_op(v, j, s, q);
        if (m[s][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the whole trailing block for true SNF
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols && divides; ++j)
          if (m[i][j] % m[s][s] != 0) {
            // fold that row in and retry
            row_op(m, s, i, mpz_class(-1));
            row_op(u, s, i, mpz_class(-1));
            divides = false;
          }
      if (divides) break;
    }
    if (m[s][s] < 0) {
      for (std::size_t j = 0; j < cols; ++j) m[s][j] = -m[s][j];
      for (std::size_t j = 0; j < rows; ++j) u[s][j] = -u[s][j];
    }
  }
done:
  SmithDecomposition out;
  out.diagonal.assign(steps, 0);
  out.rank = 0;
  for (std::size_t s = 0; s < steps; ++s) {
    out.diagonal[s] = checked_int(m[s][s]);
    if (out.diagonal[s] != 0) ++out.rank;
  }
  out.left = from_z(u);
  out.right = from_z(v);
  return out;
}

IVec cokernel_invariants(const IMat& a, std::size_t ambient_rank) {
  SmithDecomposition snf = smith_normal_form(a);
  IVec out;
  for (Int d : snf.diagonal)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  const std::size_t free_factors = ambient_rank - snf.rank;
  out.insert(out.end(), free_factors, 0);
  return out;
}

std::optional<IntegerSolution> solve_integer(const IMat& a, const IVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw LdkError("solve_integer: rhs size mismatch");
  SmithDecomposition snf = smith_normal_form(a);
  const IVec ub = mat_vec(snf.left, b);
  IVec z(cols, 0);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    const Int d = snf.diagonal[i];
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      z[i] = ub[i] / d;
    }
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (ub[i] != 0) return std::nullopt;

  IntegerSolution sol;
  sol.point = mat_vec(snf.right, z);
  for (std::size_t j = 0; j < cols; ++j) {
    const bool free_col = j >= std::min(rows, cols) || snf.diagonal[j] == 0;
    if (!free_col) continue;
    IVec e(cols, 0);
    e[j] = 1;
    sol.null_basis.push_back(mat_vec(snf.right, e));
  }
  return sol;
}

IMat hermite_basis(const IMat& generators) {
  if (generators.empty()) return {};
  const std::size_t cols = generators[0].size();
  ZMat m(generators.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = generators[i][j];

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // gcd out column c below row r
    for (;;) {
      std::size_t sel = m.size();
      mpz_class best = 0;
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class av = abs(m[i][c]);
        if (best == 0 || av < best) {
          best = av;
          sel = i;
        }
      }
      if (sel == m.size()) break;
      std::swap(m[sel], m[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q = m[i][c] / m[r][c];
        row_op(m, i, r, q);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (auto& x : m[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        row_op(m, i, r, q);
      }
      ++r;
    }
  }
  m.resize(r);
  return from_z(m);
}

Lattice::Lattice(IMat generators, std::size_t ambient_dim) : dim_(ambient_dim) {
  for (const auto& g : generators)
    if (g.size() != ambient_dim) throw LdkError("Lattice: generator dimension mismatch");
  // SNF of the dim x k matrix whose columns are the generators
  IMat cols(ambient_dim, IVec(generators.size(), 0));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) cols[j][i] = generators[i][j];
  snf_ = smith_normal_form(cols);
  hermite_ = hermite_basis(generators);
}

IVec Lattice::class_label(const IVec& v) const {
  if (v.size() != dim_) throw LdkError("Lattice: vector dimension mismatch");
  const IVec y = mat_vec(snf_.left, v);
  IVec label(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i < snf_.diagonal.size() && snf_.diagonal[i] != 0) {
      const Int d = snf_.diagonal[i];
      label[i] = y[i] - floor_div(y[i], d) * d;
    } else {
      label[i] = y[i];
    }
  }
  return label;
}

bool Lattice::contains(const IVec& v) const { return is_zero_vec(class_label(v)); }

IVec Lattice::reduce(const IVec& v) const {
  IVec r = v;
  // pivot position of each Hermite row
  for (const auto& row : hermite_) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    const Int q = floor_div(r[c], row[c]);
    if (q != 0)
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= q * row[j];
  }
  return r;
}

} // namespace ldk

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

/*
  Exact linear algebra kernels shared by all modules.

  Integer data is kept in plain 64-bit vectors/matrices (IVec/IMat).
  Anything that can suffer coefficient growth -- Smith/Hermite normal
  forms, ranks over Q, nullspaces -- runs on GMP scalars internally and
  converts back at the boundary.
*/

namespace ldk {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>; // row-major, rectangular

class LdkError : public std::runtime_error {
public:
  explicit LdkError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed user input (documents, labels, CLI values).
class InputError : public LdkError {
public:
  explicit InputError(const std::string& what) : LdkError(what) {}
};

// ---------------------------------------------------------------- integers

Int checked_int(const mpz_class& z);
Int floor_div(Int a, Int b);

// ------------------------------------------------------------ IMat helpers

IMat identity_mat(std::size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_vec(const IMat& a, const IVec& v);
IMat transpose(const IMat& a);
IVec vec_add(const IVec& a, const IVec& b);
IVec vec_sub(const IVec& a, const IVec& b);
IVec vec_scale(Int c, const IVec& v);
Int dot(const IVec& a, const IVec& b);
bool is_zero_vec(const IVec& v);

// --------------------------------------------------------------- fields

// Rationals (GMP-backed).
struct QQ {
  using Elem = mpq_class;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(Int v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem neg(const Elem& a) const { return -a; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw LdkError("division by zero in QQ");
    return Elem(1) / a;
  }
};

// Prime field F_p, elements normalized to [0, p).
struct GF {
  using Elem = Int;
  Int p;

  explicit GF(Int prime);

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(Int v) const {
    Int r = v % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return (a - b + p) % p; }
  Elem mul(const Elem& a, const Elem& b) const {
    return static_cast<Int>((static_cast<__int128>(a) * b) % p);
  }
  Elem inv(const Elem& a) const;
};

bool is_prime(Int n);

template <class F>
using FMat = std::vector<std::vector<typename F::Elem>>;
template <class F>
using FVec = std::vector<typename F::Elem>;

template <class F>
FMat<F> to_field(const F& f, const IMat& a) {
  FMat<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (Int v : a[i]) r[i].push_back(f.from_int(v));
  }
  return r;
}

// Row-reduce in place; returns rank. Pivot columns (in order of the rows
// that carry them) are appended to *pivots when given. The result is in
// reduced row echelon form with unit pivots.
template <class F>
std::size_t row_reduce(const F& f, FMat<F>& m, std::vector<std::size_t>* pivots = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && f.is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const auto piv_inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], piv_inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

template <class F>
std::size_t mat_rank(const F& f, const IMat& a) {
  FMat<F> m = to_field(f, a);
  return row_reduce(f, m);
}

// Basis of { x : a x = 0 }, one vector per free column.
template <class F>
std::vector<FVec<F>> null_space(const F& f, FMat<F> m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::size_t> pivots;
  row_reduce(f, m, &pivots);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<FVec<F>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FVec<F> x(cols, f.zero());
    x[c] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = f.neg(m[i][c]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Solve a x = b; empty optional when inconsistent.
template <class F>
std::optional<FVec<F>> solve_linear(const F& f, FMat<F> a, const FVec<F>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots;
  row_reduce(f, a, &pivots);
  FVec<F> x(cols, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt; // pivot in the rhs column
    x[pivots[i]] = a[i][cols];
  }
  // rows below the pivot rows must be all-zero including rhs
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (!f.is_zero(a[i][cols])) return std::nullopt;
  return x;
}

// A row space with coordinate lookup: feed basis vectors, then expand
// members of the span in that basis. Expansion coefficients are exact.
template <class F>
class SpanBasis {
public:
  SpanBasis(const F& f, std::vector<FVec<F>> basis) : f_(f), basis_(std::move(basis)) {
    rref_ = basis_;
    ops_.assign(rref_.size(), {});
    // carry an op log alongside the reduction so coordinates come out in
    // terms of the original basis
    const std::size_t rows = rref_.size();
    const std::size_t cols = rows == 0 ? 0 : rref_[0].size();
    for (std::size_t i = 0; i < rows; ++i) {
      ops_[i].assign(rows, f_.zero());
      ops_[i][i] = f_.one();
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t sel = r;
      while (sel < rows && f_.is_zero(rref_[sel][c])) ++sel;
      if (sel == rows) continue;
      std::swap(rref_[sel], rref_[r]);
      std::swap(ops_[sel], ops_[r]);
      const auto piv_inv = f_.inv(rref_[r][c]);
      for (auto& v : rref_[r]) v = f_.mul(v, piv_inv);
      for (auto& v : ops_[r]) v = f_.mul(v, piv_inv);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || f_.is_zero(rref_[i][c])) continue;
        const auto factor = rref_[i][c];
        for (std::size_t j = 0; j < cols; ++j)
          rref_[i][j] = f_.sub(rref_[i][j], f_.mul(factor, rref_[r][j]));
        for (std::size_t j = 0; j < rows; ++j)
          ops_[i][j] = f_.sub(ops_[i][j], f_.mul(factor, ops_[r][j]));
      }
      pivots_.push_back(c);
      ++r;
    }
    if (r != rows) throw LdkError("SpanBasis: basis vectors are dependent");
  }

  std::size_t dim() const { return basis_.size(); }

  // Coordinates of v in the original basis; nullopt when v is outside.
  std::optional<FVec<F>> coords(const FVec<F>& v) const {
    FVec<F> residual = v;
    FVec<F> out(basis_.size(), f_.zero());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const auto c = residual[pivots_[i]];
      if (f_.is_zero(c)) continue;
      for (std::size_t j = 0; j < residual.size(); ++j)
        residual[j] = f_.sub(residual[j], f_.mul(c, rref_[i][j]));
      for (std::size_t j = 0; j < basis_.size(); ++j)
        out[j] = f_.add(out[j], f_.mul(c, ops_[i][j]));
    }
    for (const auto& x : residual)
      if (!f_.is_zero(x)) return std::nullopt;
    return out;
  }

private:
  F f_;
  std::vector<FVec<F>> basis_;
  std::vector<FVec<F>> rref_;
  std::vector<FVec<F>> ops_; // rref_ = ops_ * basis_
  std::vector<std::size_t> pivots_;
};

// ------------------------------------------------- integer normal forms

struct SmithDecomposition {
  IVec diagonal;    // d_1 | d_2 | ..., nonnegative, length min(rows, cols)
  IMat left;        // unimodular, rows x rows
  IMat right;       // unimodular, cols x cols;  left * a * right = diag
  std::size_t rank; // number of nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IMat& a);

// Invariant factors of coker(a : Z^cols -> Z^rows) as the spec reports
// them: nontrivial torsion entries in divisibility order, then one 0 per
// free factor.
IVec cokernel_invariants(const IMat& a, std::size_t ambient_rank);

struct IntegerSolution {
  IVec point;
  IMat null_basis; // basis of the solution lattice of a x = 0
};

// All integer solutions of a x = b.
std::optional<IntegerSolution> solve_integer(const IMat& a, const IVec& b);

// The sublattice of Z^dim spanned by `generators` (given as rows).
class Lattice {
public:
  Lattice(IMat generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t lattice_rank() const { return snf_.rank; }
  bool contains(const IVec& v) const;

  // Canonical label of v + L in Z^dim / L; equal labels iff same class.
  IVec class_label(const IVec& v) const;

  // Canonical representative of the coset v + L (deterministic reduction
  // against the Hermite basis of L; lexicographically reproducible).
  IVec reduce(const IVec& v) const;

private:
  std::size_t dim_;
  SmithDecomposition snf_;
  IMat hermite_; // row-style Hermite basis of the lattice
};

// Row-style Hermite normal form of the lattice spanned by the rows:
// echelon rows with positive pivots, entries above each pivot reduced
// into [0, pivot). Zero rows are dropped.
IMat hermite_basis(const IMat& generators);

} // namespace ldk

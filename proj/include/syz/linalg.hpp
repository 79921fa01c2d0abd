#pragma once

// Exact dense linear algebra over Q and F_p. Everything upstream (module
// categories, resolutions, Ext) reduces to rank/solve/kernel computations
// here, so this file is deliberately boring and heavily tested.
//
// RREF comes in two flavors: a serial reference and an OpenMP-parallel
// variant. The reduced row echelon form of a matrix is unique, and both
// implementations canonicalize entries (GMP rationals are always in lowest
// terms, F_p residues in [0,p)), so the two must agree bit for bit. The
// test suite and the bench target both rely on that.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

// Which ground field a computation runs over. Data only; the arithmetic
// lives in Rationals / PrimeField below and callers dispatch on kind.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  long long p = 0;

  bool operator==(const FieldSpec&) const = default;
  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(long long p) { return {Kind::prime_field, p}; }
  std::string str() const {
    return kind == Kind::rationals ? "Q" : "Fp(" + std::to_string(p) + ")";
  }
};

struct Rationals {
  using elem = mpq_class;

  elem zero() const { return elem(0); }
  elem one() const { return elem(1); }
  elem from_int(long v) const { return elem(v); }

  elem add(const elem& a, const elem& b) const { return elem(a + b); }
  elem sub(const elem& a, const elem& b) const { return elem(a - b); }
  elem mul(const elem& a, const elem& b) const { return elem(a * b); }
  elem neg(const elem& a) const { return elem(-a); }
  elem inv(const elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return elem(1 / a);
  }
  bool is_zero(const elem& a) const { return a == 0; }
  bool eq(const elem& a, const elem& b) const { return a == b; }
  std::string str(const elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

// Prime field with runtime modulus. Residues are canonical in [0, p).
// Construction rejects obvious composites; a composite that slips past the
// trial division is caught at the first non-invertible division.
struct PrimeField {
  using elem = long long;
  long long p = 2;

  PrimeField() = default;
  explicit PrimeField(long long prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("field modulus must be at least 2");
    for (long long d = 2; d < 1000 && d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("modulus " + std::to_string(p) +
                                    " is not prime (divisible by " +
                                    std::to_string(d) + ")");
  }

  elem zero() const { return 0; }
  elem one() const { return p == 1 ? 0 : 1; }
  elem from_int(long v) const {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }

  elem add(elem a, elem b) const { return (a + b) % p; }
  elem sub(elem a, elem b) const { return ((a - b) % p + p) % p; }
  elem mul(elem a, elem b) const {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
  }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended gcd; gcd != 1 means the "prime" was not
    long long r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long r2 = r0 - q * r1;
      long long t2 = t0 - q * t1;
      r0 = r1; r1 = r2;
      t0 = t1; t1 = t2;
    }
    if (r0 != 1)
      throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
    return t0 < 0 ? t0 + p : t0;
  }
  bool is_zero(elem a) const { return a == 0; }
  bool eq(elem a, elem b) const { return a == b; }
  std::string str(elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p); }
};

template <class F>
concept ExactField = requires(const F k, typename F::elem a) {
  { k.zero() } -> std::convertible_to<typename F::elem>;
  { k.one() } -> std::convertible_to<typename F::elem>;
  { k.add(a, a) } -> std::convertible_to<typename F::elem>;
  { k.mul(a, a) } -> std::convertible_to<typename F::elem>;
  { k.inv(a) } -> std::convertible_to<typename F::elem>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
};

template <ExactField F>
struct Mat {
  using elem = typename F::elem;
  std::size_t rows = 0, cols = 0;
  std::vector<elem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, const elem& fill)
      : rows(r), cols(c), a(r * c, fill) {}

  elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

template <ExactField F>
using Vec = std::vector<typename F::elem>;

template <ExactField F>
Mat<F> zeros(const F& k, std::size_t r, std::size_t c) {
  return Mat<F>(r, c, k.zero());
}

template <ExactField F>
Mat<F> identity(const F& k, std::size_t n) {
  Mat<F> m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

// test/readability convenience: build from integer literals
template <ExactField F>
Mat<F> mat_of(const F& k, const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Mat<F> m(r, c, k.zero());
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = k.from_int(rows[i][j]);
  }
  return m;
}

template <ExactField F>
bool is_zero_mat(const F& k, const Mat<F>& m) {
  for (const auto& x : m.a)
    if (!k.is_zero(x)) return false;
  return true;
}

template <ExactField F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.a.resize(m.a.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <ExactField F>
Mat<F> mul(const F& k, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
  Mat<F> r(x.rows, y.cols, k.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t l = 0; l < x.cols; ++l) {
      const auto& xv = x.at(i, l);
      if (k.is_zero(xv)) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = k.add(r.at(i, j), k.mul(xv, y.at(l, j)));
    }
  return r;
}

template <ExactField F>
Mat<F> add(const F& k, const Mat<F>& x, const Mat<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("add: shape mismatch");
  Mat<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = k.add(r.a[i], y.a[i]);
  return r;
}

template <ExactField F>
Mat<F> sub(const F& k, const Mat<F>& x, const Mat<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("sub: shape mismatch");
  Mat<F> r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = k.sub(r.a[i], y.a[i]);
  return r;
}

template <ExactField F>
Mat<F> scale(const F& k, const typename F::elem& c, const Mat<F>& x) {
  Mat<F> r = x;
  for (auto& v : r.a) v = k.mul(c, v);
  return r;
}

template <ExactField F>
Mat<F> hstack(const Mat<F>& x, const Mat<F>& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
  Mat<F> r(x.rows, x.cols + y.cols, typename F::elem());
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

template <ExactField F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.cols) throw std::invalid_argument("vstack: col mismatch");
  Mat<F> r(x.rows + y.rows, x.cols, typename F::elem());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (std::size_t i = 0; i < y.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

template <ExactField F>
Vec<F> mat_vec(const F& k, const Mat<F>& m, const Vec<F>& v) {
  if (m.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec<F> r(m.rows, k.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!k.is_zero(m.at(i, j))) r[i] = k.add(r[i], k.mul(m.at(i, j), v[j]));
  return r;
}

template <ExactField F>
struct RrefResult {
  Mat<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Shared skeleton: pivot search and normalization are identical; only the
// elimination loop over the other rows differs between serial and parallel.
template <ExactField F, class Eliminate>
RrefResult<F> rref_impl(const F& k, Mat<F> m, Eliminate eliminate) {
  RrefResult<F> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && k.is_zero(m.at(pr, c))) ++pr;
    if (pr == m.rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const auto piv_inv = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = k.mul(piv_inv, m.at(r, j));
    eliminate(m, r, c);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

template <ExactField F>
void eliminate_row(const F& k, Mat<F>& m, std::size_t i, std::size_t r, std::size_t c) {
  const auto f = m.at(i, c);
  if (k.is_zero(f)) return;
  for (std::size_t j = c; j < m.cols; ++j)
    m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
}

}  // namespace detail

template <ExactField F>
RrefResult<F> rref_serial(const F& k, Mat<F> m) {
  return detail::rref_impl(k, std::move(m), [&k](Mat<F>& mm, std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < mm.rows; ++i)
      if (i != r) detail::eliminate_row(k, mm, i, r, c);
  });
}

// Same pivot sequence as the serial version; only the per-row updates for a
// fixed pivot run concurrently, and those are independent, so the output is
// identical (RREF is unique anyway; this keeps even intermediate states equal).
template <ExactField F>
RrefResult<F> rref_parallel(const F& k, Mat<F> m) {
  return detail::rref_impl(k, std::move(m), [&k](Mat<F>& mm, std::size_t r, std::size_t c) {
#ifdef _OPENMP
    const long long n = static_cast<long long>(mm.rows);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != r)
        detail::eliminate_row(k, mm, static_cast<std::size_t>(i), r, c);
    }
#else
    for (std::size_t i = 0; i < mm.rows; ++i)
      if (i != r) detail::eliminate_row(k, mm, i, r, c);
#endif
  });
}

inline constexpr std::size_t kParallelRrefThreshold = 4096;  // rows*cols

template <ExactField F>
RrefResult<F> rref(const F& k, const Mat<F>& m) {
  if (m.rows * m.cols >= kParallelRrefThreshold) return rref_parallel(k, m);
  return rref_serial(k, m);
}

template <ExactField F>
std::size_t rank(const F& k, const Mat<F>& m) {
  return rref(k, m).rank;
}

// Basis of the right null space, one vector per free column, free columns in
// ascending order, free coordinate set to 1. This is the canonical echelon
// kernel basis, so equal row spaces give equal kernels element-wise.
template <ExactField F>
std::vector<Vec<F>> kernel_basis(const F& k, const Mat<F>& m) {
  RrefResult<F> e = rref(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(m.cols, k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = k.neg(e.reduced.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of m x = b with all free variables set to zero.
template <ExactField F>
std::optional<Vec<F>> solve(const F& k, const Mat<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat<F> aug(m.rows, m.cols + 1, k.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult<F> e = rref(k, aug);
  for (auto c : e.pivots)
    if (c == m.cols) return std::nullopt;  // pivot in the b column: inconsistent
  Vec<F> x(m.cols, k.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.reduced.at(i, m.cols);
  return x;
}

// Solve m X = B column by column (one elimination, all right-hand sides).
template <ExactField F>
std::optional<Mat<F>> solve_matrix(const F& k, const Mat<F>& m, const Mat<F>& B) {
  if (B.rows != m.rows) throw std::invalid_argument("solve_matrix: shape mismatch");
  Mat<F> aug = hstack(m, B);
  RrefResult<F> e = rref(k, aug);
  for (auto c : e.pivots)
    if (c >= m.cols) return std::nullopt;
  // an inconsistent row would have produced a pivot in the B block, caught above
  Mat<F> X(m.cols, B.cols, k.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < B.cols; ++j)
      X.at(e.pivots[i], j) = e.reduced.at(i, m.cols + j);
  return X;
}

template <ExactField F>
std::optional<Mat<F>> right_inverse(const F& k, const Mat<F>& m) {
  return solve_matrix(k, m, identity(k, m.rows));
}

template <ExactField F>
std::optional<Mat<F>> inverse(const F& k, const Mat<F>& m) {
  if (m.rows != m.cols) return std::nullopt;
  auto r = solve_matrix(k, m, identity(k, m.rows));
  if (!r) return std::nullopt;
  // solve_matrix gives a right inverse; square right inverse is two-sided
  return r;
}

// Nonzero rows of the RREF: canonical basis of the row space.
template <ExactField F>
Mat<F> row_space_basis(const F& k, const Mat<F>& m) {
  RrefResult<F> e = rref(k, m);
  Mat<F> r(e.rank, m.cols, k.zero());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(i, j) = e.reduced.at(i, j);
  return r;
}

template <ExactField F>
Mat<F> column_space_basis(const F& k, const Mat<F>& m) {
  return transpose(row_space_basis(k, transpose(m)));
}

template <ExactField F>
std::string to_str(const F& k, const Mat<F>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) s += ",";
      s += k.str(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace syz

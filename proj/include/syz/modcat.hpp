#pragma once

// Finite dimensional left modules over an Algebra, given by one action
// matrix per algebra basis element (column vectors, covariant action:
// act(x*y) = act(x)*act(y)). Everything here is deterministic: canonical
// column bases, canonical kernels, fixed iteration orders. Isomorphism
// testing returns yes (with a verified witness), no (with a certificate
// reason), or unknown; callers must treat unknown as a first class answer.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "syz/algebra.hpp"
#include "syz/linalg.hpp"

namespace syz {

template <ExactField F>
struct Module {
  AlgPtr<F> alg;
  std::size_t dim = 0;
  std::vector<Mat<F>> act;  // indexed by algebra basis element
  std::string name;
};

namespace detail {

template <ExactField F>
Mat<F> cols_to_mat(const F& k, const std::vector<Vec<F>>& cols, std::size_t rows) {
  Mat<F> m(rows, cols.size(), k.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace detail

template <ExactField F>
Module<F> zero_module(const AlgPtr<F>& alg) {
  Module<F> m;
  m.alg = alg;
  m.dim = 0;
  m.act.assign(alg->dim(), Mat<F>(0, 0, alg->k.zero()));
  m.name = "0";
  return m;
}

template <ExactField F>
Module<F> simple(const AlgPtr<F>& alg, std::size_t slot) {
  Module<F> m;
  m.alg = alg;
  m.dim = 1;
  m.act.assign(alg->dim(), Mat<F>(1, 1, alg->k.zero()));
  m.act[slot].at(0, 0) = alg->k.one();
  m.name = "S" + alg->idem_names[slot];
  return m;
}

// left ideal generated by an idempotent, basis filtered from the algebra
template <ExactField F>
Module<F> projective(const AlgPtr<F>& alg, std::size_t slot) {
  const F& k = alg->k;
  std::vector<std::size_t> elems;
  for (std::size_t b = 0; b < alg->dim(); ++b)
    if (alg->basis[b].src == slot) elems.push_back(b);
  std::vector<std::size_t> pos(alg->dim(), alg->dim());
  for (std::size_t p = 0; p < elems.size(); ++p) pos[elems[p]] = p;

  Module<F> m;
  m.alg = alg;
  m.dim = elems.size();
  m.act.assign(alg->dim(), Mat<F>(m.dim, m.dim, k.zero()));
  for (std::size_t x = 0; x < alg->dim(); ++x)
    for (std::size_t c = 0; c < elems.size(); ++c)
      for (const auto& t : alg->table[x][elems[c]]) m.act[x].at(pos[t.idx], c) = t.c;
  m.name = "P" + alg->idem_names[slot];
  return m;
}

// the algebra as a left module over itself
template <ExactField F>
Module<F> regular(const AlgPtr<F>& alg) {
  const F& k = alg->k;
  Module<F> m;
  m.alg = alg;
  m.dim = alg->dim();
  m.act.assign(alg->dim(), Mat<F>(m.dim, m.dim, k.zero()));
  for (std::size_t x = 0; x < alg->dim(); ++x)
    for (std::size_t c = 0; c < alg->dim(); ++c)
      for (const auto& t : alg->table[x][c]) m.act[x].at(t.idx, c) = t.c;
  m.name = "A";
  return m;
}

template <ExactField F>
Module<F> direct_sum(const std::vector<Module<F>>& parts, const AlgPtr<F>& alg) {
  const F& k = alg->k;
  Module<F> m;
  m.alg = alg;
  for (const auto& p : parts) {
    SYZ_CHECK(same_algebra(*p.alg, *alg), "direct sum over mismatched algebras");
    m.dim += p.dim;
  }
  m.act.assign(alg->dim(), Mat<F>(m.dim, m.dim, k.zero()));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t x = 0; x < alg->dim(); ++x)
      for (std::size_t i = 0; i < p.dim; ++i)
        for (std::size_t j = 0; j < p.dim; ++j)
          m.act[x].at(off + i, off + j) = p.act[x].at(i, j);
    m.name += (m.name.empty() ? "" : "+") + p.name;
    off += p.dim;
  }
  if (parts.empty()) m.name = "0";
  return m;
}

template <ExactField F>
Module<F> direct_sum(const Module<F>& a, const Module<F>& b) {
  return direct_sum(std::vector<Module<F>>{a, b}, a.alg);
}

// linear dual, a left module over the opposite algebra
template <ExactField F>
Module<F> dual(const Module<F>& m) {
  Module<F> d;
  d.alg = opposite(m.alg);
  d.dim = m.dim;
  d.act.reserve(m.act.size());
  for (const auto& a : m.act) d.act.push_back(transpose(a));
  d.name = "D(" + m.name + ")";
  return d;
}

// the algebra as a left module over its enveloping algebra
template <ExactField F>
Module<F> regular_bimodule(const AlgPtr<F>& base, std::size_t dim_gate) {
  auto env = enveloping(base, dim_gate);
  const F& k = base->k;
  Module<F> m;
  m.alg = env;
  m.dim = base->dim();
  m.act.assign(env->dim(), Mat<F>(m.dim, m.dim, k.zero()));
  for (std::size_t s = 0; s < env->dim(); ++s) {
    auto [x, y] = env->env_pairs[s];
    for (std::size_t c = 0; c < base->dim(); ++c) {
      LinComb<F> v = base->mul_lin(LinComb<F>{{x, k.one()}},
                                   base->mul_lin(LinComb<F>{{c, k.one()}},
                                                 LinComb<F>{{y, k.one()}}));
      for (const auto& t : v) m.act[s].at(t.idx, c) = t.c;
    }
  }
  m.name = "A_bimod";
  return m;
}

template <ExactField F>
std::vector<std::size_t> dimension_vector(const Module<F>& m) {
  std::vector<std::size_t> dv;
  for (std::size_t i = 0; i < m.alg->n_idem; ++i) dv.push_back(rank(m.alg->k, m.act[i]));
  return dv;
}

// module structure on an invariant subspace, columns of U a basis
template <ExactField F>
Module<F> restrict_to_submodule(const Module<F>& m, const Mat<F>& U,
                                const std::string& name) {
  const F& k = m.alg->k;
  Module<F> s;
  s.alg = m.alg;
  s.dim = U.cols;
  s.act.assign(m.alg->dim(), Mat<F>(s.dim, s.dim, k.zero()));
  for (std::size_t g : m.alg->generators) {
    auto X = solve_matrix(k, U, mul(k, m.act[g], U));
    SYZ_CHECK(X.has_value(), "subspace is not invariant under the action");
    s.act[g] = *X;
  }
  for (std::size_t b = 0; b < m.alg->dim(); ++b) {
    const auto& fs = m.alg->basis[b].factors;
    Mat<F> acc = s.act[fs[0]];
    for (std::size_t t = 1; t < fs.size(); ++t) acc = mul(k, acc, s.act[fs[t]]);
    s.act[b] = std::move(acc);
  }
  s.name = name;
  return s;
}

// radical as a submodule: sum of the images of all radical basis elements
template <ExactField F>
struct SubmoduleResult {
  Module<F> sub;
  Mat<F> incl;  // m.dim x sub.dim, columns a canonical basis
};

template <ExactField F>
SubmoduleResult<F> radical_submodule(const Module<F>& m) {
  const F& k = m.alg->k;
  Mat<F> stack(m.dim, 0, k.zero());
  for (std::size_t r : m.alg->radical) stack = hstack(stack, m.act[r]);
  Mat<F> U = column_space_basis(k, stack);
  return {restrict_to_submodule(m, U, "rad(" + m.name + ")"), U};
}

template <ExactField F>
std::vector<std::size_t> top_multiplicities(const Module<F>& m) {
  const F& k = m.alg->k;
  Mat<F> stack(m.dim, 0, k.zero());
  for (std::size_t r : m.alg->radical) stack = hstack(stack, m.act[r]);
  Mat<F> U = column_space_basis(k, stack);
  std::vector<std::size_t> mult;
  for (std::size_t i = 0; i < m.alg->n_idem; ++i)
    mult.push_back(rank(k, m.act[i]) - rank(k, mul(k, m.act[i], U)));
  return mult;
}

// minimal projective cover P -> M with its kernel; copies lists the slot of
// each indecomposable summand (ascending), offsets its block start in P, so
// the generator coordinate of copy t is exactly offsets[t]
template <ExactField F>
struct Cover {
  Module<F> proj;
  std::vector<std::size_t> copies;
  std::vector<std::size_t> offsets;
  Mat<F> epi;   // m.dim x proj.dim
  Module<F> ker;
  Mat<F> incl;  // proj.dim x ker.dim
};

template <ExactField F>
Cover<F> projective_cover(const Module<F>& m) {
  const F& k = m.alg->k;
  Cover<F> cv;

  Mat<F> stack(m.dim, 0, k.zero());
  for (std::size_t r : m.alg->radical) stack = hstack(stack, m.act[r]);
  Mat<F> Urad = column_space_basis(k, stack);

  // choose generator columns: extend a spanning set of e_i rad M to e_i M
  std::vector<Mat<F>> gens;           // one column each
  std::vector<Module<F>> parts;
  for (std::size_t i = 0; i < m.alg->n_idem; ++i) {
    Mat<F> Ci = column_space_basis(k, m.act[i]);
    Mat<F> Ri = mul(k, m.act[i], Urad);
    RrefResult<F> e = rref(k, hstack(Ri, Ci));
    for (auto c : e.pivots) {
      if (c < Ri.cols) continue;
      Mat<F> g(m.dim, 1, k.zero());
      for (std::size_t rr = 0; rr < m.dim; ++rr) g.at(rr, 0) = Ci.at(rr, c - Ri.cols);
      gens.push_back(std::move(g));
      cv.copies.push_back(i);
      parts.push_back(projective(m.alg, i));
    }
  }
  cv.proj = direct_sum(parts, m.alg);
  std::size_t off = 0;
  for (const auto& p : parts) {
    cv.offsets.push_back(off);
    off += p.dim;
  }

  cv.epi = Mat<F>(m.dim, cv.proj.dim, k.zero());
  for (std::size_t t = 0; t < cv.copies.size(); ++t) {
    std::size_t pos = 0;
    for (std::size_t b = 0; b < m.alg->dim(); ++b) {
      if (m.alg->basis[b].src != cv.copies[t]) continue;
      Mat<F> col = mul(k, m.act[b], gens[t]);
      for (std::size_t rr = 0; rr < m.dim; ++rr)
        cv.epi.at(rr, cv.offsets[t] + pos) = col.at(rr, 0);
      ++pos;
    }
  }
  SYZ_CHECK(rank(k, cv.epi) == m.dim, "projective cover map is not surjective");

  cv.incl = detail::cols_to_mat(k, kernel_basis(k, cv.epi), cv.proj.dim);
  // minimality: the kernel avoids every generator coordinate
  for (std::size_t t = 0; t < cv.offsets.size(); ++t)
    for (std::size_t j = 0; j < cv.incl.cols; ++j)
      SYZ_CHECK(k.is_zero(cv.incl.at(cv.offsets[t], j)),
                "cover kernel escapes the radical");
  cv.ker = restrict_to_submodule(cv.proj, cv.incl, "syz(" + m.name + ")");
  return cv;
}

template <ExactField F>
Module<F> syzygy(const Module<F>& m) {
  return projective_cover(m).ker;
}

// Hom space as matrices (n.dim x m.dim), computed through a projective
// presentation of m; maps from a summand P_i correspond to elements of
// e_i n picked from canonical column bases
template <ExactField F>
std::vector<Mat<F>> hom_basis(const Module<F>& m, const Module<F>& n) {
  const F& k = m.alg->k;
  SYZ_CHECK(same_algebra(*m.alg, *n.alg), "hom between modules over different algebras");
  if (m.dim == 0 || n.dim == 0) return {};

  Cover<F> c0 = projective_cover(m);
  Mat<F> d1(c0.proj.dim, 0, k.zero());
  if (c0.ker.dim > 0) {
    Cover<F> c1 = projective_cover(c0.ker);
    d1 = mul(k, c0.incl, c1.epi);
  }

  std::vector<Mat<F>> phis;  // n.dim x proj.dim each
  for (std::size_t t = 0; t < c0.copies.size(); ++t) {
    std::size_t slot = c0.copies[t];
    Mat<F> B = column_space_basis(k, n.act[slot]);
    for (std::size_t v = 0; v < B.cols; ++v) {
      Mat<F> phi(n.dim, c0.proj.dim, k.zero());
      std::size_t pos = 0;
      for (std::size_t b = 0; b < m.alg->dim(); ++b) {
        if (m.alg->basis[b].src != slot) continue;
        for (std::size_t rr = 0; rr < n.dim; ++rr) {
          typename F::elem acc = k.zero();
          for (std::size_t s = 0; s < n.dim; ++s)
            acc = k.add(acc, k.mul(n.act[b].at(rr, s), B.at(s, v)));
          phi.at(rr, c0.offsets[t] + pos) = acc;
        }
        ++pos;
      }
      phis.push_back(std::move(phi));
    }
  }
  if (phis.empty()) return {};

  // constraint: phi composed with d1 vanishes
  Mat<F> sys(n.dim * d1.cols, phis.size(), k.zero());
  for (std::size_t p = 0; p < phis.size(); ++p) {
    Mat<F> comp = mul(k, phis[p], d1);
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < d1.cols; ++j)
        sys.at(i * d1.cols + j, p) = comp.at(i, j);
  }
  auto combos = kernel_basis(k, sys);

  auto eps_plus = right_inverse(k, c0.epi);
  SYZ_CHECK(eps_plus.has_value(), "cover epi has no right inverse");
  std::vector<Mat<F>> out;
  for (const auto& c : combos) {
    Mat<F> phi(n.dim, c0.proj.dim, k.zero());
    for (std::size_t p = 0; p < phis.size(); ++p)
      if (!k.is_zero(c[p])) phi = add(k, phi, scale(k, c[p], phis[p]));
    Mat<F> f = mul(k, phi, *eps_plus);
    for (std::size_t g : m.alg->generators)
      SYZ_CHECK(mul(k, n.act[g], f) == mul(k, f, m.act[g]),
                "computed hom does not intertwine the action");
    out.push_back(std::move(f));
  }
  return out;
}

// direct intertwiner solve, kept as an independent oracle for testing
template <ExactField F>
std::vector<Mat<F>> hom_basis_naive(const Module<F>& m, const Module<F>& n) {
  const F& k = m.alg->k;
  if (m.dim == 0 || n.dim == 0) return {};
  std::size_t unknowns = n.dim * m.dim;
  Mat<F> sys(m.alg->generators.size() * unknowns, unknowns, k.zero());
  std::size_t row = 0;
  for (std::size_t g : m.alg->generators) {
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) {
        for (std::size_t s = 0; s < n.dim; ++s)
          sys.at(row, s * m.dim + j) = k.add(sys.at(row, s * m.dim + j),
                                             n.act[g].at(i, s));
        for (std::size_t t = 0; t < m.dim; ++t)
          sys.at(row, i * m.dim + t) = k.sub(sys.at(row, i * m.dim + t),
                                             m.act[g].at(t, j));
        ++row;
      }
  }
  std::vector<Mat<F>> out;
  for (const auto& v : kernel_basis(k, sys)) {
    Mat<F> f(n.dim, m.dim, k.zero());
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t j = 0; j < m.dim; ++j) f.at(i, j) = v[i * m.dim + j];
    out.push_back(std::move(f));
  }
  return out;
}

struct IsoConfig {
  unsigned trials = 64;
  std::uint64_t seed = 0;
};

template <ExactField F>
struct Iso {
  enum class V { yes, no, unknown };
  V verdict = V::unknown;
  std::optional<Mat<F>> witness;
  std::string reason;
};

template <ExactField F>
bool is_iso_witness(const Module<F>& m, const Module<F>& n, const Mat<F>& w) {
  const F& k = m.alg->k;
  if (w.rows != n.dim || w.cols != m.dim || m.dim != n.dim) return false;
  if (rank(k, w) != m.dim) return false;
  for (std::size_t g : m.alg->generators)
    if (!(mul(k, n.act[g], w) == mul(k, w, m.act[g]))) return false;
  return true;
}

template <ExactField F>
Iso<F> is_isomorphic(const Module<F>& m, const Module<F>& n,
                     const IsoConfig& cfg = {}) {
  const F& k = m.alg->k;
  Iso<F> r;
  if (m.dim != n.dim) {
    r.verdict = Iso<F>::V::no;
    r.reason = "dimension mismatch";
    return r;
  }
  if (dimension_vector(m) != dimension_vector(n)) {
    r.verdict = Iso<F>::V::no;
    r.reason = "dimension vector mismatch";
    return r;
  }
  if (m.dim == 0) {
    r.verdict = Iso<F>::V::yes;
    r.witness = Mat<F>(0, 0, k.zero());
    return r;
  }
  auto H = hom_basis(m, n);
  std::size_t emm = hom_basis(m, m).size();
  std::size_t enn = hom_basis(n, n).size();
  std::size_t hnm = hom_basis(n, m).size();
  if (H.size() != emm || H.size() != enn || hnm != emm) {
    r.verdict = Iso<F>::V::no;
    r.reason = "hom space dimensions distinguish the modules";
    return r;
  }

  auto accept = [&](const Mat<F>& w) -> bool {
    if (!is_iso_witness(m, n, w)) return false;
    r.verdict = Iso<F>::V::yes;
    r.witness = w;
    return true;
  };
  for (const auto& h : H)
    if (accept(h)) return r;
  Mat<F> total(n.dim, m.dim, k.zero());
  for (const auto& h : H) total = add(k, total, h);
  if (accept(total)) return r;

  std::mt19937_64 gen(cfg.seed);
  for (unsigned t = 0; t < cfg.trials; ++t) {
    Mat<F> w(n.dim, m.dim, k.zero());
    for (const auto& h : H) {
      long c;
      if constexpr (std::is_same_v<F, Rationals>) {
        c = static_cast<long>(gen() % 7) - 3;
      } else {
        c = static_cast<long>(gen() % static_cast<std::uint64_t>(k.p));
      }
      if (c != 0) w = add(k, w, scale(k, k.from_int(c), h));
    }
    if (accept(w)) return r;
  }
  r.verdict = Iso<F>::V::unknown;
  r.reason = "no invertible combination found in " + std::to_string(cfg.trials) +
             " trials";
  return r;
}

// split off every projective direct summand, deterministically: a copy of
// P_i splits iff some pair from Hom(P_i, M) x Hom(M, P_i) composes to an
// automorphism (End P_i is local, so single pairs suffice)
template <ExactField F>
struct Strip {
  Module<F> core;
  std::vector<std::size_t> proj_mult;  // per idempotent slot
};

template <ExactField F>
Strip<F> strip_projective_summands(const Module<F>& m) {
  const F& k = m.alg->k;
  Strip<F> st;
  st.core = m;
  st.proj_mult.assign(m.alg->n_idem, 0);
  bool found = true;
  while (found && st.core.dim > 0) {
    found = false;
    for (std::size_t i = 0; i < m.alg->n_idem && !found; ++i) {
      Module<F> Pi = projective(m.alg, i);
      if (Pi.dim > st.core.dim) continue;
      auto Fs = hom_basis(Pi, st.core);
      auto Gs = hom_basis(st.core, Pi);
      for (const auto& g : Gs) {
        for (const auto& f : Fs) {
          Mat<F> u = mul(k, g, f);
          auto uinv = inverse(k, u);
          if (!uinv) continue;
          Mat<F> theta = mul(k, f, mul(k, *uinv, g));
          Mat<F> U = detail::cols_to_mat(k, kernel_basis(k, theta), st.core.dim);
          st.core = restrict_to_submodule(st.core, U, st.core.name);
          st.proj_mult[i]++;
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }
  return st;
}

// replay the module axioms; meant for tests and self checks
template <ExactField F>
void verify_module(const Module<F>& m) {
  const F& k = m.alg->k;
  SYZ_CHECK(m.act.size() == m.alg->dim(), "one action matrix per basis element");
  for (const auto& a : m.act)
    SYZ_CHECK(a.rows == m.dim && a.cols == m.dim, "action matrix shape");
  Mat<F> idsum(m.dim, m.dim, k.zero());
  for (std::size_t i = 0; i < m.alg->n_idem; ++i) idsum = add(k, idsum, m.act[i]);
  SYZ_CHECK(idsum == identity(k, m.dim), "identity must act as identity");
  for (std::size_t x = 0; x < m.alg->dim(); ++x)
    for (std::size_t y = 0; y < m.alg->dim(); ++y) {
      Mat<F> lhs = mul(k, m.act[x], m.act[y]);
      Mat<F> rhs(m.dim, m.dim, k.zero());
      for (const auto& t : m.alg->table[x][y])
        rhs = add(k, rhs, scale(k, t.c, m.act[t.idx]));
      SYZ_CHECK(lhs == rhs, "action does not respect multiplication");
    }
  std::size_t total = 0;
  for (auto d : dimension_vector(m)) total += d;
  SYZ_CHECK(total == m.dim, "idempotent pieces must fill the module");
}

}  // namespace syz

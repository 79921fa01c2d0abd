#pragma once

// Minimal projective resolutions and everything read off from them:
// projective dimension, periodicity detection, periodic dimension,
// Ext dimensions, Gorenstein projective dimension, injective dimension
// of the regular module.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "syz/modcat.hpp"

namespace syz {

// natural number extended by -infinity (zero module), infinity (certified
// by a syzygy repeat), and "unknown beyond a cutoff"
struct ExtNat {
  enum class Kind { minus_infinite, finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::size_t value = 0;  // finite: the value; unknown: the exhausted cutoff

  static ExtNat fin(std::size_t v) { return {Kind::finite, v}; }
  static ExtNat inf() { return {Kind::infinite, 0}; }
  static ExtNat neg_inf() { return {Kind::minus_infinite, 0}; }
  static ExtNat beyond(std::size_t cutoff) { return {Kind::unknown, cutoff}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool operator==(const ExtNat&) const = default;

  std::string to_str() const {
    switch (kind) {
      case Kind::minus_infinite: return "-infinity";
      case Kind::finite: return std::to_string(value);
      case Kind::infinite: return "infinity";
      default: return "unknown beyond " + std::to_string(value);
    }
  }
};

struct HomologyConfig {
  std::size_t cutoff = 40;      // syzygy steps explored
  IsoConfig iso{};              // isomorphism search budget
  std::size_t dim_guard = 4096; // stop resolving when a syzygy outgrows this
};

template <ExactField F>
struct ResolutionTrace {
  std::vector<Module<F>> syzygies;             // indices 0..last computed
  std::vector<Cover<F>> covers;                // covers[t] covers syzygies[t]
  std::vector<std::vector<std::size_t>> mult;  // per-step cover multiplicities
  std::optional<std::size_t> terminated_at;    // first t with syzygies[t] = 0
  bool guard_hit = false;                      // resolution stopped by dim_guard
};

template <ExactField F>
ResolutionTrace<F> minimal_resolution(const Module<F>& m, std::size_t cutoff,
                                      std::size_t dim_guard = 4096) {
  ResolutionTrace<F> tr;
  tr.syzygies.push_back(m);
  for (std::size_t t = 0;; ++t) {
    if (tr.syzygies[t].dim == 0) {
      tr.terminated_at = t;
      return tr;
    }
    if (t == cutoff) return tr;
    if (tr.syzygies[t].dim > dim_guard) {
      tr.guard_hit = true;
      return tr;
    }
    auto cv = projective_cover(tr.syzygies[t]);
    std::vector<std::size_t> row(m.alg->n_idem, 0);
    for (auto c : cv.copies) ++row[c];
    auto next = cv.ker;
    next.name = "syz^" + std::to_string(t + 1) + "(" + m.name + ")";
    tr.mult.push_back(std::move(row));
    tr.covers.push_back(std::move(cv));
    tr.syzygies.push_back(std::move(next));
  }
}

template <ExactField F>
struct PeriodicityReport {
  enum class Verdict { eventually_periodic, finite_proj_dim, unknown_beyond };
  Verdict verdict = Verdict::unknown_beyond;
  std::size_t n = 0;  // degree of the first periodic syzygy
  std::size_t p = 0;  // its period
  ExtNat proj_dim;
  ExtNat per_dim;
  std::size_t cutoff = 0;
  std::optional<Mat<F>> witness;        // syzygy n+p -> syzygy n
  std::size_t certified_no_pairs = 0;   // minimality evidence
  bool minimality_blocked = false;      // an undecided pair precedes the hit
  std::vector<std::string> notes;
  ResolutionTrace<F> trace;
};

// Scans candidate pairs (n, p) in lexicographic order, so the first
// certified hit is the periodic dimension and the period of that syzygy.
// A zero syzygy short-circuits: finite projective dimension d gives
// periodic dimension d + 1 with period 1.
template <ExactField F>
PeriodicityReport<F> periodicity_report(const Module<F>& m,
                                        const HomologyConfig& cfg = {}) {
  PeriodicityReport<F> rep;
  rep.cutoff = cfg.cutoff;
  rep.trace = minimal_resolution(m, cfg.cutoff, cfg.dim_guard);
  const auto& syz = rep.trace.syzygies;

  if (m.dim == 0) {
    rep.verdict = PeriodicityReport<F>::Verdict::finite_proj_dim;
    rep.proj_dim = ExtNat::neg_inf();
    rep.per_dim = ExtNat::fin(0);
    rep.n = 0;
    rep.p = 1;
    rep.notes.push_back("zero module");
    return rep;
  }
  if (rep.trace.terminated_at) {
    std::size_t t = *rep.trace.terminated_at;
    rep.verdict = PeriodicityReport<F>::Verdict::finite_proj_dim;
    rep.proj_dim = ExtNat::fin(t - 1);
    rep.per_dim = ExtNat::fin(t);
    rep.n = t;  // the zero syzygy is trivially periodic
    rep.p = 1;
    return rep;
  }

  std::size_t last = syz.size() - 1;
  if (rep.trace.guard_hit)
    rep.notes.push_back("resolution truncated at step " + std::to_string(last) +
                        " by the dimension guard");

  std::vector<std::vector<std::size_t>> dv(syz.size());
  for (std::size_t t = 0; t < syz.size(); ++t) dv[t] = dimension_vector(syz[t]);

  for (std::size_t n = 0; n + 1 <= last; ++n) {
    for (std::size_t p = 1; n + p <= last; ++p) {
      if (syz[n].dim != syz[n + p].dim || dv[n] != dv[n + p]) {
        ++rep.certified_no_pairs;
        continue;
      }
      auto iso = is_isomorphic(syz[n], syz[n + p], cfg.iso);
      if (iso.verdict == Iso<F>::V::yes) {
        rep.proj_dim = ExtNat::inf();  // nonzero syzygies repeat forever
        if (rep.minimality_blocked) {
          rep.verdict = PeriodicityReport<F>::Verdict::unknown_beyond;
          rep.per_dim = ExtNat::beyond(cfg.cutoff);
          rep.notes.push_back(
              "candidate pair (" + std::to_string(n) + ", " + std::to_string(p) +
              ") verified, but a smaller pair was left undecided");
          return rep;
        }
        rep.verdict = PeriodicityReport<F>::Verdict::eventually_periodic;
        rep.n = n;
        rep.p = p;
        rep.witness = iso.witness;
        rep.per_dim = ExtNat::fin(n);
        return rep;
      }
      if (iso.verdict == Iso<F>::V::no) {
        ++rep.certified_no_pairs;
      } else {
        rep.minimality_blocked = true;
        rep.notes.push_back("undecided comparison of syzygies " +
                            std::to_string(n) + " and " + std::to_string(n + p));
      }
    }
  }
  rep.verdict = PeriodicityReport<F>::Verdict::unknown_beyond;
  rep.proj_dim = ExtNat::beyond(last);
  rep.per_dim = ExtNat::beyond(last);
  return rep;
}

template <ExactField F>
ExtNat proj_dim(const Module<F>& m, const HomologyConfig& cfg = {}) {
  return periodicity_report(m, cfg).proj_dim;
}

template <ExactField F>
ExtNat per_dim(const Module<F>& m, const HomologyConfig& cfg = {}) {
  return periodicity_report(m, cfg).per_dim;
}

// dimensions of the cohomology of Hom(P_*, n) for a precomputed trace of m;
// the trace must either terminate or reach one step past max_i, otherwise
// the outgoing rank at the top degree would be unknowable
template <ExactField F>
std::vector<std::size_t> ext_dims_from_trace(const ResolutionTrace<F>& tr,
                                             const Module<F>& n,
                                             std::size_t max_i) {
  const F& k = n.alg->k;
  std::size_t steps = tr.covers.size();  // projectives P_0..P_{steps-1}
  SYZ_CHECK(tr.terminated_at || steps >= max_i + 2,
            "resolution trace too shallow for the requested ext range");

  // hom space bases at each degree
  std::vector<std::vector<Mat<F>>> C(max_i + 2);
  for (std::size_t i = 0; i <= max_i + 1 && i < steps; ++i)
    C[i] = hom_basis(tr.covers[i].proj, n);

  // rank of the induced map C[i-1] -> C[i]
  auto rank_d = [&](std::size_t i) -> std::size_t {
    if (i == 0 || i >= steps) return 0;
    if (C[i - 1].empty() || C[i].empty()) return 0;
    const auto& Pprev = tr.covers[i - 1].proj;
    const auto& Pi = tr.covers[i].proj;
    Mat<F> D = mul(k, tr.covers[i - 1].incl, tr.covers[i].epi);  // P_i -> P_{i-1}
    Mat<F> basis(n.dim * Pi.dim, C[i].size(), k.zero());
    for (std::size_t b = 0; b < C[i].size(); ++b)
      for (std::size_t r = 0; r < n.dim; ++r)
        for (std::size_t c = 0; c < Pi.dim; ++c)
          basis.at(r * Pi.dim + c, b) = C[i][b].at(r, c);
    Mat<F> images(n.dim * Pi.dim, C[i - 1].size(), k.zero());
    for (std::size_t b = 0; b < C[i - 1].size(); ++b) {
      Mat<F> img = mul(k, C[i - 1][b], D);
      for (std::size_t r = 0; r < n.dim; ++r)
        for (std::size_t c = 0; c < Pi.dim; ++c)
          images.at(r * Pi.dim + c, b) = img.at(r, c);
    }
    auto coords = solve_matrix(k, basis, images);
    SYZ_CHECK(coords.has_value(),
              "composed hom does not lie in the computed hom space");
    (void)Pprev;
    return rank(k, *coords);
  };

  std::vector<std::size_t> out(max_i + 1, 0);
  for (std::size_t i = 0; i <= max_i; ++i) {
    if (i >= steps) {
      out[i] = 0;  // resolution already terminated
      continue;
    }
    std::size_t dim_ci = C[i].size();
    out[i] = dim_ci - rank_d(i) - rank_d(i + 1);
  }
  return out;
}

template <ExactField F>
std::vector<std::size_t> ext_dims(const Module<F>& m, const Module<F>& n,
                                  std::size_t max_i) {
  SYZ_CHECK(same_algebra(*m.alg, *n.alg), "ext of modules over different algebras");
  if (m.dim == 0 || n.dim == 0) return std::vector<std::size_t>(max_i + 1, 0);
  auto tr = minimal_resolution(m, max_i + 2);
  return ext_dims_from_trace(tr, n, max_i);
}

// why the Gorenstein projective dimension is known to be finite
struct GpdCertificate {
  enum class Kind { gorenstein, finite_proj_dim, assumed, none };
  Kind kind = Kind::none;
  std::size_t d = 0;  // gorenstein: the common injective dimension
};

template <ExactField F>
struct GpdReport {
  ExtNat value;
  std::string method;  // route that produced value
  std::optional<std::size_t> shift_value;  // syzygy-shift route
  std::optional<std::size_t> ext_value;    // ext-vanishing route
  std::optional<std::size_t> pd_value;     // equals proj.dim when that is finite
  GpdCertificate cert;
  PeriodicityReport<F> periodicity;
  std::vector<std::string> notes;
};

// Two independent routes to Gpd, cross-checked:
//   syzygy_shift: with first periodic syzygy at (n, p), Gpd is n-1 exactly
//     when the non-projective part of syzygy n-1 recurs at n+p-1, else n.
//   ext_vanishing: largest i <= n with Ext^i(m, algebra) nonzero; sound only
//     under a finiteness certificate.
template <ExactField F>
GpdReport<F> gpd_report(const Module<F>& m, const HomologyConfig& cfg = {},
                        GpdCertificate cert = {}) {
  GpdReport<F> rep;
  rep.periodicity = periodicity_report(m, cfg);
  const auto& per = rep.periodicity;

  if (m.dim == 0) {
    rep.value = ExtNat::neg_inf();
    rep.method = "zero_module";
    rep.cert = cert;
    return rep;
  }
  if (per.verdict == PeriodicityReport<F>::Verdict::unknown_beyond) {
    rep.value = ExtNat::beyond(cfg.cutoff);
    rep.method = "none";
    rep.cert = cert;
    rep.notes.push_back("periodicity undecided within the cutoff");
    return rep;
  }

  bool fin_pd = per.verdict == PeriodicityReport<F>::Verdict::finite_proj_dim;
  if (fin_pd && cert.kind == GpdCertificate::Kind::none) {
    cert.kind = GpdCertificate::Kind::finite_proj_dim;
    cert.d = per.proj_dim.value;
  }
  rep.cert = cert;
  std::size_t n = per.n, p = per.p;  // finite pd d gives (d + 1, 1)

  // syzygy-shift route
  if (n == 0) {
    rep.shift_value = 0;
  } else {
    auto st = strip_projective_summands(per.trace.syzygies[n - 1]);
    auto iso = is_isomorphic(st.core, per.trace.syzygies[n + p - 1], cfg.iso);
    if (iso.verdict == Iso<F>::V::yes)
      rep.shift_value = n - 1;
    else if (iso.verdict == Iso<F>::V::no)
      rep.shift_value = n;
    else
      rep.notes.push_back("syzygy-shift comparison undecided");
  }

  // ext-vanishing route, only under a finiteness certificate
  if (cert.kind != GpdCertificate::Kind::none) {
    auto ext = ext_dims(m, regular(m.alg), n);
    std::size_t r = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (ext[i] != 0) r = i;
    rep.ext_value = r;
  } else {
    rep.notes.push_back("Gpd finiteness not certified; ext-vanishing route not run");
  }

  if (fin_pd) rep.pd_value = per.proj_dim.value;

  std::optional<std::size_t> agreed;
  auto take = [&](std::optional<std::size_t> v, const char* name) {
    if (!v) return;
    if (agreed && *agreed != *v)
      throw InvariantViolation(std::string("Gpd routes disagree: ") + name +
                               " gives " + std::to_string(*v) + " against " +
                               std::to_string(*agreed));
    if (!agreed) {
      agreed = v;
      rep.method = name;
    }
  };
  take(rep.shift_value, "syzygy_shift");
  take(rep.ext_value, "ext_vanishing");
  take(rep.pd_value, "proj_dim_equal");

  if (!agreed) {
    rep.value = ExtNat::beyond(cfg.cutoff);
    rep.method = "none";
    return rep;
  }
  if (cert.kind == GpdCertificate::Kind::none) {
    // the routes presuppose finiteness, so without a certificate the
    // agreed number is only a conditional diagnostic
    rep.value = ExtNat::beyond(cfg.cutoff);
    rep.method = "uncertified";
    rep.notes.push_back("Gpd finiteness not certified");
    return rep;
  }
  rep.value = ExtNat::fin(*agreed);
  // finite Gpd r and first periodic syzygy n always satisfy r <= n <= r + 1
  SYZ_CHECK(*agreed <= n && n <= *agreed + 1,
            "Gpd and periodic dimension violate the sandwich bound");
  return rep;
}

// injective dimension of the regular module on both sides, via projective
// dimension of the dual of the regular module over the opposite algebra
template <ExactField F>
std::pair<ExtNat, ExtNat> inj_dim_regular(const AlgPtr<F>& a,
                                          const HomologyConfig& cfg = {}) {
  auto op = opposite(a);
  ExtNat left = proj_dim(dual(regular(a)), cfg);    // inj.dim of the left regular
  ExtNat right = proj_dim(dual(regular(op)), cfg);  // inj.dim of the right regular
  if (left.is_finite() && right.is_finite())
    SYZ_CHECK(left.value == right.value,
              "one-sided injective dimensions of the regular module differ");
  return {left, right};
}

struct Tribool {
  enum class V { yes, no, unknown };
  V verdict = V::unknown;
  std::vector<std::string> notes;
};

// p-strongly Gorenstein projective test: the non-projective part must recur
// after p syzygy steps and Ext^i(m, algebra) must vanish for 1 <= i <= p
template <ExactField F>
Tribool strongly_gp_check(const Module<F>& m, std::size_t p,
                          const HomologyConfig& cfg = {}) {
  SYZ_CHECK(p >= 1, "period must be positive");
  Tribool out;
  auto ext = ext_dims(m, regular(m.alg), p);
  for (std::size_t i = 1; i <= p; ++i)
    if (ext[i] != 0) {
      out.verdict = Tribool::V::no;
      out.notes.push_back("ext degree " + std::to_string(i) +
                          " against the regular module is nonzero");
      return out;
    }
  auto X = strip_projective_summands(m).core;
  auto tr = minimal_resolution(X, p, cfg.dim_guard);
  if (tr.syzygies.size() <= p) {
    if (tr.guard_hit) {
      out.verdict = Tribool::V::unknown;
      out.notes.push_back("resolution truncated by the dimension guard");
      return out;
    }
    // terminated early: syzygy p would be zero
    out.verdict = X.dim == 0 ? Tribool::V::yes : Tribool::V::no;
    if (out.verdict == Tribool::V::no)
      out.notes.push_back("syzygy chain dies before returning");
    return out;
  }
  auto Xp = strip_projective_summands(tr.syzygies[p]).core;
  auto iso = is_isomorphic(X, Xp, cfg.iso);
  if (iso.verdict == Iso<F>::V::yes) out.verdict = Tribool::V::yes;
  else if (iso.verdict == Iso<F>::V::no) {
    out.verdict = Tribool::V::no;
    out.notes.push_back("stable module does not recur after " +
                        std::to_string(p) + " steps");
  } else {
    out.verdict = Tribool::V::unknown;
    out.notes.push_back(iso.reason);
  }
  return out;
}

}  // namespace syz

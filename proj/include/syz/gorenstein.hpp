#pragma once

// Algebra-level analyses. Gorenstein detection through the injective
// dimension of the regular module, the bimodule periodic dimension
// (computed on the semisimple quotient over the algebra and its opposite,
// with a size-gated direct resolution over the enveloping algebra as a
// cross-check), global dimension, a battery of structural consistency
// checks, and a Gorenstein projectivity probe for single modules.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "syz/homology.hpp"

namespace syz {

// ---------------------------------------------------------------------------
// Gorenstein detection

// Certified Gorenstein exactly when both one-sided injective dimensions of
// the regular module are finite; they then agree and d is the common value.
template <ExactField F>
struct GorensteinReport {
  bool certified = false;
  std::size_t d = 0;
  ExtNat left;   // injective dimension of the left regular module
  ExtNat right;  // of the right regular module
  bool selfinjective = false;
  std::size_t cutoff = 0;
  std::vector<std::string> notes;

  std::string verdict() const {
    return certified ? "gorenstein(" + std::to_string(d) + ")"
                     : "not_certified_within(" + std::to_string(cutoff) + ")";
  }
};

template <ExactField F>
GorensteinReport<F> gorenstein_report(const AlgPtr<F>& a,
                                      const HomologyConfig& cfg = {}) {
  GorensteinReport<F> rep;
  rep.cutoff = cfg.cutoff;
  auto [l, r] = inj_dim_regular(a, cfg);  // agreement checked inside
  rep.left = l;
  rep.right = r;
  if (l.is_finite() && r.is_finite()) {
    rep.certified = true;
    rep.d = l.value;
    rep.selfinjective = rep.d == 0;
  } else if (l.kind == ExtNat::Kind::infinite ||
             r.kind == ExtNat::Kind::infinite) {
    rep.notes.push_back(
        "a one-sided injective dimension is certified infinite; the algebra "
        "is not Gorenstein");
  } else {
    rep.notes.push_back("injective dimensions undecided within the cutoff");
  }
  return rep;
}

// maximum projective dimension over the simples
template <ExactField F>
ExtNat gl_dim(const AlgPtr<F>& a, const HomologyConfig& cfg = {}) {
  bool undecided = false;
  std::size_t best = 0;
  for (std::size_t i = 0; i < a->n_idem; ++i) {
    ExtNat d = proj_dim(simple(a, i), cfg);
    if (d.kind == ExtNat::Kind::infinite) return ExtNat::inf();
    if (d.is_finite())
      best = std::max(best, d.value);
    else
      undecided = true;
  }
  return undecided ? ExtNat::beyond(cfg.cutoff) : ExtNat::fin(best);
}

// underlying-graph connectivity of the quiver; generators of positive
// length join their endpoint idempotents
template <ExactField F>
bool quiver_connected(const AlgPtr<F>& a) {
  if (a->n_idem <= 1) return true;
  std::vector<std::size_t> parent(a->n_idem);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto b : a->radical) {
    std::size_t u = find(a->basis[b].src), v = find(a->basis[b].tgt);
    if (u != v) parent[u] = v;
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++roots;
  return roots == 1;
}

template <ExactField F>
Module<F> semisimple_quotient(const AlgPtr<F>& a) {
  std::vector<Module<F>> parts;
  for (std::size_t i = 0; i < a->n_idem; ++i) parts.push_back(simple(a, i));
  auto m = direct_sum(parts, a);
  m.name = "A/J";
  return m;
}

// ---------------------------------------------------------------------------
// bimodule periodic dimension

struct PerSimpleRow {
  std::size_t slot = 0;
  std::string name;
  ExtNat proj_dim;
  ExtNat per_dim;
  std::size_t period = 0;  // 0 when the tail is undecided
};

template <ExactField F>
struct BimodulePerDimReport {
  ExtNat value;
  std::string route;  // "reduction", "direct_enveloping", "both", "none"
  bool value_identified = false;  // value is the bimodule invariant outright,
                                  // not conditional on eventual periodicity
  std::vector<PerSimpleRow> left_table, right_table;
  ExtNat reduction_left;   // periodic dimension of A/J over the algebra
  ExtNat reduction_right;  // and over its opposite
  std::size_t reduction_period = 0;
  GorensteinReport<F> gorenstein;
  bool sandwich_ok = false;  // d <= value <= d+1 checked
  bool direct_ran = false;
  ExtNat direct_value;
  std::size_t direct_period = 0;
  ExtNat bimodule_proj_dim;  // projective dimension seen by the direct route
  bool bimodule_gpd_ran = false;
  ExtNat bimodule_gpd;  // Gpd of the bimodule over the enveloping algebra
  std::size_t cutoff = 0;
  std::vector<std::string> notes;
  PeriodicityReport<F> left_report, right_report;
  std::optional<PeriodicityReport<F>> direct_report;
};

// The periodic dimension of the algebra as a bimodule over its enveloping
// algebra. Reduction route: the invariant transfers to the periodic
// dimension of the semisimple quotient on either side, valid under a
// Gorenstein certificate since the semisimple quotient is separable here.
// Direct route: resolve the bimodule itself, gated by base dimension.
// When both run their values must agree; when only the reduction runs
// without a Gorenstein certificate the identification is not certified and
// the value stays unknown.
template <ExactField F>
BimodulePerDimReport<F> bimodule_per_dim(const AlgPtr<F>& a,
                                         const HomologyConfig& cfg = {},
                                         std::size_t direct_gate = 8) {
  using Verdict = PeriodicityReport<F>::Verdict;
  BimodulePerDimReport<F> rep;
  rep.cutoff = cfg.cutoff;
  rep.gorenstein = gorenstein_report(a, cfg);

  auto op = opposite(a);
  rep.left_report = periodicity_report(semisimple_quotient(a), cfg);
  rep.right_report = periodicity_report(semisimple_quotient(op), cfg);
  rep.reduction_left = rep.left_report.per_dim;
  rep.reduction_right = rep.right_report.per_dim;
  if (rep.left_report.verdict != Verdict::unknown_beyond)
    rep.reduction_period = rep.left_report.p;

  auto row_of = [&](const AlgPtr<F>& alg, std::size_t i) {
    auto r = periodicity_report(simple(alg, i), cfg);
    PerSimpleRow row;
    row.slot = i;
    row.name = "S" + alg->idem_names[i];
    row.proj_dim = r.proj_dim;
    row.per_dim = r.per_dim;
    if (r.verdict != Verdict::unknown_beyond) row.period = r.p;
    return row;
  };
  for (std::size_t i = 0; i < a->n_idem; ++i)
    rep.left_table.push_back(row_of(a, i));
  for (std::size_t i = 0; i < op->n_idem; ++i)
    rep.right_table.push_back(row_of(op, i));

  if (rep.gorenstein.certified) {
    if (rep.reduction_left.is_finite() && rep.reduction_right.is_finite())
      SYZ_CHECK(rep.reduction_left == rep.reduction_right,
                "left and right periodic dimensions of the semisimple "
                "quotient differ");
    // finite Gpd of the sum makes the quotient's periodic dimension the
    // maximum over the simples
    bool rows_decided = true;
    std::size_t mx = 0;
    for (const auto& row : rep.left_table) {
      if (!row.per_dim.is_finite()) rows_decided = false;
      else mx = std::max(mx, row.per_dim.value);
    }
    if (rows_decided && rep.reduction_left.is_finite())
      SYZ_CHECK(mx == rep.reduction_left.value,
                "periodic dimension of the semisimple quotient is not the "
                "maximum over the simples");
  }

  if (a->dim() <= direct_gate) {
    auto bim = regular_bimodule(a, direct_gate);
    rep.direct_report = periodicity_report(bim, cfg);
    rep.direct_ran = true;
    rep.direct_value = rep.direct_report->per_dim;
    rep.bimodule_proj_dim = rep.direct_report->proj_dim;
    if (rep.direct_report->verdict != Verdict::unknown_beyond)
      rep.direct_period = rep.direct_report->p;

    if (rep.gorenstein.certified) {
      // Gorenstein dimension of the bimodule equals the one-sided injective
      // dimension; checked when the enveloping algebra itself certifies
      auto env_rep = gorenstein_report(bim.alg, cfg);
      if (env_rep.certified &&
          rep.direct_report->verdict != Verdict::unknown_beyond) {
        GpdCertificate cert{GpdCertificate::Kind::gorenstein, env_rep.d};
        auto gpd = gpd_report(bim, cfg, cert);
        rep.bimodule_gpd = gpd.value;
        rep.bimodule_gpd_ran = true;
        SYZ_CHECK(gpd.value == ExtNat::fin(rep.gorenstein.d),
                  "Gorenstein dimension of the bimodule differs from the "
                  "injective dimension of the regular module");
      } else {
        rep.notes.push_back(
            "bimodule Gorenstein dimension not cross-checked: enveloping "
            "algebra not certified within the cutoff");
      }
    }
  } else {
    rep.notes.push_back("direct route skipped: base dimension " +
                        std::to_string(a->dim()) + " exceeds the gate " +
                        std::to_string(direct_gate));
  }

  bool red_ok = rep.gorenstein.certified && rep.reduction_left.is_finite();
  bool dir_ok = rep.direct_ran && rep.direct_value.is_finite();
  if (red_ok && dir_ok) {
    SYZ_CHECK(rep.reduction_left == rep.direct_value,
              "reduction and direct routes disagree on the bimodule "
              "periodic dimension");
    rep.value = rep.direct_value;
    rep.route = "both";
    rep.value_identified = true;
  } else if (red_ok) {
    rep.value = rep.reduction_left;
    rep.route = "reduction";
    // monomial Gorenstein algebras are known to have eventually periodic
    // bimodules, which closes the identification; otherwise the value is
    // conditional on that hypothesis
    if (a->prov == Algebra<F>::Prov::bound_quiver && a->spec.all_monomial()) {
      rep.value_identified = true;
      rep.notes.push_back(
          "monomial Gorenstein algebra: the reduction value is the bimodule "
          "invariant");
    } else {
      rep.notes.push_back(
          "reduction value equals the bimodule invariant provided the "
          "bimodule is eventually periodic");
    }
  } else if (dir_ok) {
    rep.value = rep.direct_value;
    rep.route = "direct_enveloping";
    rep.value_identified = true;
  } else {
    rep.value = ExtNat::beyond(cfg.cutoff);
    rep.route = "none";
    if (!rep.gorenstein.certified && !rep.direct_ran)
      rep.notes.push_back(
          "requires Gorenstein certificate: the reduction value is not "
          "identified with the bimodule invariant and the direct route is "
          "size-blocked");
    else
      rep.notes.push_back("undecided within the cutoff");
  }

  if (rep.gorenstein.certified && rep.value.is_finite()) {
    SYZ_CHECK(rep.gorenstein.d <= rep.value.value &&
                  rep.value.value <= rep.gorenstein.d + 1,
              "bimodule periodic dimension escapes [d, d+1]");
    rep.sandwich_ok = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// structural consistency checks

enum class CheckStatus { holds, violated, unknown, not_applicable };

inline std::string check_status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::unknown: return "unknown";
    default: return "not_applicable";
  }
}

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::unknown;
  std::string detail;
};

template <ExactField F>
struct ConjectureReport {
  std::vector<CheckItem> items;
  std::size_t cutoff = 0;
  BimodulePerDimReport<F> bimodule;  // shared evidence for the items
};

// Five independent consistency checks. Violations are reported, never
// thrown: each one would falsify a structural expectation, and the caller
// decides what to do with that.
template <ExactField F>
ConjectureReport<F> conjecture_checks(const AlgPtr<F>& a,
                                      const HomologyConfig& cfg = {},
                                      std::size_t direct_gate = 8) {
  ConjectureReport<F> rep;
  rep.cutoff = cfg.cutoff;
  rep.bimodule = bimodule_per_dim(a, cfg, direct_gate);
  const auto& bim = rep.bimodule;

  // bimodule periodic dimension, when some route certified it
  bool bim_decided = bim.route != "none";
  bool bim_ev_periodic = bim_decided && bim.value.is_finite();

  {  // monomial algebras: eventually periodic iff every simple is
    CheckItem it;
    it.name = "monomial_eventual_periodicity";
    bool monomial = a->prov == Algebra<F>::Prov::bound_quiver &&
                    a->spec.all_monomial();
    if (!monomial) {
      it.status = CheckStatus::not_applicable;
      it.detail = "algebra is not monomial";
    } else {
      bool simples_ev = true;
      for (const auto& row : bim.left_table)
        if (!row.per_dim.is_finite()) simples_ev = false;
      // failure of eventual periodicity is never certified, only left
      // undecided, so the equivalence can be confirmed but not refuted
      if (simples_ev && bim_ev_periodic) {
        it.status = CheckStatus::holds;
        it.detail = "all simples and the bimodule are eventually periodic";
      } else {
        it.status = CheckStatus::unknown;
        it.detail = std::string("simples side ") +
                    (simples_ev ? "certified" : "undecided") +
                    "; bimodule side " +
                    (bim_ev_periodic ? "certified" : "undecided");
      }
    }
    rep.items.push_back(std::move(it));
  }

  {  // finite projective dimensions stay below the periodicity index
    CheckItem it;
    it.name = "finitistic_bound";
    if (!bim_ev_periodic) {
      it.status = CheckStatus::not_applicable;
      it.detail = "no certified eventual periodicity index";
    } else {
      // syzygies of the simples only shrink projective dimension, so the
      // simples themselves carry the whole evidence set
      std::size_t n = bim.value.value;
      bool undecided = false;
      std::optional<std::size_t> offender;
      for (const auto& row : bim.left_table) {
        if (row.proj_dim.kind == ExtNat::Kind::unknown) undecided = true;
        if (row.proj_dim.is_finite() && row.proj_dim.value > n)
          offender = row.slot;
      }
      if (offender) {
        it.status = CheckStatus::violated;
        it.detail = "simple in slot " + std::to_string(*offender) +
                    " has finite projective dimension above " +
                    std::to_string(n);
      } else if (undecided) {
        it.status = CheckStatus::unknown;
        it.detail = "a projective dimension is undecided within the cutoff";
      } else {
        it.status = CheckStatus::holds;
        it.detail = "all finite projective dimensions are at most " +
                    std::to_string(n);
      }
    }
    rep.items.push_back(std::move(it));
  }

  {  // connected + all simples periodic forces a periodic bimodule
    CheckItem it;
    it.name = "periodicity_conjecture_instance";
    bool connected = quiver_connected(a);
    bool rows_decided = true, all_periodic = true;
    for (const auto& row : bim.left_table) {
      if (row.per_dim.kind == ExtNat::Kind::unknown) rows_decided = false;
      all_periodic = all_periodic && row.per_dim == ExtNat::fin(0);
    }
    if (!connected) {
      it.status = CheckStatus::not_applicable;
      it.detail = "quiver is not connected";
    } else if (!rows_decided) {
      it.status = CheckStatus::unknown;
      it.detail = "a simple's periodicity is undecided within the cutoff";
    } else if (!bim_decided) {
      it.status =
          all_periodic ? CheckStatus::unknown : CheckStatus::not_applicable;
      it.detail = all_periodic
                      ? "all simples periodic but the bimodule side is "
                        "undecided within the cutoff"
                      : "not all simples are periodic";
    } else {
      // both directions of the equivalence are visible here
      bool bim_periodic = bim.value == ExtNat::fin(0);
      it.status = all_periodic == bim_periodic ? CheckStatus::holds
                                               : CheckStatus::violated;
      it.detail = std::string("all simples periodic: ") +
                  (all_periodic ? "yes" : "no") + "; bimodule periodic: " +
                  (bim_periodic ? "yes" : "no");
    }
    rep.items.push_back(std::move(it));
  }

  {  // one-sided injective dimension finiteness is symmetric
    CheckItem it;
    it.name = "injective_dimension_symmetry";
    const auto& g = bim.gorenstein;
    auto fin = [](const ExtNat& x) { return x.is_finite(); };
    auto inf = [](const ExtNat& x) {
      return x.kind == ExtNat::Kind::infinite;
    };
    if (fin(g.left) && fin(g.right)) {
      it.status = CheckStatus::holds;
      it.detail = "both sides finite and equal to " + std::to_string(g.d);
    } else if (inf(g.left) && inf(g.right)) {
      it.status = CheckStatus::holds;
      it.detail = "both sides certified infinite";
    } else if ((fin(g.left) && inf(g.right)) ||
               (inf(g.left) && fin(g.right))) {
      it.status = CheckStatus::violated;
      it.detail = "one side finite, the other certified infinite";
    } else {
      it.status = CheckStatus::unknown;
      it.detail = "left " + g.left.to_str() + ", right " + g.right.to_str();
    }
    rep.items.push_back(std::move(it));
  }

  {  // finite bimodule projective dimension d forces gorenstein(d) and
     // global dimension d
    CheckItem it;
    it.name = "finite_bimodule_proj_dim";
    if (!bim.direct_ran) {
      it.status = CheckStatus::not_applicable;
      it.detail = "direct route did not run";
    } else if (bim.bimodule_proj_dim.kind == ExtNat::Kind::unknown) {
      it.status = CheckStatus::unknown;
      it.detail = "bimodule projective dimension undecided within the cutoff";
    } else if (!bim.bimodule_proj_dim.is_finite()) {
      it.status = CheckStatus::not_applicable;
      it.detail = "bimodule projective dimension is infinite";
    } else {
      std::size_t d = bim.bimodule_proj_dim.value;
      ExtNat gd = gl_dim(a, cfg);
      bool ok = bim.gorenstein.certified && bim.gorenstein.d == d &&
                gd == ExtNat::fin(d);
      if (ok) {
        it.status = CheckStatus::holds;
        it.detail = "bimodule projective dimension, injective dimension and "
                    "global dimension all equal " +
                    std::to_string(d);
      } else if (!bim.gorenstein.certified ||
                 gd.kind == ExtNat::Kind::unknown) {
        it.status = CheckStatus::unknown;
        it.detail = "gorenstein " + bim.gorenstein.verdict() +
                    ", gl.dim " + gd.to_str();
      } else {
        it.status = CheckStatus::violated;
        it.detail = "bimodule projective dimension " + std::to_string(d) +
                    " but gorenstein " + bim.gorenstein.verdict() +
                    ", gl.dim " + gd.to_str();
      }
    }
    rep.items.push_back(std::move(it));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Gorenstein projectivity probe

struct WeakGpProbe {
  enum class V { gp_certified, obstruction, unknown };
  V v = V::unknown;
  std::size_t obstruction_i = 0;  // smallest failing ext degree
  std::vector<std::string> notes;

  std::string to_str() const {
    switch (v) {
      case V::gp_certified: return "gp_certified";
      case V::obstruction:
        return "obstruction(" + std::to_string(obstruction_i) + ")";
      default: return "unknown";
    }
  }
};

// Probe for Gorenstein projectivity of m over an algebra certified
// eventually periodic with index n and period p. A nonzero ext degree
// i <= n against the regular module is a definite obstruction; when ext
// vanishes through n + p the n-th syzygy must recur with period p, and
// that certifies m.
template <ExactField F>
WeakGpProbe weakly_gorenstein_probe(const Module<F>& m, std::size_t n,
                                    std::size_t p,
                                    const HomologyConfig& cfg = {}) {
  WeakGpProbe out;
  if (m.dim == 0) {
    out.v = WeakGpProbe::V::gp_certified;
    out.notes.push_back("zero module");
    return out;
  }
  auto ext = ext_dims(m, regular(m.alg), n + p);
  for (std::size_t i = 1; i <= n; ++i)
    if (ext[i] != 0) {
      out.v = WeakGpProbe::V::obstruction;
      out.obstruction_i = i;
      out.notes.push_back("ext degree " + std::to_string(i) +
                          " against the regular module is nonzero");
      return out;
    }
  for (std::size_t i = n + 1; i <= n + p; ++i)
    if (ext[i] != 0) {
      out.v = WeakGpProbe::V::unknown;
      out.notes.push_back("ext degree " + std::to_string(i) +
                          " is nonzero beyond the periodicity index");
      return out;
    }

  Module<F> x = m;
  if (n > 0) {
    auto tr = minimal_resolution(m, n, cfg.dim_guard);
    if (tr.guard_hit) {
      out.notes.push_back("resolution truncated by the dimension guard");
      return out;
    }
    if (tr.terminated_at && *tr.terminated_at <= n) {
      // vanishing ext through n + p rules out positive finite projective
      // dimension, so m is projective
      out.v = WeakGpProbe::V::gp_certified;
      out.notes.push_back("projective module");
      return out;
    }
    x = tr.syzygies[n];
  }
  auto t = strongly_gp_check(x, p, cfg);
  out.notes.insert(out.notes.end(), t.notes.begin(), t.notes.end());
  if (t.verdict == Tribool::V::yes) {
    out.v = WeakGpProbe::V::gp_certified;
    out.notes.push_back("syzygy " + std::to_string(n) +
                        " recurs with period " + std::to_string(p));
  } else {
    out.v = WeakGpProbe::V::unknown;
    if (t.verdict == Tribool::V::no)
      out.notes.push_back("the recurrence certificate failed; ext vanishing "
                          "was only checked through degree " +
                          std::to_string(n + p));
  }
  return out;
}

}  // namespace syz

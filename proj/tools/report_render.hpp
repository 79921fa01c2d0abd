#pragma once

// Report documents for the command line tool. Everything is assembled as
// nlohmann ordered_json so key order is fixed by construction and two runs
// with the same inputs are byte-identical. Markdown output is rendered from
// the finished JSON document, never computed separately.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "syz/gorenstein.hpp"

namespace syz {

using ordered_json = nlohmann::ordered_json;

struct AnalysisConfig {
  std::size_t cutoff = 40;
  unsigned iso_trials = 64;
  std::uint64_t seed = 0;
  FieldSpec field = FieldSpec::rationals();
  std::size_t enveloping_gate = 8;
  bool certificates = false;
  bool assume_gpd_finite = false;
  std::string format = "json";  // or "markdown"

  HomologyConfig homology() const {
    HomologyConfig h;
    h.cutoff = cutoff;
    h.iso.trials = iso_trials;
    h.iso.seed = seed;
    return h;
  }
};

inline ordered_json ext_json(const ExtNat& e) {
  switch (e.kind) {
    case ExtNat::Kind::minus_infinite: return "-infinity";
    case ExtNat::Kind::finite: return e.value;
    case ExtNat::Kind::infinite: return "infinity";
    default: return ordered_json{{"unknown_beyond", e.value}};
  }
}

inline ordered_json config_json(const AnalysisConfig& c) {
  ordered_json j;
  j["cutoff"] = c.cutoff;
  j["iso_trials"] = c.iso_trials;
  j["seed"] = c.seed;
  j["field"] = c.field.str();
  j["enveloping_gate"] = c.enveloping_gate;
  j["certificates"] = c.certificates;
  j["assume_gpd_finite"] = c.assume_gpd_finite;
  j["format"] = c.format;
  return j;
}

template <ExactField F>
std::vector<std::size_t> dim_vector(const Module<F>& m) {
  std::vector<std::size_t> v(m.alg->n_idem, 0);
  if (m.dim == 0) return v;
  for (std::size_t i = 0; i < m.alg->n_idem; ++i)
    v[i] = rank(m.alg->k, m.act[i]);
  return v;
}

template <ExactField F>
ordered_json mat_json(const F& k, const Mat<F>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(k.str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline std::string cert_str(const GpdCertificate& c) {
  switch (c.kind) {
    case GpdCertificate::Kind::gorenstein:
      return "gorenstein(" + std::to_string(c.d) + ")";
    case GpdCertificate::Kind::finite_proj_dim: return "finite_proj_dim";
    case GpdCertificate::Kind::assumed: return "assumed";
    default: return "none";
  }
}

template <ExactField F>
const char* verdict_str(typename PeriodicityReport<F>::Verdict v) {
  using V = typename PeriodicityReport<F>::Verdict;
  if (v == V::eventually_periodic) return "eventually_periodic";
  if (v == V::finite_proj_dim) return "finite_proj_dim";
  return "unknown_beyond";
}

// When the first periodic syzygy is semisimple it splits as a sum of
// simples; certify the splitting with an isomorphism witness and render it
// as a note like "syz^3(S4) = S1 + S3 + S5".
template <ExactField F>
struct SyzygyDecomposition {
  std::size_t degree = 0;
  std::vector<std::string> summands;
  std::string note;
  Mat<F> witness;
};

template <ExactField F>
std::optional<SyzygyDecomposition<F>> semisimple_syzygy_split(
    const Module<F>& m, const PeriodicityReport<F>& rep, const IsoConfig& iso) {
  using V = typename PeriodicityReport<F>::Verdict;
  if (rep.verdict != V::eventually_periodic || rep.n == 0) return std::nullopt;
  if (rep.n >= rep.trace.syzygies.size()) return std::nullopt;
  const auto& syz = rep.trace.syzygies[rep.n];
  if (syz.dim == 0) return std::nullopt;
  const auto& a = m.alg;
  for (auto r : a->radical)
    if (!is_zero_mat(a->k, syz.act[r])) return std::nullopt;

  auto counts = dim_vector(syz);
  std::vector<Module<F>> parts;
  SyzygyDecomposition<F> dec;
  dec.degree = rep.n;
  for (std::size_t v = 0; v < a->n_idem; ++v)
    for (std::size_t c = 0; c < counts[v]; ++c) {
      parts.push_back(simple(a, v));
      dec.summands.push_back("S" + a->idem_names[v]);
    }
  auto sum = direct_sum(parts, a);
  auto iso_res = is_isomorphic(syz, sum, iso);
  if (iso_res.verdict != Iso<F>::V::yes) return std::nullopt;
  dec.witness = *iso_res.witness;

  std::string rhs;
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    if (i) rhs += " + ";
    rhs += dec.summands[i];
  }
  dec.note = "syz^" + std::to_string(dec.degree) + "(" + m.name + ") = " + rhs;
  return dec;
}

template <ExactField F>
ordered_json periodicity_json(const PeriodicityReport<F>& rep) {
  using V = typename PeriodicityReport<F>::Verdict;
  ordered_json j;
  j["verdict"] = verdict_str<F>(rep.verdict);
  if (rep.verdict == V::eventually_periodic)
    j["first_periodic"] = ordered_json{{"n", rep.n}, {"p", rep.p}};
  else
    j["first_periodic"] = nullptr;
  j["proj_dim"] = ext_json(rep.proj_dim);
  j["per_dim"] = ext_json(rep.per_dim);
  j["certified_no_pairs"] = rep.certified_no_pairs;
  j["minimality_blocked"] = rep.minimality_blocked;
  j["notes"] = rep.notes;
  return j;
}

template <ExactField F>
ordered_json gpd_json(const GpdReport<F>& g) {
  ordered_json j;
  j["value"] = ext_json(g.value);
  j["method"] = g.method;
  j["shift_value"] = g.shift_value ? ordered_json(*g.shift_value) : nullptr;
  j["ext_value"] = g.ext_value ? ordered_json(*g.ext_value) : nullptr;
  j["pd_value"] = g.pd_value ? ordered_json(*g.pd_value) : nullptr;
  j["certificate"] = cert_str(g.cert);
  j["notes"] = g.notes;
  return j;
}

template <ExactField F>
ordered_json gorenstein_json(const GorensteinReport<F>& g) {
  ordered_json j;
  j["certified"] = g.certified;
  j["verdict"] = g.verdict();
  j["d"] = g.certified ? ordered_json(g.d) : nullptr;
  j["inj_dim_left"] = ext_json(g.left);
  j["inj_dim_right"] = ext_json(g.right);
  j["selfinjective"] = g.selfinjective;
  j["separability"] = "automatic";  // bound quiver algebras over Q or Fp
  j["notes"] = g.notes;
  return j;
}

template <ExactField F>
ordered_json row_table_json(const std::vector<PerSimpleRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["name"] = r.name;
    j["proj_dim"] = ext_json(r.proj_dim);
    j["per_dim"] = ext_json(r.per_dim);
    j["period"] = r.period ? ordered_json(r.period) : nullptr;
    arr.push_back(std::move(j));
  }
  return arr;
}

template <ExactField F>
ordered_json bimodule_json(const BimodulePerDimReport<F>& b) {
  ordered_json j;
  j["value"] = ext_json(b.value);
  j["route"] = b.route;
  j["value_identified"] = b.value_identified;
  j["reduction_left"] = ext_json(b.reduction_left);
  j["reduction_right"] = ext_json(b.reduction_right);
  j["reduction_period"] = b.reduction_period ? ordered_json(b.reduction_period) : nullptr;
  j["direct_ran"] = b.direct_ran;
  j["direct_value"] = b.direct_ran ? ext_json(b.direct_value) : nullptr;
  j["direct_period"] = b.direct_ran && b.direct_period
                           ? ordered_json(b.direct_period)
                           : nullptr;
  j["bimodule_proj_dim"] = b.direct_ran ? ext_json(b.bimodule_proj_dim) : nullptr;
  j["bimodule_gpd"] = b.bimodule_gpd_ran ? ext_json(b.bimodule_gpd) : nullptr;
  j["sandwich_ok"] = b.sandwich_ok;
  j["right_simples"] = row_table_json<F>(b.right_table);
  j["notes"] = b.notes;
  return j;
}

template <ExactField F>
ordered_json checks_json(const ConjectureReport<F>& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& it : c.items)
    arr.push_back(ordered_json{{"name", it.name},
                               {"status", check_status_str(it.status)},
                               {"detail", it.detail}});
  return arr;
}

template <ExactField F>
ordered_json analyze_document(const std::string& input_name, const AlgPtr<F>& a,
                              const AnalysisConfig& cfg) {
  auto hcfg = cfg.homology();
  ordered_json doc;
  doc["command"] = "analyze";
  doc["input"] = input_name;

  ordered_json alg;
  alg["dim"] = a->dim();
  alg["vertices"] = a->idem_names;
  alg["monomial"] = a->prov == Algebra<F>::Prov::bound_quiver &&
                    a->spec.all_monomial();
  alg["connected"] = quiver_connected(a);
  doc["algebra"] = std::move(alg);
  doc["config"] = config_json(cfg);

  auto gor = gorenstein_report(a, hcfg);
  GpdCertificate cert;
  if (gor.certified)
    cert = {GpdCertificate::Kind::gorenstein, gor.d};
  else if (cfg.assume_gpd_finite)
    cert = {GpdCertificate::Kind::assumed, 0};

  ordered_json simples = ordered_json::array();
  ordered_json cert_simples;
  std::vector<std::string> syzygy_notes;
  for (std::size_t i = 0; i < a->n_idem; ++i) {
    auto s = simple(a, i);
    auto g = gpd_report(s, hcfg, cert);
    const auto& per = g.periodicity;
    ordered_json row;
    row["name"] = s.name;
    row["slot"] = i;
    row["dim_vector"] = dim_vector(s);
    row["proj_dim"] = ext_json(per.proj_dim);
    row["per_dim"] = ext_json(per.per_dim);
    using V = typename PeriodicityReport<F>::Verdict;
    row["period"] = per.verdict != V::unknown_beyond ? ordered_json(per.p) : nullptr;
    row["gpd"] = ext_json(g.value);
    row["gpd_method"] = g.method;
    auto dec = semisimple_syzygy_split(s, per, hcfg.iso);
    row["semisimple_syzygy"] = dec ? ordered_json(dec->note) : nullptr;
    if (dec) syzygy_notes.push_back(dec->note);
    simples.push_back(std::move(row));
    if (cfg.certificates) {
      ordered_json cj;
      if (per.witness) cj["periodicity_witness"] = mat_json(a->k, *per.witness);
      if (dec) cj["semisimple_syzygy_witness"] = mat_json(a->k, dec->witness);
      if (!cj.is_null() && !cj.empty()) cert_simples[s.name] = std::move(cj);
    }
  }
  doc["simples"] = std::move(simples);
  doc["syzygy_notes"] = syzygy_notes;
  doc["gorenstein"] = gorenstein_json(gor);

  auto conj = conjecture_checks(a, hcfg, cfg.enveloping_gate);
  const auto& bim = conj.bimodule;
  doc["bimodule"] = bimodule_json(bim);
  doc["checks"] = checks_json(conj);

  if (cfg.certificates) {
    ordered_json cj;
    cj["simples"] = cert_simples.is_null() ? ordered_json::object() : cert_simples;
    if (bim.left_report.witness)
      cj["quotient_witness"] = mat_json(a->k, *bim.left_report.witness);
    if (bim.direct_report && bim.direct_report->witness)
      cj["bimodule_direct_witness"] = mat_json(a->k, *bim.direct_report->witness);
    doc["certificates"] = std::move(cj);
  }
  return doc;
}

template <ExactField F>
ordered_json module_document(const std::string& input_name,
                             const std::string& expr, const Module<F>& m,
                             const AnalysisConfig& cfg) {
  auto hcfg = cfg.homology();
  ordered_json doc;
  doc["command"] = "module";
  doc["input"] = input_name;
  doc["expr"] = expr;

  ordered_json mod;
  mod["name"] = m.name;
  mod["dim"] = m.dim;
  mod["dim_vector"] = dim_vector(m);
  doc["module"] = std::move(mod);
  doc["config"] = config_json(cfg);

  auto gor = gorenstein_report(m.alg, hcfg);
  GpdCertificate cert;
  if (gor.certified)
    cert = {GpdCertificate::Kind::gorenstein, gor.d};
  else if (cfg.assume_gpd_finite)
    cert = {GpdCertificate::Kind::assumed, 0};
  auto g = gpd_report(m, hcfg, cert);
  const auto& per = g.periodicity;

  ordered_json res;
  ordered_json dims = ordered_json::array();
  for (const auto& s : per.trace.syzygies) dims.push_back(s.dim);
  res["syzygy_dims"] = std::move(dims);
  res["betti"] = per.trace.mult;
  res["terminated_at"] =
      per.trace.terminated_at ? ordered_json(*per.trace.terminated_at) : nullptr;
  res["guard_hit"] = per.trace.guard_hit;
  doc["resolution"] = std::move(res);

  doc["periodicity"] = periodicity_json(per);
  auto dec = semisimple_syzygy_split(m, per, hcfg.iso);
  doc["semisimple_syzygy"] = dec ? ordered_json(dec->note) : nullptr;
  doc["gpd"] = gpd_json(g);

  if (cfg.certificates) {
    ordered_json cj;
    if (per.witness) cj["periodicity_witness"] = mat_json(m.alg->k, *per.witness);
    if (dec) cj["semisimple_syzygy_witness"] = mat_json(m.alg->k, dec->witness);
    doc["certificates"] = std::move(cj);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// markdown rendering (from the JSON document, so both formats always agree)

inline std::string md_ext(const ordered_json& v) {
  if (v.is_number()) return std::to_string(v.get<std::size_t>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("unknown_beyond"))
    return "?>" + std::to_string(v["unknown_beyond"].get<std::size_t>());
  return "-";
}

inline std::string md_opt(const ordered_json& v) {
  return v.is_null() ? "-" : md_ext(v);
}

inline std::string render_analyze_markdown(const ordered_json& doc) {
  std::ostringstream o;
  o << "# Analysis: " << doc["input"].get<std::string>() << "\n\n";
  const auto& alg = doc["algebra"];
  o << "- dimension " << alg["dim"] << ", vertices " << alg["vertices"].size()
    << ", monomial: " << (alg["monomial"].get<bool>() ? "yes" : "no")
    << ", connected: " << (alg["connected"].get<bool>() ? "yes" : "no") << "\n";
  const auto& c = doc["config"];
  o << "- field " << c["field"].get<std::string>() << ", cutoff " << c["cutoff"]
    << ", trials " << c["iso_trials"] << ", seed " << c["seed"] << "\n\n";

  o << "| simple | dim vector | proj.dim | per.dim | period | Gpd |\n";
  o << "|---|---|---|---|---|---|\n";
  for (const auto& row : doc["simples"]) {
    o << "| " << row["name"].get<std::string>() << " | (";
    const auto& dv = row["dim_vector"];
    for (std::size_t i = 0; i < dv.size(); ++i) o << (i ? "," : "") << dv[i];
    o << ") | " << md_ext(row["proj_dim"]) << " | " << md_ext(row["per_dim"])
      << " | " << md_opt(row["period"]) << " | " << md_ext(row["gpd"])
      << " |\n";
  }
  o << "\n";
  for (const auto& n : doc["syzygy_notes"])
    o << "- " << n.get<std::string>() << "\n";
  if (!doc["syzygy_notes"].empty()) o << "\n";

  o << "Gorenstein: " << doc["gorenstein"]["verdict"].get<std::string>()
    << " (inj.dim left " << md_ext(doc["gorenstein"]["inj_dim_left"])
    << ", right " << md_ext(doc["gorenstein"]["inj_dim_right"]) << ")\n\n";

  const auto& b = doc["bimodule"];
  o << "Bimodule periodic dimension: " << md_ext(b["value"]) << " via "
    << b["route"].get<std::string>()
    << (b["value_identified"].get<bool>() ? "" : " (not identified)")
    << "; quotient left/right " << md_ext(b["reduction_left"]) << "/"
    << md_ext(b["reduction_right"]);
  if (b["direct_ran"].get<bool>())
    o << "; direct " << md_ext(b["direct_value"]);
  o << "\n\n";

  o << "## Checks\n\n";
  for (const auto& it : doc["checks"])
    o << "- " << it["name"].get<std::string>() << ": "
      << it["status"].get<std::string>() << " (" << it["detail"].get<std::string>()
      << ")\n";
  return o.str();
}

inline std::string render_module_markdown(const ordered_json& doc) {
  std::ostringstream o;
  o << "# Module: " << doc["expr"].get<std::string>() << " over "
    << doc["input"].get<std::string>() << "\n\n";
  const auto& m = doc["module"];
  o << "- dimension " << m["dim"] << ", dim vector (";
  const auto& dv = m["dim_vector"];
  for (std::size_t i = 0; i < dv.size(); ++i) o << (i ? "," : "") << dv[i];
  o << ")\n";
  const auto& c = doc["config"];
  o << "- field " << c["field"].get<std::string>() << ", cutoff " << c["cutoff"]
    << ", trials " << c["iso_trials"] << ", seed " << c["seed"] << "\n\n";

  const auto& res = doc["resolution"];
  o << "syzygy dims:";
  for (const auto& d : res["syzygy_dims"]) o << " " << d;
  o << "\n";
  if (!res["terminated_at"].is_null())
    o << "resolution terminates at step " << res["terminated_at"] << "\n";
  if (res["guard_hit"].get<bool>()) o << "resolution hit the dimension guard\n";

  const auto& p = doc["periodicity"];
  o << "\nperiodicity: " << p["verdict"].get<std::string>();
  if (!p["first_periodic"].is_null())
    o << " at (n, p) = (" << p["first_periodic"]["n"] << ", "
      << p["first_periodic"]["p"] << ")";
  o << "\nproj.dim " << md_ext(p["proj_dim"]) << ", per.dim "
    << md_ext(p["per_dim"]) << "\n";
  if (!doc["semisimple_syzygy"].is_null())
    o << doc["semisimple_syzygy"].get<std::string>() << "\n";
  o << "Gpd " << md_ext(doc["gpd"]["value"]) << " via "
    << doc["gpd"]["method"].get<std::string>() << " (certificate "
    << doc["gpd"]["certificate"].get<std::string>() << ")\n";
  return o.str();
}

}  // namespace syz

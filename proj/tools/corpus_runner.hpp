#pragma once

// Golden corpus: every bundled .quiver file is analyzed and compared
// against corpus/expected.json. Expected values are machine facts that were
// reviewed by hand before freezing; regeneration goes through
// `corpus --write-expected` followed by a diff review.

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "modexpr.hpp"
#include "report_render.hpp"
#include "syz/dsl.hpp"

namespace syz {

template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::rationals) return fn(Rationals{});
  return fn(PrimeField(fs.p));
}

inline FieldSpec parse_field_arg(const std::string& s) {
  if (s == "Q" || s == "q") return FieldSpec::rationals();
  if ((s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) &&
      s.find_first_not_of("0123456789", 1) == std::string::npos)
    return FieldSpec::prime(std::stoll(s.substr(1)));
  throw std::runtime_error("unrecognized field '" + s + "' (use Q or F<p>)");
}

// short spelling used in expected.json ("Q", "F2")
inline std::string field_tag(const FieldSpec& fs) {
  return fs.kind == FieldSpec::Kind::rationals ? "Q"
                                               : "F" + std::to_string(fs.p);
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// measured values for one algebra, in the shape of an expected.json entry
template <ExactField F>
ordered_json corpus_measure(const AlgPtr<F>& a, const AnalysisConfig& cfg) {
  auto hcfg = cfg.homology();
  ordered_json e;
  e["dim"] = a->dim();
  e["monomial"] = a->prov == Algebra<F>::Prov::bound_quiver &&
                  a->spec.all_monomial();
  e["connected"] = quiver_connected(a);

  auto gor = gorenstein_report(a, hcfg);
  e["gorenstein"] = gor.verdict();
  e["selfinjective"] = gor.selfinjective;

  GpdCertificate cert;
  if (gor.certified) cert = {GpdCertificate::Kind::gorenstein, gor.d};

  ordered_json simples;
  using V = typename PeriodicityReport<F>::Verdict;
  for (std::size_t i = 0; i < a->n_idem; ++i) {
    auto s = simple(a, i);
    auto g = gpd_report(s, hcfg, cert);
    const auto& per = g.periodicity;
    ordered_json row;
    row["proj_dim"] = per.proj_dim.to_str();
    row["per_dim"] = per.per_dim.to_str();
    row["period"] = per.verdict != V::unknown_beyond ? ordered_json(per.p) : nullptr;
    row["gpd"] = g.value.to_str();
    simples[s.name] = std::move(row);
  }
  e["simples"] = std::move(simples);

  auto bim = bimodule_per_dim(a, hcfg, cfg.enveloping_gate);
  ordered_json q;
  q["per_dim"] = bim.reduction_left.to_str();
  q["period"] = bim.reduction_period ? ordered_json(bim.reduction_period) : nullptr;
  e["quotient"] = std::move(q);

  ordered_json b;
  b["value"] = bim.value.to_str();
  b["route"] = bim.route;
  b["identified"] = bim.value_identified;
  e["bimodule"] = std::move(b);
  return e;
}

inline void flatten_compare(const std::string& prefix, const ordered_json& exp,
                            const ordered_json& got, ordered_json& checks) {
  if (exp.is_object()) {
    for (auto it = exp.begin(); it != exp.end(); ++it) {
      std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (!got.is_object() || !got.contains(it.key())) {
        checks.push_back(ordered_json{{"name", path},
                                      {"pass", false},
                                      {"expected", it.value()},
                                      {"got", nullptr}});
        continue;
      }
      flatten_compare(path, it.value(), got.at(it.key()), checks);
    }
    return;
  }
  bool ok = exp == got;
  checks.push_back(ordered_json{
      {"name", prefix}, {"pass", ok}, {"expected", exp}, {"got", got}});
}

struct CorpusRun {
  ordered_json doc;
  bool all_pass = true;
  std::string text;
};

inline CorpusRun run_corpus(const std::string& dir, const AnalysisConfig& cfg,
                            bool write_expected = false) {
  namespace fs = std::filesystem;
  CorpusRun out;
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir))
    if (ent.path().extension() == ".quiver") files.push_back(ent.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .quiver files in " + dir);

  ordered_json expected;
  fs::path expath = fs::path(dir) / "expected.json";
  if (!write_expected) {
    std::ifstream in(expath);
    if (!in) throw std::runtime_error("cannot open " + expath.string());
    in >> expected;
  }

  std::string tag = field_tag(cfg.field);
  ordered_json results = ordered_json::array();
  ordered_json regenerated;
  std::ostringstream txt;
  std::size_t n_checks = 0, n_fail = 0;

  for (const auto& f : files) {
    std::string stem = f.stem().string();
    auto spec = parse(read_file(f));
    auto measured = with_field(cfg.field, [&](auto k) {
      auto a = build_algebra(spec, k);
      return corpus_measure(a, cfg);
    });

    if (write_expected) {
      ordered_json entry;
      entry["fields"] = ordered_json::array({"Q"});
      for (auto it = measured.begin(); it != measured.end(); ++it)
        entry[it.key()] = it.value();
      regenerated[stem] = std::move(entry);
      continue;
    }

    ordered_json res;
    res["algebra"] = stem;
    res["field"] = tag;
    if (!expected.contains(stem)) {
      res["checks"] = ordered_json::array({ordered_json{
          {"name", "expected_entry"}, {"pass", false},
          {"expected", "present"}, {"got", "missing"}}});
      out.all_pass = false;
      ++n_checks, ++n_fail;
      txt << "FAIL " << stem << " expected_entry: no stored values\n";
      results.push_back(std::move(res));
      continue;
    }
    const auto& entry = expected.at(stem);
    std::vector<std::string> entry_fields = {"Q"};
    if (entry.contains("fields"))
      entry_fields = entry.at("fields").get<std::vector<std::string>>();
    bool active = false;
    for (const auto& ef : entry_fields) active = active || ef == tag;
    if (!active) {
      res["skipped"] = true;
      txt << "SKIP " << stem << " (not asserted over " << tag << ")\n";
      results.push_back(std::move(res));
      continue;
    }

    ordered_json checks = ordered_json::array();
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      if (it.key() == "fields") continue;
      flatten_compare(it.key(), it.value(),
                      measured.contains(it.key()) ? measured.at(it.key())
                                                  : ordered_json(nullptr),
                      checks);
    }
    std::size_t entry_fail = 0;
    for (const auto& c : checks) {
      ++n_checks;
      if (!c["pass"].get<bool>()) {
        ++n_fail, ++entry_fail;
        out.all_pass = false;
        txt << "FAIL " << stem << " " << c["name"].get<std::string>()
            << ": expected " << c["expected"].dump() << " got "
            << c["got"].dump() << "\n";
      }
    }
    if (entry_fail == 0)
      txt << "PASS " << stem << " (" << checks.size() << " checks)\n";
    else
      txt << "FAIL " << stem << ": " << entry_fail << " of " << checks.size()
          << " checks failed\n";
    res["checks"] = std::move(checks);
    results.push_back(std::move(res));
  }

  if (write_expected) {
    std::ofstream outf(expath);
    outf << regenerated.dump(2) << "\n";
    out.doc = ordered_json{{"command", "corpus"},
                           {"written", expath.string()},
                           {"algebras", regenerated.size()}};
    out.text = "wrote " + expath.string() + "\n";
    return out;
  }

  txt << "corpus: " << n_checks << " checks, " << n_fail << " failures\n";
  ordered_json doc;
  doc["command"] = "corpus";
  doc["config"] = config_json(cfg);
  doc["results"] = std::move(results);
  doc["checks"] = n_checks;
  doc["failures"] = n_fail;
  doc["all_pass"] = out.all_pass;
  out.doc = std::move(doc);
  out.text = txt.str();
  return out;
}

}  // namespace syz

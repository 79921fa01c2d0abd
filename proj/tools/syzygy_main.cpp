// Command line front end: analyze .quiver files, inspect single modules,
// replay the golden corpus. Exit codes: 0 success, 1 corpus mismatch,
// 2 input error, 3 internal invariant violation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "corpus_runner.hpp"

#ifndef SYZ_DEFAULT_CORPUS_DIR
#define SYZ_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace {

using namespace syz;

struct Options {
  AnalysisConfig cfg;
  std::string field_arg;  // empty: use the file's field directive
  std::string file;
  std::string expr;
  std::string corpus_dir = SYZ_DEFAULT_CORPUS_DIR;
  bool write_expected = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--cutoff", o.cfg.cutoff, "syzygy steps explored");
  cmd->add_option("--trials", o.cfg.iso_trials, "isomorphism search trials");
  cmd->add_option("--seed", o.cfg.seed, "isomorphism search seed");
  cmd->add_option("--field", o.field_arg, "coefficient field: Q or F<p>");
  cmd->add_option("--format", o.cfg.format, "output format: json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  cmd->add_flag("--certificates", o.cfg.certificates,
                "embed witness matrices in the report");
  cmd->add_flag("--assume-gpd-finite", o.cfg.assume_gpd_finite,
                "enable the ext-vanishing Gpd route without a certificate");
  cmd->add_option("--enveloping-gate", o.cfg.enveloping_gate,
                  "max algebra dimension for the direct bimodule route");
}

FieldSpec resolve_field(const Options& o, const AlgebraSpec& spec) {
  if (!o.field_arg.empty()) return parse_field_arg(o.field_arg);
  return spec.field;
}

int emit(const ordered_json& doc, const std::string& format,
         const std::string& markdown) {
  if (format == "markdown")
    std::cout << markdown;
  else
    std::cout << doc.dump(2) << "\n";
  return 0;
}

AlgebraSpec load_spec(const std::string& path) {
  auto text = read_file(path);
  auto spec = parse(text);
  if (spec.vertices.empty())
    throw ParseError(1, 1, "no vertices declared in " + path);
  return spec;
}

int cmd_analyze(Options& o) {
  auto spec = load_spec(o.file);
  o.cfg.field = resolve_field(o, spec);
  std::string stem = std::filesystem::path(o.file).stem().string();
  return with_field(o.cfg.field, [&](auto k) {
    auto a = build_algebra(spec, k);
    auto doc = analyze_document(stem, a, o.cfg);
    return emit(doc, o.cfg.format, render_analyze_markdown(doc));
  });
}

int cmd_module(Options& o) {
  auto spec = load_spec(o.file);
  o.cfg.field = resolve_field(o, spec);
  std::string stem = std::filesystem::path(o.file).stem().string();
  return with_field(o.cfg.field, [&](auto k) {
    auto a = build_algebra(spec, k);
    auto m = eval_module_expr(a, o.expr);
    auto doc = module_document(stem, o.expr, m, o.cfg);
    return emit(doc, o.cfg.format, render_module_markdown(doc));
  });
}

int cmd_corpus(Options& o) {
  if (!o.field_arg.empty()) o.cfg.field = parse_field_arg(o.field_arg);
  auto run = syz::run_corpus(o.corpus_dir, o.cfg, o.write_expected);
  if (o.cfg.format == "markdown")
    std::cout << run.text;
  else
    std::cout << run.doc.dump(2) << "\n";
  return run.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homological invariants of bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "full report for a .quiver file");
  analyze->add_option("file", o.file, "input .quiver file")->required();
  add_common(analyze, o);

  auto* module_cmd = app.add_subcommand("module", "report for one module");
  module_cmd->add_option("file", o.file, "input .quiver file")->required();
  module_cmd
      ->add_option("expr", o.expr,
                   "module expression: S<i> P<i> D(A) rad(e) syz^k(e) sum(e,...)")
      ->required();
  add_common(module_cmd, o);

  auto* corpus = app.add_subcommand("corpus", "replay the golden corpus");
  add_common(corpus, o);
  corpus->add_option("--corpus-dir", o.corpus_dir, "directory of .quiver files");
  corpus->add_flag("--write-expected", o.write_expected,
                   "regenerate expected.json from current values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(o);
    if (app.got_subcommand(module_cmd)) return cmd_module(o);
    return cmd_corpus(o);
  } catch (const InvariantViolation& e) {
    syz::ordered_json bundle;
    bundle["error"] = "invariant_violation";
    bundle["message"] = e.what();
    bundle["input"] = o.file;
    std::cerr << bundle.dump(2) << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ExprError& e) {
    std::cerr << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const BuildError& e) {
    std::cerr << "build error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

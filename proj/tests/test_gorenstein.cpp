#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "syz/gorenstein.hpp"

using namespace syz;

namespace {

const char* kBiserial = R"(
vertices: 0 1 2 3 4 5
arrow a: 3 -> 5
arrow b: 4 -> 3
arrow c: 5 -> 4
arrow d: 5 -> 5
arrow e: 3 -> 2
arrow z: 2 -> 1
arrow h: 1 -> 0
relation a*b*c - d*d
relation c*a*b
relation d*a
relation c*d
relation e*b
relation z*e
relation h*z
)";

// loop at the top of a tail of length d, consecutive tail arrows vanish
const char* kGorMon1 = R"(
vertices: 1 0
arrow b: 1 -> 1
arrow a1: 1 -> 0
relation b*b
)";

const char* kGorMon2 = R"(
vertices: 2 1 0
arrow b: 2 -> 2
arrow a2: 2 -> 1
arrow a1: 1 -> 0
relation b*b
relation a1*a2
)";

const char* kGorMon3 = R"(
vertices: 3 2 1 0
arrow b: 3 -> 3
arrow a3: 3 -> 2
arrow a2: 2 -> 1
arrow a1: 1 -> 0
relation b*b
relation a2*a3
relation a1*a2
)";

const char* kSingleLoop = R"(
vertices: 0
arrow b: 0 -> 0
relation b*b
)";

// loop next to an isolated vertex: self-injective but disconnected
const char* kTwoPoint = R"(
vertices: 0 -1
arrow b: 0 -> 0
relation b*b
)";

const char* kA2 = R"(
vertices: 1 0
arrow a: 1 -> 0
)";

const char* kPureCycle = R"(
vertices: 0 -1 -2
arrow c0: 0 -> -1
arrow c1: -1 -> -2
arrow c2: -2 -> 0
relation c1*c0
relation c2*c1
relation c0*c2
)";

const char* kCycleTail = R"(
vertices: 2 1 0 -1 -2
arrow t2: 2 -> 1
arrow t1: 1 -> 0
arrow c0: 0 -> -1
arrow c1: -1 -> -2
arrow c2: -2 -> 0
relation t1*t2
relation c0*t1
relation c1*c0
relation c2*c1
relation c0*c2
)";

const HomologyConfig kCfg{12, {}, 4096};

AlgPtr<Rationals> build(const char* text) {
  return build_algebra(parse(text), Rationals{});
}

const AlgPtr<Rationals>& biserial() {
  static AlgPtr<Rationals> a = build(kBiserial);
  return a;
}

const CheckItem& item(const ConjectureReport<Rationals>& r,
                      const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return it;
  REQUIRE(false);
  static CheckItem none;
  return none;
}

bool has_note(const std::vector<std::string>& notes, const std::string& frag) {
  for (const auto& n : notes)
    if (n.find(frag) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("gorenstein_detection_across_the_sample_algebras") {
  auto g = gorenstein_report(biserial(), kCfg);
  CHECK(g.certified);
  CHECK(g.d == 4);
  CHECK(g.left == ExtNat::fin(4));
  CHECK(g.right == ExtNat::fin(4));
  CHECK_FALSE(g.selfinjective);
  CHECK(g.verdict() == "gorenstein(4)");

  auto tp = gorenstein_report(build(kTwoPoint), kCfg);
  CHECK(tp.certified);
  CHECK(tp.d == 0);
  CHECK(tp.selfinjective);

  auto g2 = gorenstein_report(build(kGorMon2), kCfg);
  CHECK(g2.certified);
  CHECK(g2.d == 2);

  auto a2 = gorenstein_report(build(kA2), kCfg);
  CHECK(a2.certified);
  CHECK(a2.d == 1);
  CHECK_FALSE(a2.selfinjective);
}

TEST_CASE("global_dimension_from_the_simples") {
  CHECK(gl_dim(build(kA2), kCfg) == ExtNat::fin(1));
  CHECK(gl_dim(biserial(), kCfg) == ExtNat::inf());
  CHECK(gl_dim(build(kGorMon1), kCfg) == ExtNat::inf());
  CHECK(gl_dim(build(kPureCycle), kCfg) == ExtNat::inf());
}

TEST_CASE("quiver_connectivity_and_the_semisimple_quotient") {
  CHECK(quiver_connected(biserial()));
  CHECK(quiver_connected(build(kSingleLoop)));
  CHECK(quiver_connected(build(kCycleTail)));
  CHECK_FALSE(quiver_connected(build(kTwoPoint)));

  auto q = semisimple_quotient(biserial());
  CHECK(q.name == "A/J");
  CHECK(q.dim == 6);
  CHECK(dimension_vector(q) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("bimodule_periodic_dimension_of_the_selfinjective_loops") {
  // connected single loop: the bimodule itself is periodic
  auto rep = bimodule_per_dim(build(kSingleLoop), kCfg);
  CHECK(rep.gorenstein.selfinjective);
  CHECK(rep.value == ExtNat::fin(0));
  CHECK(rep.route == "both");
  CHECK(rep.value_identified);
  CHECK(rep.sandwich_ok);
  CHECK(rep.reduction_left == ExtNat::fin(0));
  CHECK(rep.reduction_right == ExtNat::fin(0));
  CHECK(rep.direct_value == ExtNat::fin(0));

  // loop plus an isolated vertex: the projective simple pushes the
  // quotient's periodic dimension to 1, and the bimodule follows
  auto tp = bimodule_per_dim(build(kTwoPoint), kCfg);
  CHECK(tp.gorenstein.selfinjective);
  CHECK(tp.value == ExtNat::fin(1));
  CHECK(tp.route == "both");
  CHECK(tp.value_identified);
  CHECK(tp.sandwich_ok);
  CHECK(tp.direct_period == 2);
  CHECK(tp.bimodule_gpd_ran);
  CHECK(tp.bimodule_gpd == ExtNat::fin(0));
}

TEST_CASE("bimodule_periodic_dimension_of_the_gorenstein_monomial_family") {
  auto r1 = bimodule_per_dim(build(kGorMon1), kCfg);
  CHECK(r1.gorenstein.certified);
  CHECK(r1.gorenstein.d == 1);
  CHECK(r1.value == ExtNat::fin(2));
  CHECK(r1.route == "both");
  CHECK(r1.value_identified);
  CHECK(r1.sandwich_ok);

  auto r2 = bimodule_per_dim(build(kGorMon2), kCfg);
  CHECK(r2.gorenstein.d == 2);
  CHECK(r2.value == ExtNat::fin(3));
  CHECK(r2.route == "both");
  CHECK(r2.value_identified);
  CHECK(r2.sandwich_ok);

  // base dimension 9 blocks the direct route; the monomial reduction
  // still pins the value
  auto r3 = bimodule_per_dim(build(kGorMon3), kCfg);
  CHECK(r3.gorenstein.d == 3);
  CHECK(r3.value == ExtNat::fin(4));
  CHECK(r3.route == "reduction");
  CHECK(r3.value_identified);
  CHECK(r3.sandwich_ok);
  CHECK_FALSE(r3.direct_ran);
  CHECK(has_note(r3.notes, "monomial Gorenstein"));
  CHECK(has_note(r3.notes, "direct route skipped"));

  // per-simple periodic dimensions climb the tail and top out at d + 1
  REQUIRE(r3.left_table.size() == 4);
  CHECK(r3.left_table[0].per_dim == ExtNat::fin(4));  // loop vertex
  CHECK(r3.left_table[1].per_dim == ExtNat::fin(3));
  CHECK(r3.left_table[2].per_dim == ExtNat::fin(2));
  CHECK(r3.left_table[3].per_dim == ExtNat::fin(1));
  CHECK(r3.left_table[0].proj_dim == ExtNat::inf());
  CHECK(r3.left_table[1].proj_dim == ExtNat::fin(2));
  CHECK(r3.left_table[2].proj_dim == ExtNat::fin(1));
  CHECK(r3.left_table[3].proj_dim == ExtNat::fin(0));
}

TEST_CASE("bimodule_periodic_dimension_of_the_biserial_algebra") {
  auto rep = bimodule_per_dim(biserial(), kCfg);
  CHECK(rep.gorenstein.d == 4);
  CHECK(rep.reduction_left == ExtNat::fin(5));
  CHECK(rep.reduction_right == ExtNat::fin(5));
  CHECK(rep.reduction_period == 1);
  CHECK(rep.value == ExtNat::fin(5));
  CHECK(rep.route == "reduction");
  CHECK_FALSE(rep.value_identified);  // not monomial, no direct confirmation
  CHECK(has_note(rep.notes, "provided the bimodule is eventually periodic"));
  CHECK(rep.sandwich_ok);

  std::vector<std::size_t> per, pd_fin;
  for (const auto& row : rep.left_table) per.push_back(row.per_dim.value);
  CHECK(per == std::vector<std::size_t>{1, 2, 3, 4, 5, 1});
  CHECK(rep.left_table[4].proj_dim == ExtNat::inf());
  CHECK(rep.left_table[5].proj_dim == ExtNat::inf());
  CHECK(rep.left_table[3].proj_dim == ExtNat::fin(3));
}

TEST_CASE("hereditary_two_vertex_algebra_and_its_bimodule") {
  auto a = build(kA2);
  auto rep = bimodule_per_dim(a, kCfg);
  CHECK(rep.gorenstein.certified);
  CHECK(rep.gorenstein.d == 1);
  CHECK(rep.bimodule_proj_dim == ExtNat::fin(1));
  CHECK(rep.value == ExtNat::fin(2));
  CHECK(rep.route == "both");
  CHECK(rep.direct_period == 1);
  CHECK(rep.sandwich_ok);
  CHECK(rep.bimodule_gpd_ran);
  CHECK(rep.bimodule_gpd == ExtNat::fin(1));

  auto checks = conjecture_checks(a, kCfg);
  const auto& v = item(checks, "finite_bimodule_proj_dim");
  CHECK(v.status == CheckStatus::holds);
  CHECK(v.detail.find("equal 1") != std::string::npos);
  CHECK(item(checks, "monomial_eventual_periodicity").status ==
        CheckStatus::holds);
  CHECK(item(checks, "finitistic_bound").status == CheckStatus::holds);
  CHECK(item(checks, "injective_dimension_symmetry").status ==
        CheckStatus::holds);
}

TEST_CASE("structural_checks_on_the_loop_algebras") {
  // connected, every simple periodic: the bimodule must be periodic too
  auto sl = conjecture_checks(build(kSingleLoop), kCfg);
  const auto& inst = item(sl, "periodicity_conjecture_instance");
  CHECK(inst.status == CheckStatus::holds);
  CHECK(inst.detail.find("bimodule periodic: yes") != std::string::npos);
  CHECK(item(sl, "monomial_eventual_periodicity").status ==
        CheckStatus::holds);

  // same local structure but disconnected: the instance does not apply
  auto tp = conjecture_checks(build(kTwoPoint), kCfg);
  CHECK(item(tp, "periodicity_conjecture_instance").status ==
        CheckStatus::not_applicable);
  CHECK(item(tp, "injective_dimension_symmetry").status ==
        CheckStatus::holds);
  CHECK(item(tp, "finite_bimodule_proj_dim").status ==
        CheckStatus::not_applicable);

  // the tail keeps the simples from all being periodic, and the bimodule
  // side of the equivalence agrees
  auto g2 = conjecture_checks(build(kGorMon2), kCfg);
  const auto& pc2 = item(g2, "periodicity_conjecture_instance");
  CHECK(pc2.status == CheckStatus::holds);
  CHECK(pc2.detail.find("all simples periodic: no") != std::string::npos);
  CHECK(item(g2, "monomial_eventual_periodicity").status ==
        CheckStatus::holds);
  CHECK(item(g2, "finitistic_bound").status == CheckStatus::holds);
}

TEST_CASE("probe_for_gorenstein_projectivity") {
  auto bs = biserial();

  auto pr = weakly_gorenstein_probe(projective(bs, 3), 5, 1, kCfg);
  CHECK(pr.v == WeakGpProbe::V::gp_certified);
  CHECK(pr.to_str() == "gp_certified");

  auto s5 = weakly_gorenstein_probe(simple(bs, 5), 5, 1, kCfg);
  CHECK(s5.v == WeakGpProbe::V::obstruction);
  CHECK(s5.obstruction_i == 1);
  CHECK(s5.to_str() == "obstruction(1)");

  // over the truncated cycle every simple is periodic with period 3
  auto pc = build(kPureCycle);
  auto s0 = weakly_gorenstein_probe(simple(pc, 0), 0, 3, kCfg);
  CHECK(s0.v == WeakGpProbe::V::gp_certified);
  CHECK(has_note(s0.notes, "recurs with period 3"));

  // attaching a tail leaves the cycle simple periodic but obstructed in a
  // degree beyond the periodicity index, which the probe cannot settle
  auto ct = build(kCycleTail);
  auto junction = weakly_gorenstein_probe(simple(ct, 2), 0, 3, kCfg);
  CHECK(junction.v == WeakGpProbe::V::unknown);
  CHECK(has_note(junction.notes, "beyond the periodicity index"));

  auto z = weakly_gorenstein_probe(zero_module(bs), 5, 1, kCfg);
  CHECK(z.v == WeakGpProbe::V::gp_certified);
}

TEST_CASE("algebra_level_reports_are_deterministic") {
  auto a = build(kTwoPoint);
  auto r1 = bimodule_per_dim(a, kCfg);
  auto r2 = bimodule_per_dim(a, kCfg);
  CHECK(r1.value == r2.value);
  CHECK(r1.route == r2.route);
  CHECK(r1.direct_period == r2.direct_period);
  CHECK(r1.reduction_period == r2.reduction_period);
  REQUIRE(r1.left_table.size() == r2.left_table.size());
  for (std::size_t i = 0; i < r1.left_table.size(); ++i) {
    CHECK(r1.left_table[i].per_dim == r2.left_table[i].per_dim);
    CHECK(r1.left_table[i].period == r2.left_table[i].period);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "syz/algebra.hpp"

using namespace syz;

namespace {

AlgPtr<Rationals> build_q(const std::string& text) {
  return build_algebra(parse(text), Rationals{});
}

template <class A>
std::size_t by_label(const A& a, const std::string& l) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis[i].label == l) return i;
  REQUIRE_MESSAGE(false, "no basis element labelled " << l);
  return 0;
}

// radical square zero cycle-with-tail family: tail n -> ... -> 1 -> 0,
// cycle of length p through 0, every length-2 path a relation
std::string cycle_tail_text(unsigned n, unsigned p) {
  std::ostringstream os;
  os << "vertices:";
  for (long v = static_cast<long>(n); v > -static_cast<long>(p); --v) os << " " << v;
  os << "\n";
  struct Arr {
    std::string label;
    long src, tgt;
  };
  std::vector<Arr> arrows;
  for (unsigned i = n; i >= 1; --i)
    arrows.push_back({"t" + std::to_string(i), static_cast<long>(i), static_cast<long>(i) - 1});
  for (unsigned j = 0; j < p; ++j) {
    long s = -static_cast<long>(j);
    long t = (j + 1 == p) ? 0 : s - 1;
    arrows.push_back({"c" + std::to_string(j), s, t});
  }
  for (const auto& ar : arrows)
    os << "arrow " << ar.label << ": " << ar.src << " -> " << ar.tgt << "\n";
  for (const auto& x : arrows)
    for (const auto& y : arrows)
      if (x.tgt == y.src) os << "relation " << y.label << "*" << x.label << "\n";
  return os.str();
}

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

// all paths of the quiver up to the length cap, as (source vertex slot, word)
std::vector<std::pair<std::size_t, Word>> all_paths(const AlgebraSpec& spec, unsigned cap) {
  std::vector<std::pair<std::size_t, Word>> out;
  for (std::size_t v = 0; v < spec.vertices.size(); ++v) out.push_back({v, {}});
  std::vector<std::pair<std::size_t, Word>> layer = out;
  for (unsigned len = 1; len <= cap; ++len) {
    std::vector<std::pair<std::size_t, Word>> next;
    for (const auto& [src, w] : layer) {
      long at = w.empty() ? spec.vertices[src] : spec.arrows[w.back()].tgt;
      for (std::size_t ai = 0; ai < spec.arrows.size(); ++ai) {
        if (spec.arrows[ai].src != at) continue;
        Word nw = w;
        nw.push_back(ai);
        next.push_back({src, nw});
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool has_subword(const Word& w, const Word& sub) {
  if (sub.size() > w.size()) return false;
  for (std::size_t at = 0; at + sub.size() <= w.size(); ++at)
    if (std::equal(sub.begin(), sub.end(), w.begin() + at)) return true;
  return false;
}

}  // namespace

TEST_CASE("two_point_algebra_with_loop_square_zero") {
  auto a = build_q(R"(
vertices: 0 -1
arrow b: 0 -> 0
relation b*b
)");
  CHECK(a->dim() == 3);
  CHECK(a->n_idem == 2);
  CHECK(a->basis[0].label == "e0");
  CHECK(a->basis[1].label == "e-1");
  CHECK(a->basis[2].label == "b");
  std::size_t bi = by_label(*a, "b");
  CHECK(a->table[bi][bi].empty());
  CHECK(a->table[0][bi] == LinComb<Rationals>{{bi, mpq_class(1)}});
  CHECK(a->table[bi][0] == LinComb<Rationals>{{bi, mpq_class(1)}});
  CHECK(a->radical == std::vector<std::size_t>{2});
  verify_algebra(*a);
}

TEST_CASE("cycle_with_tail_radical_square_zero_dimensions") {
  for (auto [n, p] : {std::pair<unsigned, unsigned>{1, 1}, {2, 3}, {3, 2}}) {
    auto spec = parse(cycle_tail_text(n, p));
    auto a = build_algebra(spec, Rationals{});
    // radical square zero: basis = vertices + arrows
    CHECK(a->dim() == spec.vertices.size() + spec.arrows.size());
    CHECK(a->radical.size() == spec.arrows.size());
    if (n <= 2) verify_algebra(*a);
  }
}

TEST_CASE("biserial_completion_matches_path_quotient_oracle") {
  auto spec = parse(kBiserial);
  auto a = build_algebra(spec, Rationals{});
  CHECK(a->dim() == 18);
  verify_algebra(*a);

  // completed rewriting system: the seven oriented relations plus one
  // consequence closing the overlap between the commutation rule and d*a
  std::set<Word> lhs_set;
  for (const auto& [l, r] : a->rules) lhs_set.insert(l);
  std::set<Word> expected = {{2, 1, 0}, {1, 0, 2}, {0, 3}, {3, 2},
                             {1, 4},    {4, 5},    {5, 6}, {3, 3, 3}};
  CHECK(lhs_set == expected);
  const auto& r0 = a->rules.at(Word{2, 1, 0});
  REQUIRE(r0.size() == 1);
  CHECK(r0.begin()->first == Word{3, 3});
  CHECK(r0.begin()->second == mpq_class(1));

  // indecomposable projective dimensions, counted by source vertex
  std::map<long, int> pdim;
  for (const auto& e : a->basis) pdim[spec.vertices[e.src]]++;
  CHECK(pdim == std::map<long, int>{{0, 1}, {1, 2}, {2, 2}, {3, 5}, {4, 3}, {5, 5}});

  // the structure constant that glues the two relation branches
  std::size_t ai = by_label(*a, "a");
  std::size_t cb = by_label(*a, "b*c");
  std::size_t dd = by_label(*a, "d*d");
  CHECK(a->table[ai][cb] == LinComb<Rationals>{{dd, mpq_class(1)}});
  CHECK(by_label(*a, "b*c*a") < a->dim());  // the unique length 3 word

  // independent oracle: quotient of the length-truncated path space by the
  // span of all padded relation multiples, pure linear algebra
  const unsigned cap = 3;  // no normal word exceeds it; padding dies beyond
  auto paths = all_paths(spec, cap);
  CHECK(paths.size() == 34);
  std::map<std::pair<std::size_t, Word>, std::size_t> col;
  for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = i;

  Rationals k;
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& rel : spec.relations) {
    std::size_t rsrc = *spec.vertex_index(spec.path_source(rel.terms[0].arrows));
    std::size_t rtgt = *spec.vertex_index(spec.path_target(rel.terms[0].arrows));
    for (const auto& [vsrc, v] : paths) {
      std::size_t vt = v.empty() ? vsrc : *spec.vertex_index(spec.arrows[v.back()].tgt);
      if (vt != rsrc) continue;
      for (const auto& [usrc, u] : paths) {
        if (usrc != rtgt) continue;
        std::vector<mpq_class> row(paths.size(), 0);
        bool any = false;
        for (const auto& t : rel.terms) {
          Word w = v;
          w.insert(w.end(), t.arrows.begin(), t.arrows.end());
          w.insert(w.end(), u.begin(), u.end());
          if (w.size() > cap) continue;  // truncation kills long paths
          row[col.at({vsrc, w})] += t.coef;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  Mat<Rationals> m(rows.size(), paths.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) m.at(i, j) = rows[i][j];
  std::size_t ideal_rank = rank(k, m);
  CHECK(paths.size() - ideal_rank == 18);

  // the computed basis words are a complement of the ideal span
  Mat<Rationals> full(rows.size() + 18, paths.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) full.at(i, j) = rows[i][j];
  std::size_t at = rows.size();
  for (const auto& e : a->basis) full.at(at++, col.at({e.src, e.word})) = 1;
  CHECK(rank(k, full) == paths.size());

  // same dimension over a prime field
  auto spec7 = spec;
  spec7.field = FieldSpec::prime(7);
  auto a7 = build_algebra(spec7, PrimeField(7));
  CHECK(a7->dim() == 18);
}

TEST_CASE("normal_form_identifies_parallel_relation_sides") {
  auto a = build_q(kBiserial);
  auto left = normal_form(*a, {{mpq_class(1), Word{2, 1, 0}}});
  auto right = normal_form(*a, {{mpq_class(1), Word{3, 3}}});
  REQUIRE(left.size() == 1);
  CHECK(left == right);
  CHECK(left[0].idx == by_label(*a, "d*d"));
  CHECK(normal_form(*a, {{mpq_class(1), Word{1, 4}}}).empty());
  // difference of the two relation branches is zero in the algebra
  auto diff = normal_form(*a, {{mpq_class(1), Word{2, 1, 0}}, {mpq_class(-1), Word{3, 3}}});
  CHECK(diff.empty());
  CHECK_THROWS_AS(normal_form(*a, {{mpq_class(1), Word{0, 0}}}), BuildError);
}

TEST_CASE("monomial_basis_avoids_relation_subwords") {
  for (const std::string& text :
       {cycle_tail_text(2, 3), std::string(R"(
vertices: 2 1 0
arrow b: 2 -> 2
arrow a2: 2 -> 1
arrow a1: 1 -> 0
relation b*b
relation a1*a2
)")}) {
    auto spec = parse(text);
    auto a = build_algebra(spec, Rationals{});
    REQUIRE(spec.all_monomial());
    std::vector<Word> rel_words;
    for (const auto& r : spec.relations) rel_words.push_back(r.terms[0].arrows);
    std::set<std::pair<std::size_t, Word>> avoid;
    for (const auto& [src, w] : all_paths(spec, 6)) {
      bool ok = true;
      for (const auto& rw : rel_words) ok = ok && !has_subword(w, rw);
      if (ok) avoid.insert({src, w});
    }
    std::set<std::pair<std::size_t, Word>> got;
    for (const auto& e : a->basis) got.insert({e.src, e.word});
    CHECK(got == avoid);
  }
}

TEST_CASE("unbounded_growth_fails_loudly") {
  CHECK_THROWS_AS(build_q("vertices: 0\narrow x: 0 -> 0\n"), BuildError);
  CHECK_THROWS_AS(build_q("vertices: 0\narrow x: 0 -> 0\nbound: 9\n"), BuildError);
  auto a = build_q("vertices: 0\narrow x: 0 -> 0\nrelation x*x\n");
  CHECK(a->dim() == 2);
  auto a3 = build_q("vertices: 0\narrow x: 0 -> 0\nrelation x*x*x\n");
  CHECK(a3->dim() == 3);
  verify_algebra(*a3);
}

TEST_CASE("coefficients_map_into_prime_fields") {
  const char* text = R"(
vertices: 2 1 0
arrow a: 2 -> 1
arrow c: 2 -> 1
arrow b: 1 -> 0
relation b*a - 1/2*b*c
)";
  auto spec = parse(text);
  auto spec2 = spec;
  spec2.field = FieldSpec::prime(2);
  CHECK_THROWS_AS(build_algebra(spec2, PrimeField(2)), BuildError);
  auto spec3 = spec;
  spec3.field = FieldSpec::prime(3);
  auto a3 = build_algebra(spec3, PrimeField(3));
  CHECK(a3->dim() == 7);
  // rule b*c -> 2 b*a over F3 shows up in the product of b and c
  std::size_t bi = by_label(*a3, "b");
  std::size_t ci = by_label(*a3, "c");
  std::size_t ba = by_label(*a3, "b*a");
  CHECK(a3->table[bi][ci] == LinComb<PrimeField>{{ba, 2}});
  verify_algebra(*a3);
}

TEST_CASE("opposite_is_an_involution") {
  auto a = build_q(kBiserial);
  auto op = opposite(a);
  CHECK(op->dim() == 18);
  CHECK(opposite(op).get() == a.get());
  CHECK(same_algebra(*a, *a));
  CHECK(!same_algebra(*a, *op));
  // source counts in the opposite are target counts in the base
  std::map<std::size_t, int> base_tgt, op_src;
  for (const auto& e : a->basis) base_tgt[e.tgt]++;
  for (const auto& e : op->basis) op_src[e.src]++;
  CHECK(base_tgt == op_src);
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < a->dim(); ++j) CHECK(op->table[i][j] == a->table[j][i]);
  verify_algebra(*op);
}

TEST_CASE("enveloping_products_and_gate") {
  auto base = build_q(R"(
vertices: 0 -1
arrow b: 0 -> 0
relation b*b
)");
  auto env = enveloping(base, 8);
  CHECK(env->dim() == 9);
  CHECK(env->n_idem == 4);
  CHECK(env->radical.size() == 5);
  CHECK(env->env_base.get() == base.get());
  verify_algebra(*env);

  // (x|y)(u|w) = (xu|wy): multiply (b|e0) by (e0|b) both ways
  std::size_t be = by_label(*env, "(b|e0)");
  std::size_t eb = by_label(*env, "(e0|b)");
  std::size_t bb = by_label(*env, "(b|b)");
  CHECK(env->table[be][eb] == LinComb<Rationals>{{bb, mpq_class(1)}});
  CHECK(env->table[eb][be] == LinComb<Rationals>{{bb, mpq_class(1)}});
  std::size_t b_sq = by_label(*env, "(b|e0)");
  CHECK(env->table[b_sq][b_sq].empty());  // b*b = 0 on the left leg

  // component dimensions multiply: #(tgt = (i|j)) = dim(e_i A) * dim(A e_j)
  std::map<std::size_t, int> tgt_count;
  for (const auto& e : env->basis) tgt_count[e.tgt]++;
  std::map<std::size_t, int> base_tgt, base_src;
  for (const auto& e : base->basis) {
    base_tgt[e.tgt]++;
    base_src[e.src]++;
  }
  for (std::size_t i = 0; i < base->n_idem; ++i)
    for (std::size_t j = 0; j < base->n_idem; ++j)
      CHECK(tgt_count[i * base->n_idem + j] == base_tgt[i] * base_src[j]);

  auto big = build_q(kBiserial);
  CHECK_THROWS_AS(enveloping(big, 8), BuildError);
  auto env16 = enveloping(build_algebra(parse(cycle_tail_text(1, 1)), Rationals{}), 8);
  CHECK(env16->dim() == 16);
  verify_algebra(*env16);
}

#pragma once

// Finite dimensional algebra with a distinguished basis: normal words of a
// bound quiver presentation, or a basis derived from one (opposite,
// enveloping). Everything downstream touches only the presentation-free
// surface: basis size, source/target idempotent slots, the multiplication
// table, radical and generator index lists, and per-element factorizations
// into generators. The word data is kept for bound quiver provenance only
// (labels, normal_form).
//
// Construction runs a truncated rewriting completion: relations are
// oriented largest-term-first under deg-lex (length, then lexicographic by
// arrow declaration index, on traversal-order words), overlaps are closed,
// and normal words are enumerated. Admissible ideals make this terminate
// well below the length bound; hitting the bound is a loud failure.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "syz/dsl.hpp"
#include "syz/linalg.hpp"

namespace syz {

// input failed validation while building (non-admissible ideal, bad
// coefficients for the chosen field, size gates); CLI exit 2 territory
struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// an internal mathematical invariant failed; CLI exit 3 territory
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SYZ_CHECK(cond, msg) \
  do { \
    if (!(cond)) throw ::syz::InvariantViolation(msg); \
  } while (0)

template <ExactField F>
struct LinTerm {
  std::size_t idx;
  typename F::elem c;
  bool operator==(const LinTerm&) const = default;
};

// sparse linear combination of basis elements; sorted by idx, no zeros
template <ExactField F>
using LinComb = std::vector<LinTerm<F>>;

template <ExactField F>
void lin_add(const F& k, LinComb<F>& into, std::size_t idx, const typename F::elem& c) {
  if (k.is_zero(c)) return;
  auto it = std::lower_bound(into.begin(), into.end(), idx,
                             [](const LinTerm<F>& t, std::size_t i) { return t.idx < i; });
  if (it != into.end() && it->idx == idx) {
    it->c = k.add(it->c, c);
    if (k.is_zero(it->c)) into.erase(it);
  } else {
    into.insert(it, LinTerm<F>{idx, c});
  }
}

using Word = std::vector<std::size_t>;  // arrow indices, traversal order

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

template <ExactField F>
struct Algebra {
  using elem = typename F::elem;
  using Ptr = std::shared_ptr<const Algebra<F>>;

  enum class Prov { bound_quiver, opposite, enveloping };

  struct Elem {
    std::string label;
    unsigned length = 0;               // 0 exactly for idempotents
    std::size_t src = 0, tgt = 0;      // idempotent slots
    Word word;                         // bound quiver provenance only
    std::vector<std::size_t> factors;  // basis indices of generators, product order:
                                       // elem = factors[0] * factors[1] * ...
  };

  F k;
  FieldSpec field_spec;
  Prov prov = Prov::bound_quiver;
  AlgebraSpec spec;                       // meaningful for bound_quiver
  std::vector<std::string> idem_names;
  std::vector<Elem> basis;
  std::size_t n_idem = 0;                 // basis[0..n_idem) are the idempotents
  std::vector<std::vector<LinComb<F>>> table;  // table[i][j] = basis[i] * basis[j]
  std::vector<std::size_t> radical;       // basis indices with length >= 1
  std::vector<std::size_t> generators;    // idempotents + degree-1 elements
  std::map<Word, std::map<Word, elem, DegLex>, DegLex> rules;  // bound_quiver only
  Ptr op_link;                            // on opposite-built algebras: the base
  Ptr env_base;                           // on enveloping-built algebras: the base
  std::vector<std::pair<std::size_t, std::size_t>> env_pairs;  // slot -> base pair

  std::size_t dim() const { return basis.size(); }

  const LinComb<F>& mul_basis(std::size_t i, std::size_t j) const { return table[i][j]; }

  LinComb<F> mul_lin(const LinComb<F>& x, const LinComb<F>& y) const {
    LinComb<F> r;
    for (const auto& tx : x)
      for (const auto& ty : y)
        for (const auto& tz : table[tx.idx][ty.idx])
          lin_add(k, r, tz.idx, k.mul(k.mul(tx.c, ty.c), tz.c));
    return r;
  }
};

template <ExactField F>
using AlgPtr = std::shared_ptr<const Algebra<F>>;

// ---------------------------------------------------------------------------
// construction from a bound quiver spec

namespace detail {

template <ExactField F>
typename F::elem coef_to_field(const F& k, const mpq_class& q) {
  if constexpr (std::is_same_v<F, Rationals>) {
    return q;
  } else {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
      throw BuildError("relation coefficient out of range");
    typename F::elem num = k.from_int(q.get_num().get_si());
    typename F::elem den = k.from_int(q.get_den().get_si());
    if (k.is_zero(den))
      throw BuildError("relation coefficient has denominator divisible by the field characteristic");
    return k.mul(num, k.inv(den));
  }
}

template <ExactField F>
struct Completion {
  using elem = typename F::elem;
  using Poly = std::map<Word, elem, DegLex>;

  const F& k;
  const AlgebraSpec& spec;
  unsigned bound;
  std::map<Word, Poly, DegLex> rules;

  Completion(const F& k_, const AlgebraSpec& spec_, unsigned bound_)
      : k(k_), spec(spec_), bound(bound_) {}

  void poly_add(Poly& p, const Word& w, const elem& c) const {
    auto it = p.find(w);
    if (it == p.end()) {
      if (!k.is_zero(c)) p.emplace(w, c);
    } else {
      it->second = k.add(it->second, c);
      if (k.is_zero(it->second)) p.erase(it);
    }
  }

  // first reduction opportunity in w: leftmost position, shortest lhs there
  bool find_redex(const Word& w, std::size_t& pos, const Word** lhs) const {
    for (std::size_t at = 0; at < w.size(); ++at) {
      for (const auto& [l, r] : rules) {
        if (l.size() > w.size() - at) continue;
        if (std::equal(l.begin(), l.end(), w.begin() + at)) {
          pos = at;
          *lhs = &l;
          return true;
        }
      }
    }
    return false;
  }

  Poly reduce(Poly p) const {
    for (;;) {
      bool changed = false;
      // scan from the largest word down; restart after each rewrite
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        std::size_t pos;
        const Word* lhs;
        if (!find_redex(it->first, pos, &lhs)) continue;
        Word w = it->first;
        elem c = it->second;
        const Poly& rhs = rules.at(*lhs);
        p.erase(std::next(it).base());
        for (const auto& [u, cu] : rhs) {
          Word nw(w.begin(), w.begin() + pos);
          nw.insert(nw.end(), u.begin(), u.end());
          nw.insert(nw.end(), w.begin() + pos + lhs->size(), w.end());
          poly_add(p, nw, k.mul(c, cu));
        }
        changed = true;
        break;
      }
      if (!changed) return p;
    }
  }

  // orient a reduced nonzero polynomial into a rule
  std::pair<Word, Poly> orient(Poly p) const {
    auto largest = std::prev(p.end());
    Word lhs = largest->first;
    if (lhs.size() >= bound)
      throw BuildError(
          "rewriting completion reached the length bound; algebra may be "
          "infinite dimensional; raise bound or fix relations");
    SYZ_CHECK(lhs.size() >= 2, "rewriting produced a short leading word");
    elem inv_c = k.inv(largest->second);
    Poly rhs;
    for (auto it = p.begin(); it != largest; ++it)
      rhs.emplace(it->first, k.neg(k.mul(inv_c, it->second)));
    return {std::move(lhs), std::move(rhs)};
  }

  Poly poly_of_rule(const Word& lhs, const Poly& rhs) const {
    Poly p = rhs;
    for (auto& [w, c] : p) c = k.neg(c);
    poly_add(const_cast<Poly&>(p), lhs, k.one());
    return p;
  }

  bool contains_subword(const Word& big, const Word& small) const {
    if (small.size() > big.size()) return false;
    for (std::size_t at = 0; at + small.size() <= big.size(); ++at)
      if (std::equal(small.begin(), small.end(), big.begin() + at)) return true;
    return false;
  }

  void run(std::vector<Poly> work) {
    while (!work.empty()) {
      Poly p = reduce(std::move(work.back()));
      work.pop_back();
      if (p.empty()) continue;
      auto [lhs, rhs] = orient(std::move(p));
      // evict rules whose lhs the new lhs reduces; their content requeues
      for (auto it = rules.begin(); it != rules.end();) {
        if (it->first != lhs && contains_subword(it->first, lhs)) {
          work.push_back(poly_of_rule(it->first, it->second));
          it = rules.erase(it);
        } else {
          ++it;
        }
      }
      // critical pairs of the new rule against everything (itself included)
      for (const auto& [u, ru] : rules) {
        queue_critical_pairs(lhs, rhs, u, ru, work);
        queue_critical_pairs(u, ru, lhs, rhs, work);
      }
      queue_critical_pairs(lhs, rhs, lhs, rhs, work);
      rules.emplace(std::move(lhs), std::move(rhs));
    }
    // tidy the right-hand sides; left-hand sides are pairwise irreducible
    for (auto& [l, r] : rules) r = reduce(r);
    verify_confluence();
  }

  // border overlaps u = x s, v = s y and containments v = x u y
  void queue_critical_pairs(const Word& u, const Poly& ru, const Word& v,
                            const Poly& rv, std::vector<Poly>& work) const {
    for (std::size_t t = 1; t <= std::min(u.size(), v.size()); ++t) {
      if (!std::equal(u.end() - t, u.end(), v.begin())) continue;
      // glued word u ++ v[t:], reduced two ways
      Word tail(v.begin() + t, v.end());
      Poly a;  // via u -> ru
      for (const auto& [w, c] : ru) {
        Word nw = w;
        nw.insert(nw.end(), tail.begin(), tail.end());
        poly_add(a, nw, c);
      }
      Word head(u.begin(), u.end() - t);
      for (const auto& [w, c] : rv) {  // via v -> rv, subtracted
        Word nw = head;
        nw.insert(nw.end(), w.begin(), w.end());
        poly_add(a, nw, k.neg(c));
      }
      work.push_back(std::move(a));
    }
    for (std::size_t at = 0; at + u.size() <= v.size(); ++at) {
      if (!std::equal(u.begin(), u.end(), v.begin() + at)) continue;
      Poly a = rv;
      for (const auto& [w, c] : ru) {
        Word nw(v.begin(), v.begin() + at);
        nw.insert(nw.end(), w.begin(), w.end());
        nw.insert(nw.end(), v.begin() + at + u.size(), v.end());
        poly_add(a, nw, k.neg(c));
      }
      work.push_back(std::move(a));
    }
  }

  void verify_confluence() {
    std::vector<Poly> pairs;
    for (const auto& [u, ru] : rules)
      for (const auto& [v, rv] : rules) queue_critical_pairs(u, ru, v, rv, pairs);
    for (auto& p : pairs)
      SYZ_CHECK(reduce(std::move(p)).empty(), "rewriting system is not confluent");
  }

  bool is_normal(const Word& w) const {
    std::size_t pos;
    const Word* lhs;
    return !find_redex(w, pos, &lhs);
  }
};

}  // namespace detail

template <ExactField F>
AlgPtr<F> build_algebra(const AlgebraSpec& spec, const F& k) {
  if (spec.vertices.empty()) throw BuildError("spec has no vertices");

  unsigned max_rel_len = 0;
  for (const auto& r : spec.relations)
    for (const auto& t : r.terms)
      max_rel_len = std::max<unsigned>(max_rel_len, static_cast<unsigned>(t.arrows.size()));
  unsigned bound = spec.length_bound
                       ? *spec.length_bound
                       : 2 * static_cast<unsigned>(spec.vertices.size()) + max_rel_len;

  detail::Completion<F> comp(k, spec, bound);
  std::vector<typename detail::Completion<F>::Poly> work;
  for (const auto& r : spec.relations) {
    typename detail::Completion<F>::Poly p;
    for (const auto& t : r.terms)
      comp.poly_add(p, t.arrows, detail::coef_to_field(k, t.coef));
    work.push_back(std::move(p));
  }
  comp.run(std::move(work));
  if (!spec.arrows.empty() && bound <= 1)
    throw BuildError(
        "normal words do not become extinct by the length bound; algebra may "
        "be infinite dimensional; raise bound or fix relations");

  auto alg = std::make_shared<Algebra<F>>();
  Algebra<F>& a = *alg;
  a.k = k;
  a.field_spec = spec.field;
  a.prov = Algebra<F>::Prov::bound_quiver;
  a.spec = spec;
  a.rules = comp.rules;
  a.n_idem = spec.vertices.size();

  for (long v : spec.vertices) a.idem_names.push_back(std::to_string(v));

  // idempotents first, then normal words by length then generation order
  std::map<Word, std::size_t, DegLex> index_of_word;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    typename Algebra<F>::Elem e;
    e.label = "e" + std::to_string(spec.vertices[i]);
    e.length = 0;
    e.src = e.tgt = i;
    e.factors = {i};
    a.basis.push_back(std::move(e));
  }
  std::vector<std::size_t> frontier;  // indices of last length layer
  // length-1 layer: arrows in declaration order
  std::vector<std::size_t> arrow_basis_idx(spec.arrows.size());
  for (std::size_t ai = 0; ai < spec.arrows.size(); ++ai) {
    Word w{ai};
    SYZ_CHECK(comp.is_normal(w), "an arrow reduced to a shorter expression");
    std::size_t idx = a.basis.size();
    typename Algebra<F>::Elem e;
    e.label = spec.arrows[ai].label;
    e.length = 1;
    e.src = *spec.vertex_index(spec.arrows[ai].src);
    e.tgt = *spec.vertex_index(spec.arrows[ai].tgt);
    e.word = w;
    e.factors = {idx};
    index_of_word.emplace(w, idx);
    arrow_basis_idx[ai] = idx;
    frontier.push_back(idx);
    a.basis.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      for (std::size_t ai = 0; ai < spec.arrows.size(); ++ai) {
        const auto& arr = spec.arrows[ai];
        if (*spec.vertex_index(arr.src) != a.basis[parent].tgt) continue;
        Word w = a.basis[parent].word;
        w.push_back(ai);
        if (!comp.is_normal(w)) continue;
        if (w.size() >= bound)
          throw BuildError(
              "normal words do not become extinct by the length bound; algebra "
              "may be infinite dimensional; raise bound or fix relations");
        std::size_t idx = a.basis.size();
        typename Algebra<F>::Elem e;
        // written order under the declared convention for the label
        if (spec.conv == Convention::functional) {
          for (auto it = w.rbegin(); it != w.rend(); ++it)
            e.label += (e.label.empty() ? "" : "*") + spec.arrows[*it].label;
        } else {
          for (auto x : w) e.label += (e.label.empty() ? "" : "*") + spec.arrows[x].label;
        }
        e.length = static_cast<unsigned>(w.size());
        e.src = a.basis[parent].src;
        e.tgt = *spec.vertex_index(arr.tgt);
        e.word = w;
        // product order: last arrow first (rightmost factor applies first)
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          e.factors.push_back(arrow_basis_idx[*it]);
        index_of_word.emplace(w, idx);
        next.push_back(idx);
        a.basis.push_back(std::move(e));
      }
    }
    frontier = std::move(next);
  }

  for (std::size_t i = a.n_idem; i < a.basis.size(); ++i) a.radical.push_back(i);
  for (std::size_t i = 0; i < a.n_idem; ++i) a.generators.push_back(i);
  for (auto ai : arrow_basis_idx) a.generators.push_back(ai);

  // multiplication table: concatenate traversal words, reduce, expand
  a.table.assign(a.dim(), std::vector<LinComb<F>>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      // product basis[i] * basis[j]: j applies first
      if (a.basis[i].src != a.basis[j].tgt) continue;
      Word w = a.basis[j].word;
      w.insert(w.end(), a.basis[i].word.begin(), a.basis[i].word.end());
      if (w.empty()) {  // both idempotents at the same vertex
        a.table[i][j] = {{i, k.one()}};
        continue;
      }
      typename detail::Completion<F>::Poly p;
      comp.poly_add(p, w, k.one());
      p = comp.reduce(std::move(p));
      LinComb<F> out;
      for (const auto& [u, c] : p) {
        auto it = index_of_word.find(u);
        SYZ_CHECK(it != index_of_word.end(), "irreducible word missing from basis");
        lin_add(k, out, it->second, c);
      }
      a.table[i][j] = std::move(out);
    }
  }
  return alg;
}

// normal form of a linear combination of traversal-order words, for bound
// quiver algebras; words must be composable paths of the spec's quiver
template <ExactField F>
LinComb<F> normal_form(const Algebra<F>& a,
                       const std::vector<std::pair<mpq_class, Word>>& expr) {
  SYZ_CHECK(a.prov == Algebra<F>::Prov::bound_quiver,
            "normal_form needs a bound quiver presentation");
  detail::Completion<F> comp(a.k, a.spec, 1u << 20);
  comp.rules = a.rules;
  typename detail::Completion<F>::Poly p;
  for (const auto& [q, w] : expr) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      if (a.spec.arrows.at(w[j]).tgt != a.spec.arrows.at(w[j + 1]).src)
        throw BuildError("ill-typed path in normal_form input");
    comp.poly_add(p, w, detail::coef_to_field(a.k, q));
  }
  p = comp.reduce(std::move(p));
  LinComb<F> out;
  for (const auto& [u, c] : p) {
    if (u.empty()) continue;  // cannot happen: relations sit in length >= 2
    // locate the basis slot of the irreducible word
    bool found = false;
    for (std::size_t i = a.n_idem; i < a.dim(); ++i)
      if (a.basis[i].word == u) {
        lin_add(a.k, out, i, c);
        found = true;
        break;
      }
    SYZ_CHECK(found, "irreducible word missing from basis");
  }
  return out;
}

// ---------------------------------------------------------------------------
// derived constructions

template <ExactField F>
AlgPtr<F> opposite(const AlgPtr<F>& base) {
  if (base->op_link) return base->op_link;
  auto alg = std::make_shared<Algebra<F>>();
  Algebra<F>& a = *alg;
  a.k = base->k;
  a.field_spec = base->field_spec;
  a.prov = Algebra<F>::Prov::opposite;
  a.spec = base->spec;
  a.idem_names = base->idem_names;
  a.n_idem = base->n_idem;
  a.basis = base->basis;
  for (auto& e : a.basis) {
    std::swap(e.src, e.tgt);
    std::reverse(e.word.begin(), e.word.end());  // informational only
    std::reverse(e.factors.begin(), e.factors.end());
  }
  a.radical = base->radical;
  a.generators = base->generators;
  a.table.assign(a.dim(), std::vector<LinComb<F>>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) a.table[i][j] = base->table[j][i];
  a.op_link = base;
  return alg;
}

template <ExactField F>
AlgPtr<F> enveloping(const AlgPtr<F>& base, std::size_t dim_gate) {
  if (base->dim() > dim_gate)
    throw BuildError("enveloping algebra gated: base dimension " +
                     std::to_string(base->dim()) + " exceeds limit " +
                     std::to_string(dim_gate));
  const F& k = base->k;
  auto alg = std::make_shared<Algebra<F>>();
  Algebra<F>& a = *alg;
  a.k = k;
  a.field_spec = base->field_spec;
  a.prov = Algebra<F>::Prov::enveloping;
  a.env_base = base;
  const std::size_t d = base->dim();
  a.n_idem = base->n_idem * base->n_idem;

  auto pair_idem_slot = [&](std::size_t i, std::size_t j) { return i * base->n_idem + j; };
  for (std::size_t i = 0; i < base->n_idem; ++i)
    for (std::size_t j = 0; j < base->n_idem; ++j)
      a.idem_names.push_back("(" + base->idem_names[i] + "|" + base->idem_names[j] + ")");

  // basis: idempotent pairs first (keeping the slot convention), then the
  // remaining pairs in lexicographic order of base indices
  std::vector<std::size_t> slot_of_pair(d * d, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pair_of_slot;
  pair_of_slot.reserve(d * d);
  for (std::size_t i = 0; i < base->n_idem; ++i)
    for (std::size_t j = 0; j < base->n_idem; ++j) pair_of_slot.push_back({i, j});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (x >= base->n_idem || y >= base->n_idem) pair_of_slot.push_back({x, y});
  for (std::size_t s = 0; s < pair_of_slot.size(); ++s)
    slot_of_pair[pair_of_slot[s].first * d + pair_of_slot[s].second] = s;
  a.env_pairs = pair_of_slot;

  for (std::size_t s = 0; s < pair_of_slot.size(); ++s) {
    auto [x, y] = pair_of_slot[s];
    const auto& bx = base->basis[x];
    const auto& by = base->basis[y];
    typename Algebra<F>::Elem e;
    e.label = "(" + bx.label + "|" + by.label + ")";
    e.length = bx.length + by.length;
    e.tgt = pair_idem_slot(bx.tgt, by.src);
    e.src = pair_idem_slot(bx.src, by.tgt);
    // (x|y) = (x|e_src y) * (e_src x|y); expand both through base factors
    for (std::size_t g : bx.factors)
      e.factors.push_back(slot_of_pair[g * d + by.src]);
    for (auto it = by.factors.rbegin(); it != by.factors.rend(); ++it)
      e.factors.push_back(slot_of_pair[bx.src * d + *it]);
    if (e.length > 0) a.radical.push_back(s);
    a.basis.push_back(std::move(e));
  }

  for (std::size_t i = 0; i < a.n_idem; ++i) a.generators.push_back(i);
  for (std::size_t g : base->generators) {
    if (base->basis[g].length == 0) continue;
    for (std::size_t j = 0; j < base->n_idem; ++j)
      a.generators.push_back(slot_of_pair[g * d + j]);
  }
  for (std::size_t g : base->generators) {
    if (base->basis[g].length == 0) continue;
    for (std::size_t i = 0; i < base->n_idem; ++i)
      a.generators.push_back(slot_of_pair[i * d + g]);
  }

  // (x|y)(u|w) = (xu | wy)
  a.table.assign(a.dim(), std::vector<LinComb<F>>(a.dim()));
  for (std::size_t s = 0; s < a.dim(); ++s) {
    auto [x, y] = pair_of_slot[s];
    for (std::size_t t = 0; t < a.dim(); ++t) {
      auto [u, w] = pair_of_slot[t];
      const LinComb<F>& left = base->table[x][u];
      const LinComb<F>& right = base->table[w][y];
      LinComb<F> out;
      for (const auto& lt : left)
        for (const auto& rt : right)
          lin_add(k, out, slot_of_pair[lt.idx * d + rt.idx], k.mul(lt.c, rt.c));
      a.table[s][t] = std::move(out);
    }
  }
  return alg;
}

// structural identity: same object, or opposite/enveloping links matching,
// or equal content (labels, table); modules use this to guard operations
template <ExactField F>
bool same_algebra(const Algebra<F>& a, const Algebra<F>& b) {
  if (&a == &b) return true;
  if (a.prov != b.prov || a.dim() != b.dim() || a.n_idem != b.n_idem) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis[i].label != b.basis[i].label || a.basis[i].src != b.basis[i].src ||
        a.basis[i].tgt != b.basis[i].tgt)
      return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto& x = a.table[i][j];
      const auto& y = b.table[i][j];
      if (x.size() != y.size()) return false;
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].idx != y[t].idx || !a.k.eq(x[t].c, y[t].c)) return false;
    }
  return true;
}

// replays the algebra axioms on the finished structure; used by tests and
// by the CLI's self-check path
template <ExactField F>
void verify_algebra(const Algebra<F>& a) {
  const F& k = a.k;
  // idempotents: orthogonal, sum to the identity
  for (std::size_t i = 0; i < a.n_idem; ++i) {
    SYZ_CHECK(a.basis[i].length == 0, "idempotent with positive length");
    for (std::size_t j = 0; j < a.n_idem; ++j) {
      const auto& p = a.table[i][j];
      if (i == j) {
        SYZ_CHECK(p.size() == 1 && p[0].idx == i && k.eq(p[0].c, k.one()),
                  "idempotent not idempotent");
      } else {
        SYZ_CHECK(p.empty(), "idempotents not orthogonal");
      }
    }
  }
  for (std::size_t b = 0; b < a.dim(); ++b) {
    LinComb<F> left, right;
    for (std::size_t i = 0; i < a.n_idem; ++i) {
      for (const auto& t : a.table[i][b]) lin_add(k, left, t.idx, t.c);
      for (const auto& t : a.table[b][i]) lin_add(k, right, t.idx, t.c);
    }
    LinComb<F> self{{b, k.one()}};
    SYZ_CHECK(left == self && right == self, "identity does not act as identity");
    SYZ_CHECK((a.basis[b].length == 0) ==
                  (std::find(a.radical.begin(), a.radical.end(), b) == a.radical.end()),
              "radical basis must be exactly the positive-length elements");
  }
  // associativity on all triples
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      const auto& xy = a.table[x][y];
      for (std::size_t z = 0; z < a.dim(); ++z) {
        LinComb<F> lhs;
        for (const auto& t : xy)
          for (const auto& u : a.table[t.idx][z]) lin_add(k, lhs, u.idx, k.mul(t.c, u.c));
        LinComb<F> rhs;
        for (const auto& t : a.table[y][z])
          for (const auto& u : a.table[x][t.idx]) lin_add(k, rhs, u.idx, k.mul(u.c, t.c));
        SYZ_CHECK(lhs == rhs, "multiplication not associative");
      }
    }
  // factorizations reproduce their elements
  for (std::size_t b = 0; b < a.dim(); ++b) {
    SYZ_CHECK(!a.basis[b].factors.empty(), "element without factorization");
    LinComb<F> acc{{a.basis[b].factors[0], k.one()}};
    for (std::size_t t = 1; t < a.basis[b].factors.size(); ++t)
      acc = a.mul_lin(acc, LinComb<F>{{a.basis[b].factors[t], k.one()}});
    LinComb<F> self{{b, k.one()}};
    SYZ_CHECK(acc == self, "factorization does not reproduce the element");
  }
  // source/target slots match the idempotent action
  for (std::size_t b = 0; b < a.dim(); ++b) {
    LinComb<F> self{{b, k.one()}};
    SYZ_CHECK(a.table[a.basis[b].tgt][b] == self, "target idempotent mismatch");
    SYZ_CHECK(a.table[b][a.basis[b].src] == self, "source idempotent mismatch");
  }
  // radical nilpotence: iterate J^t until zero, must die within dim steps
  std::vector<LinComb<F>> layer;
  for (std::size_t r : a.radical) layer.push_back(LinComb<F>{{r, k.one()}});
  std::size_t steps = 0;
  while (!layer.empty()) {
    SYZ_CHECK(++steps <= a.dim() + 1, "radical is not nilpotent");
    std::vector<LinComb<F>> next;
    for (std::size_t r : a.radical)
      for (const auto& x : layer) {
        LinComb<F> p = a.mul_lin(LinComb<F>{{r, k.one()}}, x);
        if (!p.empty()) next.push_back(std::move(p));
      }
    // prune to an independent set to keep growth in check
    if (!next.empty()) {
      Mat<F> m(next.size(), a.dim(), k.zero());
      for (std::size_t i = 0; i < next.size(); ++i)
        for (const auto& t : next[i]) m.at(i, t.idx) = t.c;
      Mat<F> basis_rows = row_space_basis(k, m);
      next.clear();
      for (std::size_t i = 0; i < basis_rows.rows; ++i) {
        LinComb<F> v;
        for (std::size_t j = 0; j < a.dim(); ++j)
          if (!k.is_zero(basis_rows.at(i, j))) v.push_back({j, basis_rows.at(i, j)});
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
}

}  // namespace syz

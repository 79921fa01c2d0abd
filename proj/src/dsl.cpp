#include "syz/dsl.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace syz {

namespace {

// Cursor over a single (comment-stripped) line. All positions 1-based.
struct LineCursor {
  const std::string& s;
  int line;
  std::size_t i = 0;

  LineCursor(const std::string& text, int line_no) : s(text), line(line_no) {}

  int col() const { return static_cast<int>(i) + 1; }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }

  void skip_ws() {
    while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }

  bool eat_str(const std::string& t) {
    skip_ws();
    if (s.compare(i, t.size(), t) == 0) {
      i += t.size();
      return true;
    }
    return false;
  }

  long integer(const std::string& what) {
    skip_ws();
    std::size_t start = i;
    if (peek() == '-') ++i;
    std::size_t digits = i;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) {
      i = start;
      fail("expected integer " + what);
    }
    try {
      return std::stol(s.substr(start, i - start));
    } catch (const std::out_of_range&) {
      i = start;
      fail("integer out of range");
    }
  }

  bool at_integer() {
    skip_ws();
    return !done() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                       (s[i] == '-' && i + 1 < s.size() &&
                        std::isdigit(static_cast<unsigned char>(s[i + 1]))));
  }

  bool at_ident() {
    skip_ws();
    return !done() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_');
  }

  std::string ident(const std::string& what) {
    skip_ws();
    if (!at_ident()) fail("expected " + what);
    std::size_t start = i;
    while (!done() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }

  void end_of_line(const std::string& what) {
    skip_ws();
    if (!done()) fail("unexpected trailing input after " + what);
  }
};

struct Parser {
  AlgebraSpec spec;
  bool saw_vertices = false, saw_conv = false, saw_field = false, saw_bound = false;
  std::unordered_map<std::string, std::size_t> arrow_by_label;
  std::unordered_set<long> vertex_set;

  void vertices_line(LineCursor& c) {
    if (saw_vertices) c.fail("duplicate vertices directive");
    saw_vertices = true;
    c.skip_ws();
    while (!c.done()) {
      int at = c.col();
      long v = c.integer("vertex label");
      if (!vertex_set.insert(v).second)
        throw ParseError(c.line, at, "duplicate vertex label " + std::to_string(v));
      spec.vertices.push_back(v);
      c.skip_ws();
    }
    if (spec.vertices.empty()) c.fail("empty vertex list");
  }

  void arrow_line(LineCursor& c) {
    std::string label = c.ident("arrow label");
    if (arrow_by_label.count(label)) c.fail("duplicate arrow label '" + label + "'");
    c.expect(':', "after arrow label");
    c.skip_ws();
    int src_at = c.col();
    long src = c.integer("source vertex");
    c.skip_ws();
    if (!c.eat_str("->")) c.fail("expected '->' between arrow endpoints");
    c.skip_ws();
    int tgt_at = c.col();
    long tgt = c.integer("target vertex");
    c.end_of_line("arrow declaration");
    if (!vertex_set.count(src))
      throw ParseError(c.line, src_at, "unknown vertex " + std::to_string(src));
    if (!vertex_set.count(tgt))
      throw ParseError(c.line, tgt_at, "unknown vertex " + std::to_string(tgt));
    arrow_by_label[label] = spec.arrows.size();
    spec.arrows.push_back({label, src, tgt});
  }

  // path in source order; returns arrow indices still in source order
  std::vector<std::size_t> path(LineCursor& c) {
    std::vector<std::size_t> written;
    for (;;) {
      int at = c.col();
      std::string label = c.ident("arrow label");
      auto it = arrow_by_label.find(label);
      if (it == arrow_by_label.end())
        throw ParseError(c.line, at, "unknown arrow '" + label + "'");
      written.push_back(it->second);
      std::size_t save = c.i;
      if (!c.eat('*')) break;
      if (!c.at_ident()) {  // trailing '*' with no factor
        c.i = save;
        break;
      }
    }
    return written;
  }

  void relation_line(LineCursor& c) {
    Relation rel;
    rel.line = c.line;
    bool first = true;
    mpq_class sign = 1;
    c.skip_ws();
    if (c.eat('-')) sign = -1;
    for (;;) {
      c.skip_ws();
      int term_at = c.col();
      mpq_class coef = sign;
      if (c.at_integer()) {
        long num = c.integer("coefficient");
        mpq_class q(num);
        if (c.eat('/')) {
          long den = c.integer("denominator");
          if (den == 0) throw ParseError(c.line, term_at, "zero denominator");
          q = mpq_class(num, den);
          q.canonicalize();
        }
        if (q == 0) throw ParseError(c.line, term_at, "zero coefficient");
        coef *= q;
        c.expect('*', "between coefficient and path");
      }
      std::vector<std::size_t> written = path(c);
      RelTerm term;
      term.coef = coef;
      term.arrows = written;
      if (spec.conv == Convention::functional)
        std::reverse(term.arrows.begin(), term.arrows.end());
      // composability in traversal order
      for (std::size_t j = 0; j + 1 < term.arrows.size(); ++j) {
        const Arrow& x = spec.arrows[term.arrows[j]];
        const Arrow& y = spec.arrows[term.arrows[j + 1]];
        if (x.tgt != y.src)
          throw ParseError(c.line, term_at,
                           "path does not compose: '" + x.label + "' ends at " +
                               std::to_string(x.tgt) + " but '" + y.label +
                               "' starts at " + std::to_string(y.src));
      }
      if (term.arrows.size() < 2)
        throw ParseError(c.line, term_at,
                         "relation contains a path of length 1 (ideal must sit in "
                         "the square of the arrow ideal)");
      if (!first) {
        const RelTerm& t0 = rel.terms.front();
        if (spec.path_source(term.arrows) != spec.path_source(t0.arrows) ||
            spec.path_target(term.arrows) != spec.path_target(t0.arrows))
          throw ParseError(c.line, term_at, "non-parallel relation");
      }
      rel.terms.push_back(std::move(term));
      first = false;
      c.skip_ws();
      if (c.done()) break;
      if (c.eat('+')) sign = 1;
      else if (c.eat('-')) sign = -1;
      else c.fail("expected '+', '-' or end of line after relation term");
    }
    spec.relations.push_back(std::move(rel));
  }

  void convention_line(LineCursor& c) {
    if (saw_conv) c.fail("duplicate convention directive");
    saw_conv = true;
    if (!spec.relations.empty())
      c.fail("convention directive must precede relations");
    std::string v = c.ident("convention name");
    if (v == "functional") spec.conv = Convention::functional;
    else if (v == "diagrammatic") spec.conv = Convention::diagrammatic;
    else c.fail("unknown convention '" + v + "' (functional or diagrammatic)");
    c.end_of_line("convention directive");
  }

  void field_line(LineCursor& c) {
    if (saw_field) c.fail("duplicate field directive");
    saw_field = true;
    c.skip_ws();
    int at = c.col();
    std::string v = c.ident("field name");
    if (v == "Q") {
      spec.field = FieldSpec::rationals();
    } else if (v == "Fp") {
      c.expect('(', "after Fp");
      long p = c.integer("field characteristic");
      c.expect(')', "after characteristic");
      try {
        PrimeField check(p);  // primality, positivity
      } catch (const std::invalid_argument& e) {
        throw ParseError(c.line, at, e.what());
      }
      spec.field = FieldSpec::prime(p);
    } else if (v.size() > 1 && v[0] == 'F' &&
               v.find_first_not_of("0123456789", 1) == std::string::npos) {
      try {
        long p = std::stol(v.substr(1));  // F2, F32003 shorthand
        PrimeField check(p);
        spec.field = FieldSpec::prime(p);
      } catch (const std::exception& e) {
        throw ParseError(c.line, at, std::string("bad field characteristic: ") + e.what());
      }
    } else {
      c.fail("unknown field '" + v + "' (use Q or Fp(<prime>))");
    }
    c.end_of_line("field directive");
  }

  void bound_line(LineCursor& c) {
    if (saw_bound) c.fail("duplicate bound directive");
    saw_bound = true;
    c.skip_ws();
    int at = c.col();
    long b = c.integer("length bound");
    if (b <= 0) throw ParseError(c.line, at, "length bound must be positive");
    spec.length_bound = static_cast<unsigned>(b);
    c.end_of_line("bound directive");
  }

  void feed(const std::string& raw, int line_no) {
    std::string text = raw;
    if (auto h = text.find('#'); h != std::string::npos) text.resize(h);
    LineCursor c(text, line_no);
    c.skip_ws();
    if (c.done()) return;
    std::string key = c.ident("directive");
    if (key == "vertices") {
      c.expect(':', "after 'vertices'");
      vertices_line(c);
    } else if (key == "arrow") {
      arrow_line(c);
    } else if (key == "relation") {
      if (!saw_vertices) c.fail("relation before vertices directive");
      relation_line(c);
    } else if (key == "convention") {
      c.expect(':', "after 'convention'");
      convention_line(c);
    } else if (key == "field") {
      c.expect(':', "after 'field'");
      field_line(c);
    } else if (key == "bound") {
      c.expect(':', "after 'bound'");
      bound_line(c);
    } else {
      throw ParseError(line_no, 1, "unknown directive '" + key + "'");
    }
  }
};

}  // namespace

AlgebraSpec parse(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    p.feed(line, line_no);
  }
  if (!p.saw_vertices) throw ParseError(line_no + 1, 1, "empty vertex list (no vertices directive)");
  return p.spec;
}

std::string render(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "vertices:";
  for (long v : spec.vertices) out << " " << v;
  out << "\n";
  out << "field: " << spec.field.str() << "\n";
  out << "convention: "
      << (spec.conv == Convention::functional ? "functional" : "diagrammatic")
      << "\n";
  if (spec.length_bound) out << "bound: " << *spec.length_bound << "\n";
  for (const auto& a : spec.arrows)
    out << "arrow " << a.label << ": " << a.src << " -> " << a.tgt << "\n";
  for (const auto& r : spec.relations) {
    out << "relation ";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
      const RelTerm& term = r.terms[t];
      mpq_class c = term.coef;
      if (t == 0) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      mpq_class ac = abs(c);
      if (ac != 1) out << ac.get_str() << "*";
      std::vector<std::size_t> written = term.arrows;
      if (spec.conv == Convention::functional)
        std::reverse(written.begin(), written.end());
      for (std::size_t j = 0; j < written.size(); ++j) {
        if (j) out << "*";
        out << spec.arrows[written[j]].label;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace syz

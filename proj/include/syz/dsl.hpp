#pragma once

// Textual .quiver format: vertices, arrows, relations, options. Line
// oriented, # comments, declaration before use. See README for the grammar.
//
// Paths are stored in traversal order (first applied arrow first)
// regardless of the composition convention; the convention only controls
// how source text maps to traversal order. Under the functional convention
// "a*b" means b applies first, so the written word is reversed on parse.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syz/linalg.hpp"

namespace syz {

struct ParseError : std::runtime_error {
  int line, col;  // 1-based
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

enum class Convention { functional, diagrammatic };

struct Arrow {
  std::string label;
  long src = 0, tgt = 0;
  bool operator==(const Arrow&) const = default;
};

// One summand of a relation: coefficient times a path, path given by arrow
// indices in traversal order.
struct RelTerm {
  mpq_class coef;
  std::vector<std::size_t> arrows;
  bool operator==(const RelTerm&) const = default;
};

struct Relation {
  std::vector<RelTerm> terms;
  int line = 0;  // diagnostics only, not part of structural identity
  bool operator==(const Relation& o) const { return terms == o.terms; }
};

struct AlgebraSpec {
  std::vector<long> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  Convention conv = Convention::functional;
  std::optional<unsigned> length_bound;
  FieldSpec field;

  bool all_monomial() const {
    for (const auto& r : relations)
      if (r.terms.size() != 1) return false;
    return true;
  }

  std::optional<std::size_t> vertex_index(long v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return i;
    return std::nullopt;
  }

  // source/target of a traversal-order path
  long path_source(const std::vector<std::size_t>& path) const {
    return arrows[path.front()].src;
  }
  long path_target(const std::vector<std::size_t>& path) const {
    return arrows[path.back()].tgt;
  }

  bool operator==(const AlgebraSpec& o) const {
    return vertices == o.vertices && arrows == o.arrows &&
           relations == o.relations && conv == o.conv &&
           length_bound == o.length_bound && field == o.field;
  }
};

AlgebraSpec parse(const std::string& text);
std::string render(const AlgebraSpec& spec);

}  // namespace syz

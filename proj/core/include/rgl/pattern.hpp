#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rgl/graph.hpp"

namespace rgl {

/// Symbolic description of a target graph. Construct through the factory
/// functions, which validate parameters and normalise part order.
class Pattern {
 public:
  struct Clique {
    int p;
    friend bool operator==(const Clique&, const Clique&) = default;
  };
  /// Parts sorted non-decreasing.
  struct CompleteMultipartite {
    std::vector<int> parts;
    friend bool operator==(const CompleteMultipartite&, const CompleteMultipartite&) = default;
  };
  /// K_1 + n*h: one apex over n disjoint copies of h.
  struct JoinOne {
    Graph h;
    int n;
    friend bool operator==(const JoinOne&, const JoinOne&) = default;
  };
  /// B_{k,t}: a k-clique joined to t-k independent vertices.
  struct Book {
    int k;
    int t;
    friend bool operator==(const Book&, const Book&) = default;
  };
  /// K_{1,m}.
  struct Star {
    int m;
    friend bool operator==(const Star&, const Star&) = default;
  };
  /// n disjoint copies of h.
  struct Union {
    Graph h;
    int n;
    friend bool operator==(const Union&, const Union&) = default;
  };
  struct Explicit {
    Graph g;
    friend bool operator==(const Explicit&, const Explicit&) = default;
  };

  using Variant =
      std::variant<Clique, CompleteMultipartite, JoinOne, Book, Star, Union, Explicit>;

  static Pattern clique(int p);
  static Pattern complete_multipartite(std::vector<int> parts);
  static Pattern join_one(Graph h, int n);
  /// F_n = K_1 + n K_2.
  static Pattern fan(int n);
  static Pattern book(int k, int t);
  static Pattern star(int m);
  static Pattern union_of(Graph h, int n);
  static Pattern explicit_graph(Graph g);

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  /// Number of vertices of the concrete graph.
  int order() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  explicit Pattern(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Concrete graph for a pattern. Vertices are laid out role by role in the
/// order reported by pattern_roles().
Graph build_pattern(const Pattern& pattern);

/// Sizes of the role blocks of build_pattern(pattern), in label order.
///   Clique: [p]. CompleteMultipartite: one block per part.
///   JoinOne: [1 (apex), |h|, ..., |h|]. Book: [k (spine), t-k (pages)].
///   Star: [1 (centre), m]. Union: [|h|] * n. Explicit: [|g|].
std::vector<int> pattern_roles(const Pattern& pattern);

/// Short human description, e.g. "K_3(1,2,2)". Not the CLI grammar.
std::string describe(const Pattern& pattern);

}  // namespace rgl

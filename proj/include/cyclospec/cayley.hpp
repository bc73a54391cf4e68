#pragma once

// Cayley graphs of finite abelian groups Z_{n1} x ... x Z_{nm} and their
// integer Laplacians.

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclospec/errors.hpp"

namespace cyclospec {

/// Group element as one residue per cyclic factor.
using Element = std::vector<long>;

class GroupSpec {
 public:
  explicit GroupSpec(std::vector<long> orders);
  static GroupSpec cyclic(long n) { return GroupSpec({n}); }

  [[nodiscard]] const std::vector<long>& orders() const noexcept { return orders_; }
  [[nodiscard]] long order() const noexcept { return order_; }
  [[nodiscard]] bool is_cyclic() const noexcept { return orders_.size() == 1; }

  /// All elements in lexicographic order of residue tuples.
  [[nodiscard]] std::vector<Element> elements() const;
  /// Position of `e` in elements().
  [[nodiscard]] long index_of(const Element& e) const;

  [[nodiscard]] Element reduce(Element e) const;
  [[nodiscard]] Element add(const Element& x, const Element& y) const;
  [[nodiscard]] Element inverse(const Element& x) const;
  [[nodiscard]] bool is_identity(const Element& x) const;

  /// "Z6", "Z2xZ3".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<long> orders_;
  long order_ = 1;
};

/// Generators reduced into the group, deduplicated and sorted. The identity
/// is rejected.
class GeneratorSet {
 public:
  GeneratorSet(const GroupSpec& group, std::vector<Element> generators);
  /// The unit vector of every nontrivial factor ({1} for Z_n).
  static GeneratorSet standard(const GroupSpec& group);

  [[nodiscard]] const std::vector<Element>& generators() const noexcept { return gens_; }

 private:
  std::vector<Element> gens_;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  explicit Graph(long vertex_count);

  void add_edge(long u, long v);
  [[nodiscard]] bool has_edge(long u, long v) const;
  [[nodiscard]] long vertex_count() const noexcept { return n_; }
  [[nodiscard]] const std::set<std::pair<long, long>>& edges() const noexcept { return edges_; }
  [[nodiscard]] long degree(long v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  long n_;
  std::set<std::pair<long, long>> edges_;  // stored with first < second
};

/// Square matrix of exact integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  /// Throws DimensionError on a ragged or non-square input.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  long& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  [[nodiscard]] bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<long> entries_;
};

/// Edge {g, g*s} for every g and s in gens or its inverses; vertices follow
/// GroupSpec::elements(). Order-2 generators yield a single edge.
Graph cayley_graph(const GroupSpec& group, const GeneratorSet& gens);

/// Degree on the diagonal, -1 per edge.
IntMatrix laplacian_of(const Graph& g);

Graph complement(const Graph& g);

/// Backtracking isomorphism test; throws SizeLimitError above 10 vertices.
bool isomorphic_small(const Graph& g1, const Graph& g2);

Graph path_graph(long n);
Graph complete_graph(long n);

struct CayleySpec {
  GroupSpec group;
  GeneratorSet gens;
  std::string text;

  [[nodiscard]] Graph graph() const { return cayley_graph(group, gens); }
  /// True for Z_n with the standard generator.
  [[nodiscard]] bool is_standard_cycle() const;
};

/// Parses "Z6", "Z2xZ3", "Z6[1,2]" or "Z2xZ3[(1,0);(0,1)]".
/// Throws ParseError (or IdentityGeneratorError) on bad input.
CayleySpec parse_group_spec(std::string_view text);

}  // namespace cyclospec

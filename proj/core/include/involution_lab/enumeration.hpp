#pragma once

// Exhaustive ground truth: p-th roots of the identity in S_n, the block
// label map, refined classes, the constrained multigraphs that index the
// involution classes, and the vertex/edge weight system on those graphs.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "involution_lab/bivariate_poly.hpp"
#include "involution_lab/exact_int.hpp"

namespace involution_lab {

/// Caps for the exhaustive generators. Defaults are deliberately modest;
/// callers raise them explicitly.
struct EnumerationLimits {
  std::uint64_t max_permutations = 10'000'000;
  std::uint32_t max_vertices = 8;
};

/// Bijection on {1..n}, stored as its one-indexed image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws ArgumentError unless images is a permutation of 1..n.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n);
  /// Builds from disjoint cycles; elements not mentioned are fixed.
  static Permutation from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i - 1]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation compose(const Permutation& inner) const;
  Permutation power(std::uint32_t exponent) const;
  bool is_identity() const;

  /// Disjoint cycles including fixed points, each starting at its smallest
  /// element, ordered by that element.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Cycle with possibly repeated labels, stored as its least rotation.
/// Reflections are distinct: (4,5,6) != (4,6,5).
class LabeledCycle {
 public:
  LabeledCycle() = default;
  explicit LabeledCycle(std::vector<std::uint32_t> entries);

  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  /// All entries equal (a type-A cycle when the length is p).
  bool is_uniform() const;

  friend auto operator<=>(const LabeledCycle&, const LabeledCycle&) = default;

 private:
  std::vector<std::uint32_t> entries_;
};

/// Class key of the refined quotient: labels whose block is a single
/// uniform p-cycle or p fixed points, plus the remaining labeled cycles with
/// multiplicities (sorted by cycle).
struct RefinedClass {
  std::vector<std::uint32_t> bag_members;
  std::vector<std::pair<LabeledCycle, std::uint32_t>> cycle_multiset;

  friend auto operator<=>(const RefinedClass&, const RefinedClass&) = default;
};

struct GraphEdge {
  std::uint32_t a = 0;  // a < b
  std::uint32_t b = 0;
  std::uint32_t multiplicity = 1;  // 1 or 2

  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

/// Loopless multigraph on v_1..v_V with degree <= 2, edge multiplicity <= 2
/// and, for odd n, deg(v_V) <= 1. Edges are kept sorted by (a, b).
struct ConstrainedGraph {
  std::uint32_t vertex_count = 0;
  std::vector<GraphEdge> edges;

  /// Degree of each vertex counted with multiplicity; index 0 is v_1.
  std::vector<std::uint32_t> degrees() const;

  friend auto operator<=>(const ConstrainedGraph&, const ConstrainedGraph&) = default;
};

/// f_p(i) = floor((i - 1) / p) + 1.
constexpr std::uint32_t block_label(std::uint32_t element, std::uint32_t p) { return (element - 1) / p + 1; }

/// Number of pth roots of the identity in S_n, by the cycle-removal count
/// used to size the generator before it runs.
ExactInt predicted_root_count(std::uint32_t n, std::uint32_t p);

/// Every pi in S_n with pi^p = 1, exactly once, in lexicographic order of
/// image lists. Built by choosing the cycle through the smallest unplaced
/// element. Throws ResourceError when the predicted count exceeds the cap
/// and ArgumentError for non-prime p.
std::vector<Permutation> enumerate_pth_roots(std::uint32_t n, std::uint32_t p, const EnumerationLimits& limits = {});

/// Same set by filtering all n! permutations; only for n <= 8.
std::vector<Permutation> enumerate_pth_roots_by_filter(std::uint32_t n, std::uint32_t p);

/// Multiset f_p(pi) of labeled cycles, sorted. Throws ArgumentError unless
/// pi^p = 1.
std::vector<LabeledCycle> label_map(const Permutation& pi, std::uint32_t p);

RefinedClass refined_class(const Permutation& pi, std::uint32_t p);

/// Throws ArgumentError when H is not a valid class for (n, p).
void validate_class(const RefinedClass& h, std::uint32_t p, std::uint32_t n);

/// Closed-form fiber size (1 + (p-1)!)^h (p!)^(t-h) r! / prod m_i!.
ExactInt class_size_formula(const RefinedClass& h, std::uint32_t p, std::uint32_t n);

/// Groups permutations by refined class.
std::map<RefinedClass, std::vector<Permutation>> group_by_refined_class(std::span<const Permutation> perms,
                                                                        std::uint32_t p);

/// Vertex count of the graphs for size n: ceil(n / 2).
constexpr std::uint32_t graph_vertex_count(std::uint32_t n) { return n / 2 + n % 2; }

bool is_constrained_graph(const ConstrainedGraph& g, std::uint32_t n);

/// Involution class (p = 2) to its graph. Throws ArgumentError when H is not
/// a valid p = 2 class for n.
ConstrainedGraph graph_of_class(const RefinedClass& h, std::uint32_t n);
/// Inverse of graph_of_class.
RefinedClass class_of_graph(const ConstrainedGraph& g, std::uint32_t n);

/// All graphs for size n in DFS order over vertex pairs. Throws
/// ResourceError when the vertex count exceeds the cap.
std::vector<ConstrainedGraph> enumerate_graphs(std::uint32_t n, const EnumerationLimits& limits = {});

/// Number of doubled edges.
std::uint32_t two_cycle_count(const ConstrainedGraph& g);

/// 2^(floor(n/2) - two_cycle_count(g)).
ExactInt fiber_size_2(const ConstrainedGraph& g, std::uint32_t n);

/// x^(fixed points) y^(transpositions). Throws ArgumentError for
/// non-involutions.
BivariatePoly weight_of_permutation(const Permutation& pi);

/// Product of vertex and edge weights: edges y; interior vertices 1, x,
/// (x^2 + y)/2 for degree 2, 1, 0; the extra vertex of odd n 1 or x for
/// degree 1 or 0.
BivariatePoly weight_of_graph(const ConstrainedGraph& g, std::uint32_t n);

/// Count / weight sum over graphs without doubled edges.
ExactInt g_bruteforce(std::uint32_t n, const EnumerationLimits& limits = {});
BivariatePoly g_poly_bruteforce(std::uint32_t n, const EnumerationLimits& limits = {});

}  // namespace involution_lab

#include "involution_lab/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "involution_lab/algebra.hpp"
#include "involution_lab/errors.hpp"

namespace involution_lab {

namespace {

void require_prime(std::uint32_t p, const char* op) {
  if (!is_prime(p)) throw ArgumentError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (std::uint32_t v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) throw ArgumentError("image list is not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::uint32_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1U);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1U);
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::uint32_t from = cycle[i];
      if (from == 0 || from > n || used[from]) throw ArgumentError("cycles are not disjoint subsets of 1..n");
      used[from] = true;
      images[from - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw ArgumentError("compose: size mismatch");
  std::vector<std::uint32_t> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = images_[inner.images_[i] - 1];
  return Permutation(std::move(out));
}

Permutation Permutation::power(std::uint32_t exponent) const {
  Permutation result = identity(size());
  for (std::uint32_t i = 0; i < exponent; ++i) result = compose(result);
  return result;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> visited(size() + 1, false);
  for (std::uint32_t start = 1; start <= size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t i = start; !visited[i]; i = images_[i - 1]) {
      visited[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LabeledCycle

LabeledCycle::LabeledCycle(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) return;
  std::vector<std::uint32_t> best = entries_;
  std::vector<std::uint32_t> candidate = entries_;
  for (std::size_t shift = 1; shift < entries_.size(); ++shift) {
    std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
    if (candidate < best) best = candidate;
  }
  entries_ = std::move(best);
}

bool LabeledCycle::is_uniform() const {
  return std::adjacent_find(entries_.begin(), entries_.end(), std::not_equal_to<>()) == entries_.end();
}

// ---------------------------------------------------------------------------
// pth roots

ExactInt predicted_root_count(std::uint32_t n, std::uint32_t p) {
  // count(m) = count(m-1) + (m-1)(m-2)...(m-p+1) count(m-p)
  std::vector<ExactInt> count(n + 1, ExactInt(1));
  for (std::uint32_t m = p; m <= n; ++m) {
    ExactInt arrangements(1);
    for (std::uint32_t j = 1; j < p; ++j) arrangements *= ExactInt(static_cast<std::int64_t>(m - j));
    count[m] = count[m - 1] + arrangements * count[m - p];
  }
  return count[n];
}

namespace {

class RootGenerator {
 public:
  RootGenerator(std::uint32_t n, std::uint32_t p) : n_(n), p_(p), images_(n, 0) {}

  std::vector<Permutation> run() {
    place_next();
    return std::move(out_);
  }

 private:
  void place_next() {
    std::uint32_t first = 0;
    while (first < n_ && images_[first] != 0) ++first;
    if (first == n_) {
      out_.emplace_back(images_);
      return;
    }
    images_[first] = first + 1;
    place_next();
    images_[first] = 0;

    std::vector<std::uint32_t> cycle{first};
    extend_cycle(cycle);
  }

  // Ordered choice of the remaining p - 1 cycle members after `first`.
  void extend_cycle(std::vector<std::uint32_t>& cycle) {
    if (cycle.size() == p_) {
      for (std::size_t i = 0; i < p_; ++i) images_[cycle[i]] = cycle[(i + 1) % p_] + 1;
      place_next();
      for (std::uint32_t member : cycle) images_[member] = 0;
      return;
    }
    for (std::uint32_t cand = cycle.front() + 1; cand < n_; ++cand) {
      if (images_[cand] != 0 || std::find(cycle.begin(), cycle.end(), cand) != cycle.end()) continue;
      cycle.push_back(cand);
      extend_cycle(cycle);
      cycle.pop_back();
    }
  }

  std::uint32_t n_;
  std::uint32_t p_;
  std::vector<std::uint32_t> images_;  // 0 = unplaced
  std::vector<Permutation> out_;
};

}  // namespace

std::vector<Permutation> enumerate_pth_roots(std::uint32_t n, std::uint32_t p, const EnumerationLimits& limits) {
  require_prime(p, "enumerate_pth_roots");
  const ExactInt predicted = predicted_root_count(n, p);
  if (predicted > ExactInt(static_cast<std::int64_t>(limits.max_permutations))) {
    throw ResourceError("enumerate_pth_roots(" + std::to_string(n) + ", " + std::to_string(p) + "): predicted " +
                            predicted.to_string() + " permutations exceeds cap " +
                            std::to_string(limits.max_permutations),
                        predicted.to_string());
  }
  auto roots = RootGenerator(n, p).run();
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Permutation> enumerate_pth_roots_by_filter(std::uint32_t n, std::uint32_t p) {
  require_prime(p, "enumerate_pth_roots_by_filter");
  if (n > 8) {
    throw ResourceError("filter enumeration is limited to n <= 8", factorial(n).to_string());
  }
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1U);
  std::vector<Permutation> out;
  do {
    Permutation pi(images);
    if (pi.power(p).is_identity()) out.push_back(std::move(pi));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Label map and refined classes

std::vector<LabeledCycle> label_map(const Permutation& pi, std::uint32_t p) {
  require_prime(p, "label_map");
  std::vector<LabeledCycle> out;
  for (const auto& cycle : pi.cycles()) {
    if (cycle.size() != 1 && cycle.size() != p) {
      throw ArgumentError("label_map: permutation is not a " + std::to_string(p) + "th root of the identity");
    }
    std::vector<std::uint32_t> labels;
    labels.reserve(cycle.size());
    for (std::uint32_t i : cycle) labels.push_back(block_label(i, p));
    out.emplace_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RefinedClass refined_class(const Permutation& pi, std::uint32_t p) {
  const auto labeled = label_map(pi, p);
  RefinedClass h;
  for (auto it = labeled.begin(); it != labeled.end();) {
    auto end = std::find_if(it, labeled.end(), [&](const LabeledCycle& c) { return c != *it; });
    const auto multiplicity = static_cast<std::uint32_t>(end - it);
    const bool uniform_p_cycle = it->length() == p && it->is_uniform();
    const bool full_fixed_block = it->length() == 1 && multiplicity == p;
    if (uniform_p_cycle || full_fixed_block) {
      h.bag_members.push_back(it->entries().front());
    } else {
      h.cycle_multiset.emplace_back(*it, multiplicity);
    }
    it = end;
  }
  std::sort(h.bag_members.begin(), h.bag_members.end());
  return h;
}

void validate_class(const RefinedClass& h, std::uint32_t p, std::uint32_t n) {
  require_prime(p, "validate_class");
  const std::uint32_t t = n / p;
  const std::uint32_t r = n % p;
  const std::uint32_t max_label = r > 0 ? t + 1 : t;

  auto fail = [](const std::string& why) { throw ArgumentError("inconsistent refined class: " + why); };

  std::vector<std::uint64_t> occurrences(max_label + 2, 0);
  for (std::size_t i = 0; i < h.bag_members.size(); ++i) {
    const std::uint32_t s = h.bag_members[i];
    if (s == 0 || s > t) fail("bag label " + std::to_string(s) + " outside [1, t]");
    if (i > 0 && h.bag_members[i - 1] >= s) fail("bag labels not strictly increasing");
  }
  for (std::size_t i = 0; i < h.cycle_multiset.size(); ++i) {
    const auto& [cycle, mult] = h.cycle_multiset[i];
    if (i > 0 && !(h.cycle_multiset[i - 1].first < cycle)) fail("cycle multiset not sorted/unique");
    if (cycle.length() != 1 && cycle.length() != p) fail("cycle length must be 1 or p");
    if (mult == 0) fail("zero multiplicity");
    if (cycle.length() == 1 && mult >= p) fail("1-cycle multiplicity must be < p");
    if (cycle.length() == p && cycle.is_uniform()) fail("uniform p-cycle belongs in the bag");
    if (cycle.length() == p && mult > p) fail("p-cycle multiplicity must be <= p");
    for (std::uint32_t label : cycle.entries()) {
      if (label == 0 || label > max_label) fail("label " + std::to_string(label) + " out of range");
      occurrences[label] += mult;
    }
  }
  for (std::uint32_t s : h.bag_members) {
    if (occurrences[s] != 0) fail("bag label " + std::to_string(s) + " also occurs in a cycle");
    occurrences[s] = p;
  }
  for (std::uint32_t j = 1; j <= t; ++j) {
    if (occurrences[j] != p) fail("label " + std::to_string(j) + " occurs " + std::to_string(occurrences[j]) +
                                  " times, expected " + std::to_string(p));
  }
  if (r > 0 && occurrences[t + 1] != r) fail("last label must occur exactly r times");
}

ExactInt class_size_formula(const RefinedClass& h, std::uint32_t p, std::uint32_t n) {
  validate_class(h, p, n);
  const std::uint32_t t = n / p;
  const std::uint32_t r = n % p;
  const auto bag = static_cast<std::uint32_t>(h.bag_members.size());

  ExactInt numerator(1);
  const ExactInt per_bag = factorial(p - 1) + ExactInt(1);
  const ExactInt per_block = factorial(p);
  for (std::uint32_t i = 0; i < bag; ++i) numerator *= per_bag;
  for (std::uint32_t i = bag; i < t; ++i) numerator *= per_block;
  numerator *= factorial(r);

  ExactInt denominator(1);
  for (const auto& [cycle, mult] : h.cycle_multiset) denominator *= factorial(mult);

  auto quotient = numerator.exact_quotient(denominator);
  if (!quotient) {
    throw InvariantViolation("class size " + numerator.to_string() + "/" + denominator.to_string() +
                             " is not an integer");
  }
  return *quotient;
}

std::map<RefinedClass, std::vector<Permutation>> group_by_refined_class(std::span<const Permutation> perms,
                                                                        std::uint32_t p) {
  std::map<RefinedClass, std::vector<Permutation>> groups;
  for (const auto& pi : perms) groups[refined_class(pi, p)].push_back(pi);
  return groups;
}

// ---------------------------------------------------------------------------
// Constrained graphs

std::vector<std::uint32_t> ConstrainedGraph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count, 0);
  for (const auto& e : edges) {
    if (e.a >= 1 && e.a <= vertex_count) deg[e.a - 1] += e.multiplicity;
    if (e.b >= 1 && e.b <= vertex_count) deg[e.b - 1] += e.multiplicity;
  }
  return deg;
}

bool is_constrained_graph(const ConstrainedGraph& g, std::uint32_t n) {
  if (g.vertex_count != graph_vertex_count(n)) return false;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.a == 0 || e.a >= e.b || e.b > g.vertex_count) return false;
    if (e.multiplicity < 1 || e.multiplicity > 2) return false;
    if (i > 0 && std::pair(g.edges[i - 1].a, g.edges[i - 1].b) >= std::pair(e.a, e.b)) return false;
  }
  const auto deg = g.degrees();
  for (std::uint32_t v = 0; v < g.vertex_count; ++v) {
    const bool extra_vertex = (n % 2 == 1) && v + 1 == g.vertex_count;
    if (deg[v] > (extra_vertex ? 1U : 2U)) return false;
  }
  return true;
}

namespace {

void require_graph(const ConstrainedGraph& g, std::uint32_t n) {
  if (!is_constrained_graph(g, n)) {
    throw ArgumentError("graph is not a member of the constrained class for n = " + std::to_string(n));
  }
}

}  // namespace

ConstrainedGraph graph_of_class(const RefinedClass& h, std::uint32_t n) {
  validate_class(h, 2, n);
  ConstrainedGraph g;
  g.vertex_count = graph_vertex_count(n);
  for (const auto& [cycle, mult] : h.cycle_multiset) {
    if (cycle.length() != 2) continue;
    const auto& e = cycle.entries();
    g.edges.push_back({std::min(e[0], e[1]), std::max(e[0], e[1]), mult});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

RefinedClass class_of_graph(const ConstrainedGraph& g, std::uint32_t n) {
  require_graph(g, n);
  const std::uint32_t t = n / 2;
  const auto deg = g.degrees();
  RefinedClass h;
  for (std::uint32_t v = 1; v <= g.vertex_count; ++v) {
    const std::uint32_t d = deg[v - 1];
    if (v <= t) {
      if (d == 0) h.bag_members.push_back(v);
      if (d == 1) h.cycle_multiset.emplace_back(LabeledCycle({v}), 1U);
    } else if (d == 0) {
      h.cycle_multiset.emplace_back(LabeledCycle({v}), 1U);
    }
  }
  for (const auto& e : g.edges) h.cycle_multiset.emplace_back(LabeledCycle({e.a, e.b}), e.multiplicity);
  std::sort(h.cycle_multiset.begin(), h.cycle_multiset.end());
  return h;
}

namespace {

class GraphGenerator {
 public:
  explicit GraphGenerator(std::uint32_t n) : vertices_(graph_vertex_count(n)), degree_(vertices_, 0) {
    for (std::uint32_t a = 1; a <= vertices_; ++a) {
      for (std::uint32_t b = a + 1; b <= vertices_; ++b) pairs_.emplace_back(a, b);
    }
    capacity_.assign(vertices_, 2);
    if (n % 2 == 1 && vertices_ > 0) capacity_.back() = 1;
  }

  std::vector<ConstrainedGraph> run() {
    visit(0);
    return std::move(out_);
  }

 private:
  void visit(std::size_t pair_index) {
    if (pair_index == pairs_.size()) {
      out_.push_back({vertices_, edges_});
      return;
    }
    const auto [a, b] = pairs_[pair_index];
    visit(pair_index + 1);
    for (std::uint32_t mult = 1; mult <= 2; ++mult) {
      if (degree_[a - 1] + mult > capacity_[a - 1] || degree_[b - 1] + mult > capacity_[b - 1]) break;
      degree_[a - 1] += mult;
      degree_[b - 1] += mult;
      edges_.push_back({a, b, mult});
      visit(pair_index + 1);
      edges_.pop_back();
      degree_[a - 1] -= mult;
      degree_[b - 1] -= mult;
    }
  }

  std::uint32_t vertices_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> capacity_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<GraphEdge> edges_;
  std::vector<ConstrainedGraph> out_;
};

}  // namespace

std::vector<ConstrainedGraph> enumerate_graphs(std::uint32_t n, const EnumerationLimits& limits) {
  const std::uint32_t vertices = graph_vertex_count(n);
  if (vertices > limits.max_vertices) {
    throw ResourceError("enumerate_graphs(" + std::to_string(n) + "): " + std::to_string(vertices) +
                            " vertices exceeds cap " + std::to_string(limits.max_vertices),
                        std::to_string(vertices));
  }
  return GraphGenerator(n).run();
}

std::uint32_t two_cycle_count(const ConstrainedGraph& g) {
  return static_cast<std::uint32_t>(
      std::count_if(g.edges.begin(), g.edges.end(), [](const GraphEdge& e) { return e.multiplicity == 2; }));
}

ExactInt fiber_size_2(const ConstrainedGraph& g, std::uint32_t n) {
  require_graph(g, n);
  return ExactInt::power_of_two(n / 2 - two_cycle_count(g));
}

BivariatePoly weight_of_permutation(const Permutation& pi) {
  std::uint32_t fixed = 0;
  std::uint32_t transpositions = 0;
  for (const auto& cycle : pi.cycles()) {
    if (cycle.size() == 1) {
      ++fixed;
    } else if (cycle.size() == 2) {
      ++transpositions;
    } else {
      throw ArgumentError("weight_of_permutation: not an involution");
    }
  }
  return BivariatePoly::monomial(fixed, transpositions);
}

BivariatePoly weight_of_graph(const ConstrainedGraph& g, std::uint32_t n) {
  require_graph(g, n);
  const BivariatePoly isolated = (BivariatePoly::monomial(2, 0) + BivariatePoly::y()).scaled(Dyadic::half());
  const std::uint32_t t = n / 2;
  const auto deg = g.degrees();

  BivariatePoly weight = BivariatePoly::constant(Dyadic(1));
  std::uint32_t x_power = 0;
  std::uint32_t y_power = 0;
  for (const auto& e : g.edges) y_power += e.multiplicity;
  for (std::uint32_t v = 1; v <= g.vertex_count; ++v) {
    const std::uint32_t d = deg[v - 1];
    if (v <= t) {
      if (d == 1) ++x_power;
      if (d == 0) weight *= isolated;
    } else if (d == 0) {
      ++x_power;
    }
  }
  return weight.shifted(x_power, y_power);
}

ExactInt g_bruteforce(std::uint32_t n, const EnumerationLimits& limits) {
  std::int64_t count = 0;
  for (const auto& g : enumerate_graphs(n, limits)) {
    if (two_cycle_count(g) == 0) ++count;
  }
  return ExactInt(count);
}

BivariatePoly g_poly_bruteforce(std::uint32_t n, const EnumerationLimits& limits) {
  BivariatePoly sum;
  for (const auto& g : enumerate_graphs(n, limits)) {
    if (two_cycle_count(g) == 0) sum += weight_of_graph(g, n);
  }
  return sum;
}

}  // namespace involution_lab

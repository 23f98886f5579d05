#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtk/exact_num.hpp"
#include "dtk/exact_solver.hpp"
#include "dtk/instance.hpp"
#include "dtk/knapsack.hpp"
#include "dtk/metric.hpp"
#include "dtk/network.hpp"

// Knapsack -> single-source dilation-bounded spanning tree.
//
// Every item i becomes a triangle gadget a_i, b_i, c_i hanging off the
// negative y-axis, with side lengths |a_i b_i| = gamma_i, |a_i c_i| = beta_i
// and |c_i b_i| = alpha_i. Routing the root path through c_i instead of
// straight down a_i b_i costs w_i extra delay and saves p_i of tree length.
// Far below the ladder sit d_0, d_1 and the corner point d_2 whose dilation
// dominates every regular tree.
//
// Everything here is exact: integers and rationals for the construction and
// ExactNum (sums of radicals) for lengths. No floating point participates in
// any decision.
namespace dtk::reduction {

struct GadgetQuantities {
  std::vector<Integer> alpha;   // p_i + w_i
  std::vector<Integer> beta;    // 2 p_i + w_i
  std::vector<Integer> gamma;   // 3 p_i + w_i
  std::vector<Integer> offset;  // L_i = sum_{j<i} (gamma_j + m) = |a_1 a_i|
  Integer m;                    // max gamma_i
  Integer L;                    // sum_i (gamma_i + m)
};

GadgetQuantities gadget_quantities(const knapsack::KnapsackInstance& source);

/// Approximate gadget apex together with the exact one it stands for.
struct PlacedApex {
  Point approx;             // c~ = a + (x~, -drop~), coordinates multiples of 2^-k
  Rational drop;            // exact distance of c's projection below a
  Rational x_squared;       // exact squared distance of c from the axis
};

/// Places c right of the y-axis with |ac| = beta and |cb| = alpha, where
/// a, b lie on the axis with |ab| = gamma. The projection below a is
/// (gamma^2 + beta^2 - alpha^2) / (2 gamma); the horizontal offset is
/// floor(sqrt(x^2) * 2^k) / 2^k and the vertical offset is rounded to the
/// nearest multiple of 2^-k. Throws UsageError on a degenerate triangle.
PlacedApex place_apex(const Point& a, const Point& b, const Integer& alpha,
                      const Integer& beta, const Integer& gamma, unsigned k);

struct Roles {
  Vertex r = 0;
  std::vector<Vertex> a, b, c;
  std::array<Vertex, 3> d{};
};

/// Which of the three gadget edges a regular tree leaves out.
enum class Drop { AB, AC, BC };

struct ReductionArtifact {
  knapsack::KnapsackInstance source;
  GadgetQuantities quantities;
  Roles roles;
  unsigned k = 0;                 // scaling exponent, 2^k > 600 n L
  Rational epsilon;               // 1 / (600 n L)
  Rational delta;                 // 7/5 + W/(10L) + 1/(20L)
  Integer cost_bound;             // ceil(l(T~0) 2^k) - P 2^k + 2^(k-1), scaled units
  std::vector<Point> unscaled;    // S~ before multiplying by 2^k
  std::vector<PlacedApex> apexes; // per item
  Instance instance;              // integer coordinates, exact mode, (delta, cost_bound)

  Integer scale() const { return power_of_two(k); }
};

/// Builds S~ (3n+4 points) and the decision bounds; re-verifies the
/// construction invariants in exact arithmetic before returning.
ReductionArtifact build_reduction(const knapsack::KnapsackInstance& source);

/// All regular edges: r a_1, a_i b_i, b_i c_i, a_i c_i, b_i a_{i+1},
/// b_n d_0, d_0 d_1, d_1 d_2.
std::vector<Edge> regular_edges(const Roles& roles);

/// The regular tree leaving out drops[i] in gadget i.
Tree regular_tree(const ReductionArtifact& artifact, std::span<const Drop> drops);

/// T_0: every gadget leaves out a_i c_i.
Tree base_tree(const ReductionArtifact& artifact);

/// T_I: leaves out a_i b_i for selected items (0-based) and a_i c_i otherwise.
Tree selection_tree(const ReductionArtifact& artifact, const std::vector<std::size_t>& selected);

/// Metric of the scaled output instance.
Metric<ExactNum> scaled_metric(const ReductionArtifact& artifact);
/// Metric of S~ before scaling.
Metric<ExactNum> perturbed_metric(const ReductionArtifact& artifact);
/// Metric of the ideal set S with exact apexes. Pairs whose length is a
/// nested radical (c_i with d_2 or with another apex) are undefined; every
/// regular edge and every root distance is available.
Metric<ExactNum> ideal_metric(const ReductionArtifact& artifact);

struct AuditCheck {
  std::string lemma;
  std::string claim;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool passed() const;
  std::string summary() const;
};

struct AuditOptions {
  std::size_t exhaustive_regular_limit = 729;  // all 3^n regular trees up to this count
  std::size_t regular_samples = 1000;
  std::size_t exhaustive_selection_limit = 1024;  // all 2^n selections up to this count
  std::size_t selection_samples = 1000;
  std::uint64_t seed = 1;
};

/// Machine-checks the construction and the inequalities the hardness
/// argument rests on, each with exact comparisons. Check order is fixed.
AuditReport audit_lemmas(const ReductionArtifact& artifact, const AuditOptions& options = {});

/// Decides the tree problem on an instance (delta and cost bound taken from
/// it); returns a witness tree or nullopt. May throw GuardExceeded.
using TreeDecider = std::function<std::optional<Tree>(const Instance&)>;

/// Branch-and-bound decider in exact arithmetic.
TreeDecider exact_decider(std::size_t max_n = kSolverGuard, unsigned threads = 1);

struct ReductionAnswer {
  bool positive = false;
  std::optional<Tree> witness;
};

ReductionAnswer answer_via_reduction(const knapsack::KnapsackInstance& source,
                                     const TreeDecider& decider);

/// Sidecar document: {"delta","cost_bound","k","epsilon","L","m","roles"}.
std::string save_sidecar(const ReductionArtifact& artifact);

std::string to_string(std::span<const Drop> drops);

}  // namespace dtk::reduction

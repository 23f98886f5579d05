#include "dtk/reduction.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk::reduction {
namespace {

using knapsack::KnapsackInstance;

Rational q(const Integer& value) { return Rational(value); }

Rational q(long num, const Integer& den) {
  Rational out(Integer(num), den);
  out.canonicalize();
  return out;
}

Point scaled(const Point& p, const Integer& factor) {
  return {p.x * q(factor), p.y * q(factor)};
}

// Smallest integer >= value, decided exactly.
Integer ceil_exact(const RadicalSum& value) {
  if (auto r = value.as_rational()) return ceil_of(*r);
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = value.enclose(bits);
    Integer f = floor_of(lo);
    if (f == floor_of(hi)) return f + 1;
  }
}

// ceil(log2(value)) for value >= 1.
unsigned ceil_log2(const Integer& value) {
  if (value <= 1) return 0;
  return static_cast<unsigned>(bit_length(Integer(value - 1)));
}

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

std::string fmt(const ExactNum& value) { return fmt(value.approx()); }

bool abs_less(const ExactNum& diff, const ExactNum& bound) {
  return diff < bound && ExactNum() - diff < bound;
}

class Auditor {
 public:
  explicit Auditor(AuditReport& report) : report_(report) {}

  // Opens a check; subsequent fail() calls attach to it.
  void begin(std::string lemma, std::string claim) {
    report_.checks.push_back({std::move(lemma), std::move(claim), true, {}});
    failures_ = 0;
  }

  void fail(const std::string& what) {
    AuditCheck& check = report_.checks.back();
    check.passed = false;
    if (failures_++ == 0) check.detail = what;
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  void note(const std::string& what) {
    AuditCheck& check = report_.checks.back();
    if (check.passed) check.detail = what;
  }

 private:
  AuditReport& report_;
  std::size_t failures_ = 0;
};

std::vector<std::vector<Drop>> regular_sample(std::size_t n, const AuditOptions& options) {
  std::vector<std::vector<Drop>> out;
  std::size_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > options.exhaustive_regular_limit / 3) {
      exhaustive = false;
      break;
    }
    total *= 3;
  }
  if (exhaustive && total <= options.exhaustive_regular_limit) {
    std::vector<Drop> drops(n, Drop::AB);
    for (;;) {
      out.push_back(drops);
      std::size_t pos = 0;
      while (pos < n) {
        int next = static_cast<int>(drops[pos]) + 1;
        if (next < 3) {
          drops[pos] = static_cast<Drop>(next);
          break;
        }
        drops[pos++] = Drop::AB;
      }
      if (pos == n) break;
    }
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick(0, 2);
  out.push_back(std::vector<Drop>(n, Drop::AC));
  while (out.size() < options.regular_samples) {
    std::vector<Drop> drops(n);
    for (auto& d : drops) d = static_cast<Drop>(pick(rng));
    out.push_back(std::move(drops));
  }
  return out;
}

std::vector<std::vector<std::size_t>> selection_sample(std::size_t n, const AuditOptions& options) {
  std::vector<std::vector<std::size_t>> out;
  auto from_mask = [n](std::uint64_t mask) {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sel.push_back(i);
    return sel;
  };
  if (n < 63 && (std::uint64_t{1} << n) <= options.exhaustive_selection_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(from_mask(mask));
    return out;
  }
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(0.5);
  out.push_back({});
  while (out.size() < options.selection_samples) {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) sel.push_back(i);
    out.push_back(std::move(sel));
  }
  return out;
}

}  // namespace

GadgetQuantities gadget_quantities(const KnapsackInstance& source) {
  GadgetQuantities g;
  g.m = 0;
  for (const auto& item : source.items()) {
    Integer p(std::to_string(item.profit));
    Integer w(std::to_string(item.weight));
    g.alpha.push_back(p + w);
    g.beta.push_back(2 * p + w);
    g.gamma.push_back(3 * p + w);
    if (g.gamma.back() > g.m) g.m = g.gamma.back();
  }
  g.L = 0;
  for (const Integer& gamma : g.gamma) {
    g.offset.push_back(g.L);
    g.L += gamma + g.m;
  }
  return g;
}

PlacedApex place_apex(const Point& a, const Point& b, const Integer& alpha, const Integer& beta,
                      const Integer& gamma, unsigned k) {
  if (a.x != 0 || b.x != 0 || a.y - b.y != q(gamma)) {
    throw UsageError("apex placement needs a above b on the y-axis with |ab| = gamma");
  }
  if (alpha <= 0 || beta <= 0 || gamma <= 0 || alpha + beta <= gamma || alpha + gamma <= beta ||
      beta + gamma <= alpha) {
    throw UsageError("degenerate gadget triangle (" + alpha.get_str() + ", " + beta.get_str() +
                     ", " + gamma.get_str() + ")");
  }
  PlacedApex out;
  out.drop = Rational(gamma * gamma + beta * beta - alpha * alpha, 2 * gamma);
  out.drop.canonicalize();
  out.x_squared = q(beta * beta) - out.drop * out.drop;

  const Integer unit = power_of_two(k);
  Integer x_units = isqrt(floor_of(out.x_squared * q(unit * unit)));
  Integer drop_units = floor_of(out.drop * q(unit) + Rational(1, 2));
  if (x_units <= 0) {
    throw UsageError("apex lies within 2^-k of the axis; increase the precision");
  }
  out.approx.x = Rational(x_units, unit);
  out.approx.x.canonicalize();
  Rational drop_approx(drop_units, unit);
  drop_approx.canonicalize();
  out.approx.y = a.y - drop_approx;
  return out;
}

std::vector<Edge> regular_edges(const Roles& roles) {
  const std::size_t n = roles.a.size();
  std::vector<Edge> edges;
  edges.push_back(make_edge(roles.r, roles.a.front()));
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back(make_edge(roles.a[i], roles.b[i]));
    edges.push_back(make_edge(roles.b[i], roles.c[i]));
    edges.push_back(make_edge(roles.a[i], roles.c[i]));
    if (i + 1 < n) edges.push_back(make_edge(roles.b[i], roles.a[i + 1]));
  }
  edges.push_back(make_edge(roles.b.back(), roles.d[0]));
  edges.push_back(make_edge(roles.d[0], roles.d[1]));
  edges.push_back(make_edge(roles.d[1], roles.d[2]));
  return edges;
}

Tree regular_tree(const ReductionArtifact& artifact, std::span<const Drop> drops) {
  const Roles& roles = artifact.roles;
  const std::size_t n = roles.a.size();
  if (drops.size() != n) throw UsageError("need one drop per gadget");
  std::vector<Edge> edges;
  edges.push_back(make_edge(roles.r, roles.a.front()));
  for (std::size_t i = 0; i < n; ++i) {
    if (drops[i] != Drop::AB) edges.push_back(make_edge(roles.a[i], roles.b[i]));
    if (drops[i] != Drop::BC) edges.push_back(make_edge(roles.b[i], roles.c[i]));
    if (drops[i] != Drop::AC) edges.push_back(make_edge(roles.a[i], roles.c[i]));
    if (i + 1 < n) edges.push_back(make_edge(roles.b[i], roles.a[i + 1]));
  }
  edges.push_back(make_edge(roles.b.back(), roles.d[0]));
  edges.push_back(make_edge(roles.d[0], roles.d[1]));
  edges.push_back(make_edge(roles.d[1], roles.d[2]));
  return Tree::from_network(Network(artifact.instance.size(), std::move(edges)), roles.r);
}

Tree base_tree(const ReductionArtifact& artifact) {
  std::vector<Drop> drops(artifact.roles.a.size(), Drop::AC);
  return regular_tree(artifact, drops);
}

Tree selection_tree(const ReductionArtifact& artifact, const std::vector<std::size_t>& selected) {
  std::vector<Drop> drops(artifact.roles.a.size(), Drop::AC);
  for (std::size_t i : selected) {
    if (i >= drops.size()) throw UsageError("selected item out of range");
    drops[i] = Drop::AB;
  }
  return regular_tree(artifact, drops);
}

ReductionArtifact build_reduction(const KnapsackInstance& source) {
  const std::size_t n = source.size();
  if (n == 0) throw UsageError("knapsack instance has no items");
  GadgetQuantities g = gadget_quantities(source);
  const Integer& L = g.L;

  Roles roles;
  roles.r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    roles.a.push_back(1 + i);
    roles.b.push_back(1 + n + i);
    roles.c.push_back(1 + 2 * n + i);
  }
  roles.d = {1 + 3 * n, 2 + 3 * n, 3 + 3 * n};

  const Integer precision_base = 600 * Integer(std::to_string(n)) * L;
  const unsigned k = ceil_log2(precision_base) + 1;
  const Integer unit = power_of_two(k);

  std::vector<Point> pts(3 * n + 4);
  pts[roles.r] = {0, 0};
  std::vector<PlacedApex> apexes;
  for (std::size_t i = 0; i < n; ++i) {
    pts[roles.a[i]] = {0, q(-4 * L - g.offset[i])};
    pts[roles.b[i]] = {0, pts[roles.a[i]].y - q(g.gamma[i])};
    apexes.push_back(place_apex(pts[roles.a[i]], pts[roles.b[i]], g.alpha[i], g.beta[i],
                                g.gamma[i], k));
    pts[roles.c[i]] = apexes.back().approx;
  }
  pts[roles.d[0]] = {0, q(-5 * L)};
  pts[roles.d[1]] = {0, q(-8 * L)};
  pts[roles.d[2]] = {q(-6 * L), q(-8 * L)};

  std::vector<Point> scaled_pts;
  for (const Point& p : pts) scaled_pts.push_back(scaled(p, unit));

  Rational delta = Rational(7, 5) + q(source.weight_bound(), 10 * L) + q(1, 20 * L);
  Rational epsilon(Integer(1), precision_base);
  epsilon.canonicalize();

  // Provisional instance to measure the base tree; bounds filled in below.
  Instance provisional(ArithmeticMode::Exact, scaled_pts, roles.r, delta);
  ReductionArtifact artifact{source, g, roles, k, epsilon, delta, 0, pts, apexes, provisional};
  Metric<ExactNum> metric(provisional);
  RadicalSum base_cost = cost(base_tree(artifact), metric).exact();
  artifact.cost_bound = ceil_exact(base_cost) - Integer(std::to_string(source.profit_bound())) * unit +
                        power_of_two(k - 1);
  artifact.instance = provisional.with_cost_bound(q(artifact.cost_bound));

  // Exact re-verification of the construction invariants.
  for (std::size_t i = 0; i < n; ++i) {
    if (squared_distance(pts[roles.a[i]], pts[roles.b[i]]) != q(g.gamma[i] * g.gamma[i]) ||
        (i + 1 < n &&
         squared_distance(pts[roles.b[i]], pts[roles.a[i + 1]]) != q(g.m * g.m)) ||
        !(pts[roles.c[i]].x > 0)) {
      throw std::logic_error("reduction construction violated a gadget invariant");
    }
  }
  if (!(unit > precision_base)) throw std::logic_error("scaling exponent too small");
  for (const Point& p : artifact.instance.points()) {
    if (p.x.get_den() != 1 || p.y.get_den() != 1) {
      throw std::logic_error("scaled coordinates are not integers");
    }
  }
  return artifact;
}

Metric<ExactNum> scaled_metric(const ReductionArtifact& artifact) {
  return Metric<ExactNum>(artifact.instance);
}

Metric<ExactNum> perturbed_metric(const ReductionArtifact& artifact) {
  return Metric<ExactNum>(artifact.unscaled);
}

Metric<ExactNum> ideal_metric(const ReductionArtifact& artifact) {
  const Roles& roles = artifact.roles;
  const std::size_t n = roles.a.size();
  std::vector<std::optional<std::size_t>> apex_of(artifact.unscaled.size());
  for (std::size_t i = 0; i < n; ++i) apex_of[roles.c[i]] = i;
  const auto& pts = artifact.unscaled;
  return Metric<ExactNum>::from_squared(
      pts.size(), [&](Vertex u, Vertex v) -> std::optional<Rational> {
        if (apex_of[u] && apex_of[v]) return std::nullopt;
        if (!apex_of[u] && !apex_of[v]) return squared_distance(pts[u], pts[v]);
        Vertex c = apex_of[u] ? u : v;
        Vertex p = apex_of[u] ? v : u;
        if (pts[p].x != 0) return std::nullopt;  // nested radical
        const std::size_t i = *apex_of[c];
        const PlacedApex& apex = artifact.apexes[i];
        Rational cy = pts[roles.a[i]].y - apex.drop;
        Rational dy = cy - pts[p].y;
        return apex.x_squared + dy * dy;
      });
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

std::string AuditReport::summary() const {
  std::ostringstream out;
  for (const AuditCheck& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.lemma << ": " << c.claim;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string to_string(std::span<const Drop> drops) {
  std::string out = "[";
  for (std::size_t i = 0; i < drops.size(); ++i) {
    if (i) out += ",";
    out += drops[i] == Drop::AB ? "AB" : (drops[i] == Drop::AC ? "AC" : "BC");
  }
  return out + "]";
}

AuditReport audit_lemmas(const ReductionArtifact& artifact, const AuditOptions& options) {
  AuditReport report;
  Auditor audit(report);
  const Roles& roles = artifact.roles;
  const GadgetQuantities& g = artifact.quantities;
  const std::size_t n = roles.a.size();
  const Integer unit = artifact.scale();
  const Rational L = q(g.L);
  const Rational n_q = q(Integer(std::to_string(n)));
  const auto& items = artifact.source.items();

  Metric<ExactNum> scaled = scaled_metric(artifact);
  Metric<ExactNum> perturbed = perturbed_metric(artifact);
  Metric<ExactNum> ideal = ideal_metric(artifact);
  const Vertex d0 = roles.d[0], d1 = roles.d[1], d2 = roles.d[2];

  audit.begin("gadget", "0 < alpha < beta < gamma < alpha + beta, gamma - beta = p, "
                        "alpha + beta - gamma = w");
  for (std::size_t i = 0; i < n; ++i) {
    Integer p(std::to_string(items[i].profit)), w(std::to_string(items[i].weight));
    bool ok = 0 < g.alpha[i] && g.alpha[i] < g.beta[i] && g.beta[i] < g.gamma[i] &&
              g.gamma[i] < g.alpha[i] + g.beta[i] && g.gamma[i] - g.beta[i] == p &&
              g.alpha[i] + g.beta[i] - g.gamma[i] == w && g.gamma[i] + w == g.alpha[i] + g.beta[i];
    audit.expect(ok, "item " + std::to_string(i));
  }

  audit.begin("construction", "3n+4 points, |a_i b_i| = gamma_i, |b_i a_i+1| = m, exact apex "
                              "sides beta_i and alpha_i");
  audit.expect(artifact.instance.size() == 3 * n + 4, "point count");
  for (std::size_t i = 0; i < n; ++i) {
    audit.expect(perturbed(roles.a[i], roles.b[i]) == ExactNum(q(g.gamma[i])),
                 "|a b| != gamma at item " + std::to_string(i));
    if (i + 1 < n) {
      audit.expect(perturbed(roles.b[i], roles.a[i + 1]) == ExactNum(q(g.m)),
                   "|b a'| != m at item " + std::to_string(i));
    }
    audit.expect(ideal(roles.a[i], roles.c[i]) == ExactNum(q(g.beta[i])),
                 "exact |a c| != beta at item " + std::to_string(i));
    audit.expect(ideal(roles.c[i], roles.b[i]) == ExactNum(q(g.alpha[i])),
                 "exact |c b| != alpha at item " + std::to_string(i));
  }

  audit.begin("approximation", "c~_i right of the axis, |c_i c~_i| < eps, ||a c~| - beta| < eps, "
                               "||c~ b| - alpha| < eps");
  const ExactNum eps(artifact.epsilon);
  const Rational step(Integer(1), unit);
  for (std::size_t i = 0; i < n; ++i) {
    const PlacedApex& apex = artifact.apexes[i];
    const Point& c = artifact.unscaled[roles.c[i]];
    audit.expect(c.x > 0, "apex on or left of the axis at item " + std::to_string(i));
    // x~ <= x < x~ + 2^-k and |drop - drop~| <= 2^-(k+1)
    bool x_ok = c.x * c.x <= apex.x_squared && apex.x_squared < (c.x + step) * (c.x + step);
    Rational drop_err = (artifact.unscaled[roles.a[i]].y - c.y) - apex.drop;
    bool y_ok = abs(drop_err) <= step / 2;
    Rational err_sq_bound = step * step + step * step / 4;
    audit.expect(x_ok && y_ok && err_sq_bound < artifact.epsilon * artifact.epsilon,
                 "apex error bound at item " + std::to_string(i));
    audit.expect(abs_less(perturbed(roles.a[i], roles.c[i]) - ExactNum(q(g.beta[i])), eps),
                 "||a c~| - beta| >= eps at item " + std::to_string(i));
    audit.expect(abs_less(perturbed(roles.c[i], roles.b[i]) - ExactNum(q(g.alpha[i])), eps),
                 "||c~ b| - alpha| >= eps at item " + std::to_string(i));
  }

  audit.begin("scaling", "integer coordinates, 2^k > 600nL, bit-length <= 4(ceil(log2 L) + k)");
  audit.expect(unit > 600 * Integer(std::to_string(n)) * g.L, "2^k <= 600nL");
  const std::size_t bit_cap = 4 * (ceil_log2(g.L) + artifact.k);
  std::size_t widest = 0;
  for (const Point& p : artifact.instance.points()) {
    audit.expect(p.x.get_den() == 1 && p.y.get_den() == 1, "non-integer coordinate");
    widest = std::max({widest, bit_length(p.x.get_num()), bit_length(p.y.get_num())});
  }
  audit.expect(widest <= bit_cap, "coordinate needs " + std::to_string(widest) + " bits > " +
                                      std::to_string(bit_cap));
  audit.note("k = " + std::to_string(artifact.k) + ", widest coordinate " + std::to_string(widest) +
             " bits, cap " + std::to_string(bit_cap));

  // Base tree.
  const Tree t0 = base_tree(artifact);
  const ExactNum base_cost_scaled = cost(t0, scaled);
  const ExactNum base_cost_ideal = cost(t0, ideal);
  audit.begin("base tree", "delay(T0) = 7/5 exactly and l(T0) < 14.5L");
  {
    ExactNum d = delay(t0, scaled);
    auto exact = d.exact().as_rational();
    audit.expect(exact && *exact == Rational(7, 5), "delay(T~0) = " + fmt(d));
    audit.expect(base_cost_scaled < ExactNum(Rational(29, 2) * L * q(unit)),
                 "l(T~0) = " + fmt(base_cost_scaled));
    audit.expect(base_cost_ideal < ExactNum(Rational(29, 2) * L), "l(T0) = " + fmt(base_cost_ideal));
    ExactNum ideal_delay = delay(t0, ideal);
    auto ideal_exact = ideal_delay.exact().as_rational();
    audit.expect(ideal_exact && *ideal_exact == Rational(7, 5), "delay(T0) = " + fmt(ideal_delay));
    audit.note("l(T~0)/L = " + fmt(base_cost_scaled.approx() / (L.get_d() * unit.get_d())));
  }

  audit.begin("edges at d2", "|rd1| + |d0d2| = 8L + 3 sqrt(5) L > l(T0), |rd2| + |d2d1| = 16L > "
                             "l(T0), |v d2| >= |d0 d2| for v != d1");
  {
    ExactNum detour = scaled(roles.r, d1) + scaled(d0, d2);
    audit.expect(detour > base_cost_scaled, "8L + 3 sqrt(5) L <= l(T~0)");
    audit.expect(ideal(roles.r, d1) + ideal(d0, d2) > base_cost_ideal, "8L + 3 sqrt(5) L <= l(T0)");
    audit.expect(scaled(roles.r, d2) + scaled(d2, d1) > base_cost_scaled, "16L <= l(T~0)");
    audit.expect(ideal(roles.r, d2) + ideal(d2, d1) == ExactNum(16 * L), "|rd2| + |d2d1| != 16L");
    for (Vertex v = 0; v < artifact.instance.size(); ++v) {
      if (v == d1 || v == d2) continue;
      audit.expect(scaled(v, d2) >= scaled(d0, d2), "|v d2| < |d0 d2| at v = " + std::to_string(v));
    }
    audit.note("(|rd1| + |d0d2|)/L = " + fmt(detour.approx() / (L.get_d() * unit.get_d())));
  }

  // Regular trees: delay attained at d2, all other dilations <= 1.25, and
  // the perturbation envelopes between S and S~.
  const auto regular = regular_sample(n, options);
  const ExactNum seven_fifths(Rational(7, 5));
  const ExactNum five_fourths(Rational(5, 4));
  std::vector<ExactNum> vertex_cap(artifact.instance.size(), five_fourths);
  for (std::size_t i = 0; i < n; ++i) {
    Rational cap_q(5 * g.L + g.offset[i], 4 * g.L + g.offset[i]);
    cap_q.canonicalize();
    ExactNum cap(cap_q);
    vertex_cap[roles.a[i]] = vertex_cap[roles.b[i]] = vertex_cap[roles.c[i]] = cap;
  }
  audit.begin("regular tree delay",
              "over " + std::to_string(regular.size()) +
                  " regular trees: delay = dilation at d2 >= 7/5, other dilations <= 5/4 and "
                  "< (5L+L_i)/(4L+L_i) inside gadget i");
  for (const auto& drops : regular) {
    const Tree t = regular_tree(artifact, drops);
    for (const Metric<ExactNum>* m : {&scaled, &ideal}) {
      const char* which = m == &scaled ? "S~" : "S";
      auto dil = vertex_dilations(t, *m);
      bool ok = dil[d2] >= seven_fifths && delay(t, *m) == dil[d2];
      for (Vertex v = 0; v < t.size() && ok; ++v) {
        if (v == roles.r || v == d2) continue;
        ok = dil[v] <= five_fourths && dil[v] < dil[d2];
        if (ok && vertex_cap[v].lower() < 1.25) ok = dil[v] < vertex_cap[v];
        if (!ok) {
          audit.fail(std::string(which) + " tree " + to_string(drops) + ": dilation " + fmt(dil[v]) +
                     " at vertex " + std::to_string(v));
        }
      }
      if (ok) continue;
      if (!(dil[d2] >= seven_fifths)) {
        audit.fail(std::string(which) + " tree " + to_string(drops) + ": dilation at d2 " +
                   fmt(dil[d2]) + " < 7/5");
      }
    }
  }

  audit.begin("perturbation",
              "over " + std::to_string(regular.size()) +
                  " regular trees: |l(T) - l(T~)| < 12 n eps and |delay(T) - delay(T~)| < 20 n eps");
  {
    const ExactNum cost_env(12 * n_q * artifact.epsilon);
    const ExactNum delay_env(20 * n_q * artifact.epsilon);
    double worst_cost = 0, worst_delay = 0;
    for (const auto& drops : regular) {
      const Tree t = regular_tree(artifact, drops);
      ExactNum dc = cost(t, ideal) - cost(t, perturbed);
      ExactNum dd = delay(t, ideal) - delay(t, perturbed);
      worst_cost = std::max(worst_cost, std::abs(dc.approx()));
      worst_delay = std::max(worst_delay, std::abs(dd.approx()));
      if (!abs_less(dc, cost_env)) audit.fail("cost deviation " + fmt(dc) + " in " + to_string(drops));
      if (!abs_less(dd, delay_env)) {
        audit.fail("delay deviation " + fmt(dd) + " in " + to_string(drops));
      }
    }
    audit.note("worst cost deviation " + fmt(worst_cost) + " vs " + fmt(cost_env.approx()) +
               ", worst delay deviation " + fmt(worst_delay) + " vs " + fmt(delay_env.approx()));
  }

  const auto selections = selection_sample(n, options);
  audit.begin("selection identities",
              "over " + std::to_string(selections.size()) +
                  " selections I: d_T(r,d2) = 14L + sum w, l(T0) - l(T_I) = sum p (exact apexes)");
  for (const auto& sel : selections) {
    const Tree t = selection_tree(artifact, sel);
    Rational sum_w = 0, sum_p = 0;
    for (std::size_t i : sel) {
      sum_w += items[i].weight;
      sum_p += items[i].profit;
    }
    auto dist = root_distances(t, ideal);
    audit.expect(dist[d2] == ExactNum(14 * L + sum_w), "path length at d2 for " + std::to_string(sel.size()) + "-item selection");
    audit.expect(base_cost_ideal - cost(t, ideal) == ExactNum(sum_p),
                 "cost saving for " + std::to_string(sel.size()) + "-item selection");
  }

  audit.begin("decision bounds",
              "over " + std::to_string(selections.size()) +
                  " selections I on the output instance: I fits the knapsack iff delay(T~_I) < delta "
                  "and l(T~_I) < K, with strict separation otherwise");
  {
    const ExactNum delta(artifact.delta);
    const ExactNum bound(q(artifact.cost_bound));
    for (const auto& sel : selections) {
      const Tree t = selection_tree(artifact, sel);
      const bool fits = knapsack::is_witness(artifact.source, sel);
      ExactNum d = delay(t, scaled);
      ExactNum c = cost(t, scaled);
      bool ok = fits ? (d < delta && c < bound) : (d > delta || c > bound);
      if (!ok) {
        audit.fail(std::string(fits ? "fitting" : "non-fitting") + " selection of " +
                   std::to_string(sel.size()) + " items: delay " + fmt(d) + " vs " + fmt(delta) +
                   ", cost " + fmt(c) + " vs " + fmt(bound));
      }
    }
  }
  return report;
}

TreeDecider exact_decider(std::size_t max_n, unsigned threads) {
  return [max_n, threads](const Instance& instance) -> std::optional<Tree> {
    SolveOptions options;
    options.max_n = max_n;
    options.threads = threads;
    options.stop_at_first_feasible = true;
    Metric<ExactNum> metric(instance);
    auto result = solve_exact(instance, metric, options);
    if (result.status != SolveStatus::Feasible) return std::nullopt;
    return result.tree;
  };
}

ReductionAnswer answer_via_reduction(const KnapsackInstance& source, const TreeDecider& decider) {
  ReductionArtifact artifact = build_reduction(source);
  ReductionAnswer answer;
  answer.witness = decider(artifact.instance);
  answer.positive = answer.witness.has_value();
  return answer;
}

std::string save_sidecar(const ReductionArtifact& artifact) {
  nlohmann::ordered_json doc;
  doc["delta"] = format_rational(artifact.delta);
  doc["cost_bound"] = format_rational(q(artifact.cost_bound));
  doc["k"] = artifact.k;
  doc["epsilon"] = format_rational(artifact.epsilon);
  doc["L"] = artifact.quantities.L.get_str();
  doc["m"] = artifact.quantities.m.get_str();
  nlohmann::ordered_json roles;
  roles["r"] = artifact.roles.r;
  roles["a"] = artifact.roles.a;
  roles["b"] = artifact.roles.b;
  roles["c"] = artifact.roles.c;
  roles["d"] = artifact.roles.d;
  doc["roles"] = roles;
  return doc.dump() + "\n";
}

}  // namespace dtk::reduction

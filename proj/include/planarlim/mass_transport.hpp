#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace planarlim {

/// Graph plus lazily computed BFS distances, shared by transport evaluations.
class TransportContext {
 public:
  explicit TransportContext(const Graph& g)
      : g_(&g), dist_(static_cast<std::size_t>(g.num_vertices())) {}

  const Graph& graph() const { return *g_; }

  /// Graph distance (kUnreached across components).
  int distance(int x, int y) const {
    auto& row = dist_[x];
    if (row.empty()) row = bfs_distances(*g_, x);
    return row[y];
  }

 private:
  const Graph* g_;
  mutable std::vector<std::vector<int>> dist_;
};

/// A nonnegative function f(G, x, y). Built-ins depend on G only through its
/// isomorphism class, as the mass transport principle requires; user-built
/// functions should be spot-checked with `invariance_spot_check`.
struct TransportFunction {
  std::string name;
  std::function<Rational(const TransportContext&, int, int)> eval;

  Rational operator()(const TransportContext& ctx, int x, int y) const { return eval(ctx, x, y); }
};

namespace transport {

/// f(x, y) = deg(x) when x ~ y.
inline TransportFunction degree() {
  return {"degree", [](const TransportContext& c, int x, int y) {
            return c.graph().has_edge(x, y) ? Rational(c.graph().degree(x)) : Rational(0);
          }};
}

/// f(x, y) = 1 when x ~ y.
inline TransportFunction adjacency() {
  return {"adjacency", [](const TransportContext& c, int x, int y) {
            return Rational(c.graph().has_edge(x, y) ? 1 : 0);
          }};
}

/// f(x, y) = 1 when x ~ y and y is a leaf.
inline TransportFunction leaf_neighbor() {
  return {"leaf_neighbor", [](const TransportContext& c, int x, int y) {
            return Rational(c.graph().has_edge(x, y) && c.graph().degree(y) == 1 ? 1 : 0);
          }};
}

/// f(x, y) = 1 when dist(x, y) = d.
inline TransportFunction distance_indicator(int d) {
  return {"distance_eq_" + std::to_string(d), [d](const TransportContext& c, int x, int y) {
            return Rational(c.distance(x, y) == d ? 1 : 0);
          }};
}

/// f(x, y) = 2^-dist(x, y) (0 across components).
inline TransportFunction distance_decay() {
  return {"distance_decay", [](const TransportContext& c, int x, int y) {
            const int d = c.distance(x, y);
            if (d == kUnreached) return Rational(0);
            return Rational(1, boost::multiprecision::cpp_int(1) << d);
          }};
}

/// f(x, y) = 1 / deg(x) when x ~ y: the simple random walk kernel.
inline TransportFunction walk_step() {
  return {"walk_step", [](const TransportContext& c, int x, int y) {
            return c.graph().has_edge(x, y) ? Rational(1, c.graph().degree(x)) : Rational(0);
          }};
}

/// f(x, y) = |B(x, 1)| when dist(x, y) <= 2 and deg(x) > deg(y).
inline TransportFunction uphill_ball() {
  return {"uphill_ball", [](const TransportContext& c, int x, int y) {
            const int d = c.distance(x, y);
            if (d == kUnreached || d > 2 || c.graph().degree(x) <= c.graph().degree(y))
              return Rational(0);
            return Rational(c.graph().degree(x) + 1);
          }};
}

/// Relation indicator times weight.
inline TransportFunction compose(std::string name,
                                 std::function<bool(const TransportContext&, int, int)> relation,
                                 std::function<Rational(const TransportContext&, int, int)> weight) {
  return {std::move(name), [relation = std::move(relation), weight = std::move(weight)](
                               const TransportContext& c, int x, int y) {
            return relation(c, x, y) ? weight(c, x, y) : Rational(0);
          }};
}

/// sum_i coefficient_i * f_i.
inline TransportFunction combination(std::vector<std::pair<Rational, TransportFunction>> terms) {
  std::string name = "combination";
  return {name, [terms = std::move(terms)](const TransportContext& c, int x, int y) {
            Rational sum = 0;
            for (const auto& [coef, f] : terms) sum += coef * f(c, x, y);
            return sum;
          }};
}

inline TransportFunction zero() {
  return {"zero", [](const TransportContext&, int, int) { return Rational(0); }};
}

/// All built-in transport functions.
inline std::vector<TransportFunction> builtins() {
  return {degree(),
          adjacency(),
          leaf_neighbor(),
          distance_indicator(0),
          distance_indicator(1),
          distance_indicator(2),
          distance_indicator(3),
          distance_decay(),
          walk_step(),
          uphill_ball(),
          compose("same_degree_within_2",
                  [](const TransportContext& c, int x, int y) {
                    const int d = c.distance(x, y);
                    return d != kUnreached && d <= 2 &&
                           c.graph().degree(x) == c.graph().degree(y);
                  },
                  [](const TransportContext& c, int x, int) { return Rational(c.graph().degree(x)); })};
}

inline std::optional<TransportFunction> by_name(const std::string& name) {
  for (auto& f : builtins())
    if (f.name == name) return f;
  if (name == "zero") return zero();
  return std::nullopt;
}

}  // namespace transport

/// f_k(G, x, y) = f(G, x, y) when f(G, x, y) <= k and dist(x, y) <= k, else 0.
inline TransportFunction truncate(const TransportFunction& f, const Rational& k) {
  if (k <= 0) throw InvalidInput("truncation level must be positive");
  return {f.name + "_trunc_" + to_fraction(k), [f, k](const TransportContext& c, int x, int y) {
            const int d = c.distance(x, y);
            if (d == kUnreached || Rational(d) > k) return Rational(0);
            const Rational value = f(c, x, y);
            return value <= k ? value : Rational(0);
          }};
}

inline TransportFunction truncate(const TransportFunction& f, double k) {
  return truncate(f, Rational(k));
}

/// Probability measure on finitely many finite graphs with a root law on each.
struct FiniteRootedMeasure {
  struct Atom {
    Graph graph;
    Rational weight;
    std::vector<Rational> root_law;  // empty: uniform (unbiased)
  };
  std::vector<Atom> atoms;

  static FiniteRootedMeasure unbiased(const std::vector<Graph>& graphs) {
    FiniteRootedMeasure m;
    for (const Graph& g : graphs)
      m.atoms.push_back({g, Rational(1, static_cast<long>(graphs.size())), {}});
    m.validate();
    return m;
  }

  /// A single graph with the root fixed at o.
  static FiniteRootedMeasure point_root(const Graph& g, int o) {
    std::vector<Rational> law(static_cast<std::size_t>(g.num_vertices()), Rational(0));
    law.at(static_cast<std::size_t>(o)) = 1;
    FiniteRootedMeasure m;
    m.atoms.push_back({g, Rational(1), std::move(law)});
    m.validate();
    return m;
  }

  Rational root_mass(std::size_t atom, int v) const {
    const auto& a = atoms[atom];
    if (a.root_law.empty()) return Rational(1, a.graph.num_vertices());
    return a.root_law[v];
  }

  bool is_unbiased() const {
    return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) {
      if (a.root_law.empty()) return true;
      const Rational u(1, a.graph.num_vertices());
      return std::all_of(a.root_law.begin(), a.root_law.end(), [&](const Rational& p) { return p == u; });
    });
  }

  void validate() const {
    if (atoms.empty()) throw InvalidInput("measure has no atoms");
    Rational total = 0;
    for (const auto& a : atoms) {
      if (a.weight < 0) throw InvalidInput("negative weight");
      if (a.graph.num_vertices() == 0) throw InvalidInput("empty graph in measure");
      total += a.weight;
      if (!a.root_law.empty()) {
        if (static_cast<int>(a.root_law.size()) != a.graph.num_vertices())
          throw InvalidInput("root law size mismatch");
        Rational s = 0;
        for (const auto& p : a.root_law) {
          if (p < 0) throw InvalidInput("negative root mass");
          s += p;
        }
        if (s != 1) throw InvalidInput("root law does not sum to 1");
      }
    }
    if (total != 1) throw InvalidInput("weights do not sum to 1");
  }
};

struct ImtpResult {
  Rational lhs;  // E sum_v f(G, o, v): mass sent out of the root
  Rational rhs;  // E sum_v f(G, v, o): mass received at the root
  bool equal() const { return lhs == rhs; }
};

inline ImtpResult imtp_check(const FiniteRootedMeasure& mu, const TransportFunction& f) {
  ImtpResult res{0, 0};
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const auto& atom = mu.atoms[i];
    const TransportContext ctx(atom.graph);
    const int n = atom.graph.num_vertices();
    for (int o = 0; o < n; ++o) {
      const Rational p = atom.weight * mu.root_mass(i, o);
      if (p == 0) continue;
      Rational out = 0, in = 0;
      for (int v = 0; v < n; ++v) {
        out += f(ctx, o, v);
        in += f(ctx, v, o);
      }
      res.lhs += p * out;
      res.rhs += p * in;
    }
  }
  return res;
}

struct ImtpLimitRow {
  std::size_t index = 0;  // position in the sequence
  Rational k;
  ImtpResult result;
};

struct ImtpLimitReport {
  std::vector<ImtpLimitRow> rows;
  bool all_equal = true;
  bool monotone_in_k = true;  // lhs nondecreasing in k for every measure
};

/// Checks the identity for the truncations f_k along a sequence of unbiased measures.
inline ImtpLimitReport imtp_limit_consistency(const std::vector<FiniteRootedMeasure>& sequence,
                                              const TransportFunction& f,
                                              std::vector<Rational> ks) {
  for (const auto& mu : sequence)
    if (!mu.is_unbiased()) throw InvalidInput("limit consistency needs unbiased measures");
  std::sort(ks.begin(), ks.end());
  ImtpLimitReport rep;
  for (std::size_t j = 0; j < sequence.size(); ++j) {
    std::optional<Rational> prev;
    for (const Rational& k : ks) {
      const ImtpResult r = imtp_check(sequence[j], truncate(f, k));
      rep.all_equal = rep.all_equal && r.equal();
      if (prev && r.lhs < *prev) rep.monotone_in_k = false;
      prev = r.lhs;
      rep.rows.push_back({j, k, r});
    }
  }
  return rep;
}

/// Relabels g by a random permutation and compares f on every pair (or on
/// `pairs` random pairs when positive). Returns the number of mismatches.
inline long invariance_spot_check(const TransportFunction& f, const Graph& g, std::mt19937_64& rng,
                                  long pairs = 0) {
  const int n = g.num_vertices();
  std::vector<int> psi(static_cast<std::size_t>(n));
  std::iota(psi.begin(), psi.end(), 0);
  std::shuffle(psi.begin(), psi.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({std::min(psi[e.u], psi[e.v]), std::max(psi[e.u], psi[e.v])});
  const Graph h = Graph::from_edges(n, edges);
  const TransportContext cg(g), ch(h);
  long mismatches = 0;
  auto compare = [&](int x, int y) {
    if (f(cg, x, y) != f(ch, psi[x], psi[y])) ++mismatches;
  };
  if (pairs <= 0) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) compare(x, y);
  } else {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (long i = 0; i < pairs; ++i) compare(pick(rng), pick(rng));
  }
  return mismatches;
}

}  // namespace planarlim

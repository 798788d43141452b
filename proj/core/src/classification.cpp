#include "recip/classification.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "recip/errors.hpp"
#include "recip/pencil.hpp"

namespace recip {

namespace {

std::vector<int> component_index(const ColouredGraph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.n() + 1));
  const auto components = connected_components(g);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) out[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  return out;
}

RowSpace span_of(const std::vector<LinearForm>& forms, const PairIndexer& idx) {
  RowSpace space(idx.size());
  for (const auto& f : forms) space.insert(f.to_vector(idx));
  return space;
}

}  // namespace

SymmetryVerdict classify(const LinearPart& linear, const PairOrbitPartition& orbits,
                         const std::vector<LinearForm>& component_zeros, std::optional<int> r) {
  const PairIndexer idx(linear.n);
  SymmetryVerdict v;
  v.s = orbits.s();
  RowSpace space = span_of(symmetry_forms(orbits), idx);
  v.dim_symmetry_span = space.rank();
  for (const auto& f : component_zeros) space.insert(f.to_vector(idx));
  v.dim_with_component_zeros = space.rank();
  v.s_within_components = idx.size() - v.dim_with_component_zeros;
  v.dim_linear_part = linear.dimension();
  for (const auto& f : linear.basis) {
    const RatVector rest = space.reduce(f.to_vector(idx));
    if (is_zero_vector(rest)) continue;
    v.extra_generators.push_back(LinearForm::from_vector(idx, rest).normalized());
    space.insert(rest);
  }
  if (space.rank() != v.dim_linear_part) {
    throw InternalError("symmetry-induced forms are not contained in the linear part");
  }
  v.induced = v.extra_generators.empty();
  if (r) {
    v.r = r;
    v.s_equals_r = static_cast<std::size_t>(*r) == v.s_within_components;
  }
  return v;
}

SymmetryVerdict classify(const ColouredGraph& g, const Limits& limits) {
  const Parametrization param(g, limits);
  const LinearPart linear = linear_part(param);
  const AutomorphismGroup group = automorphism_group(g, limits);
  std::optional<int> r;
  if (g.is_uniform()) r = pencil_properties(g).r;
  return classify(linear, pair_orbits(group.generators, g.n()), component_zero_forms(g), r);
}

std::vector<BinomialVerdict> check_binomials(const std::vector<LinearForm>& binomials,
                                             const PairOrbitPartition& orbits,
                                             const std::vector<LinearForm>& component_zeros) {
  const PairIndexer idx(orbits.n);
  RowSpace symmetric = span_of(symmetry_forms(orbits), idx);
  RowSpace with_zeros = symmetric;
  for (const auto& f : component_zeros) with_zeros.insert(f.to_vector(idx));
  std::set<VertexPair> zero_pairs;
  for (const auto& f : component_zeros) zero_pairs.insert(f.terms().begin()->first);

  std::vector<BinomialVerdict> out;
  for (const auto& f : binomials) {
    BinomialVerdict b{f, false, false};
    const RatVector v = f.to_vector(idx);
    if (f.size() == 1) {
      b.induced = with_zeros.contains(v);
      b.strict = zero_pairs.contains(f.terms().begin()->first);
    } else {
      b.induced = symmetric.contains(v);
      const auto& [p, cp] = *f.terms().begin();
      const auto& [q, cq] = *std::next(f.terms().begin());
      b.strict = f.size() == 2 && cp == -cq && orbits.orbit_index(p) == orbits.orbit_index(q);
    }
    out.push_back(std::move(b));
  }
  return out;
}

ColouredGraph derived_graph(const ColouredGraph& g, const std::vector<Permutation>& generators) {
  const int n = g.n();
  std::vector<std::string> vertex_labels(static_cast<std::size_t>(n));
  for (const auto& orbit : vertex_orbits(generators, n)) {
    for (int v : orbit) vertex_labels[static_cast<std::size_t>(v - 1)] = "v" + std::to_string(orbit.front());
  }
  const PairOrbitPartition orbits = pair_orbits(generators, n);
  const auto component = component_index(g);
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (component[static_cast<std::size_t>(i)] != component[static_cast<std::size_t>(j)]) continue;
      const VertexPair rep = orbits.orbits[orbits.orbit_index({i, j})].front();
      edges.emplace_back(i, j, "e" + std::to_string(rep.i) + "_" + std::to_string(rep.j));
    }
  }
  return ColouredGraph::from_labels(n, vertex_labels, edges);
}

ColouredGraph derived_graph(const ColouredGraph& g, const Limits& limits) {
  return derived_graph(g, automorphism_group(g, limits).generators);
}

AmbientReduction ambient_reduction(const ColouredGraph& g, const PairOrbitPartition& orbits) {
  const PairIndexer idx(g.n());
  const std::size_t big_n = idx.size();
  const auto d = static_cast<std::size_t>(g.num_colours());
  const auto component = component_index(g);

  // Colour indicator matrices A_k as vectors over pairs.
  std::vector<RatVector> indicators(d, RatVector(big_n));
  for (std::size_t k = 0; k < big_n; ++k) {
    const VertexPair p = idx.pair(k);
    const int colour = p.is_diagonal() ? g.vertex_colour(p.i) : g.pair_colour(p.i, p.j);
    if (colour > 0) indicators[static_cast<std::size_t>(colour - 1)][k] = 1;
  }
  // I′ classes: pair orbits that stay inside one component.
  std::vector<RatVector> classes;
  for (const auto& orbit : orbits.orbits) {
    const VertexPair rep = orbit.front();
    if (component[static_cast<std::size_t>(rep.i)] != component[static_cast<std::size_t>(rep.j)]) continue;
    RatVector v(big_n);
    for (const auto& p : orbit) v[idx.index(p)] = 1;
    classes.push_back(std::move(v));
  }

  // tr(XY) weighs diagonal positions 1 and off-diagonal positions 2.
  auto weighted = [&](const RatVector& v) {
    RatVector w = v;
    for (std::size_t k = 0; k < big_n; ++k) {
      if (!idx.pair(k).is_diagonal()) w[k] *= 2;
    }
    return w;
  };

  AmbientReduction out;
  out.dim_ambient = big_n;
  RowSpace l_space(big_n);
  RowSpace l_weighted(big_n);
  for (const auto& a : indicators) {
    l_space.insert(a);
    l_weighted.insert(weighted(a));
  }
  out.dim_L = l_space.rank();
  const std::vector<RatVector> l_perp = l_weighted.kernel();
  out.dim_Lperp = l_perp.size();

  RowSpace lprime(big_n);
  for (const auto& c : classes) lprime.insert(c);
  out.dim_Lprime = lprime.rank();
  out.L_in_Lprime = std::all_of(indicators.begin(), indicators.end(),
                                [&](const RatVector& a) { return lprime.contains(a); });

  // Y = Σ y_c 1_c ∈ L′ is in L^⊥ iff ⟨A_k, Y⟩ = 0 for every colour k.
  RatMatrix pairing(d, classes.size());
  for (std::size_t k = 0; k < d; ++k) {
    const RatVector w = weighted(indicators[k]);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Rational acc;
      for (std::size_t t = 0; t < big_n; ++t) {
        if (sgn(classes[c][t]) != 0) acc += w[t];
      }
      pairing(k, c) = acc;
    }
  }
  out.dim_Lperp_prime = kernel_basis(pairing).size();

  RowSpace joint = lprime;
  for (const auto& v : l_perp) joint.insert(v);
  out.span_full = joint.rank() == big_n;
  return out;
}

AmbientReduction ambient_reduction(const ColouredGraph& g, const Limits& limits) {
  return ambient_reduction(g, pair_orbits(automorphism_group(g, limits).generators, g.n()));
}

bool FamilyVerification::passed() const {
  return !clauses.empty() &&
         std::all_of(clauses.begin(), clauses.end(), [](const VerificationClause& c) { return c.passed; });
}

namespace {

enum class Coverage { kCycle, kComplete, kBalancedBipartite, kHyperoctahedral, kBipartite, kStar };

struct Covered {
  Coverage kind;
  int n_total;  // vertex count
  int m;
  int n;        // second part size (bipartite) or vertex count
};

Covered coverage(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCycle:
      if (spec.n < 3) throw ValidationError(ValidationKind::kInvalidParameter, "cycle needs n >= 3");
      return {Coverage::kCycle, spec.n, 0, spec.n};
    case Family::kComplete:
      if (spec.n < 2) throw ValidationError(ValidationKind::kInvalidParameter, "verification of K_n needs n >= 2");
      return {Coverage::kComplete, spec.n, 0, spec.n};
    case Family::kHyperoctahedral:
      if (spec.m < 2) throw ValidationError(ValidationKind::kInvalidParameter, "verification of H_m needs m >= 2");
      return {Coverage::kHyperoctahedral, 2 * spec.m, spec.m, 0};
    case Family::kStar:
      if (spec.n < 3) throw ValidationError(ValidationKind::kInvalidParameter, "verification of stars needs n >= 3");
      return {Coverage::kStar, spec.n, 1, spec.n - 1};
    case Family::kCompleteBipartite:
      if (spec.m < 1 || spec.m > spec.n) {
        throw ValidationError(ValidationKind::kInvalidParameter, "complete_bipartite needs 1 <= m <= n");
      }
      if (spec.m == 1) {
        if (spec.n < 2) throw ValidationError(ValidationKind::kInvalidParameter, "K_{1,1} is not covered");
        return {Coverage::kStar, spec.n + 1, 1, spec.n};
      }
      if (spec.m == spec.n) return {Coverage::kBalancedBipartite, 2 * spec.m, spec.m, spec.n};
      return {Coverage::kBipartite, spec.m + spec.n, spec.m, spec.n};
    default:
      throw UnsupportedInputError(std::string("family '") + to_string(spec.family) +
                                  "' has no closed-form generator list to verify");
  }
}

int wrap(int v, int n) { return (v - 1) % n + 1; }

}  // namespace

std::vector<LinearForm> family_generators(const FamilySpec& spec) {
  const Covered c = coverage(spec);
  const int n = c.n_total;
  std::vector<LinearForm> out;
  auto diff = [&](int a, int b, int p, int q) {
    const VertexPair x = VertexPair::of(a, b);
    const VertexPair y = VertexPair::of(p, q);
    if (x != y) out.push_back(LinearForm::difference(n, x, y));
  };
  const ColouredGraph g = c.kind == Coverage::kStar ? build_family({Family::kStar, n, 0, {}, {}}) : build_family(spec);
  auto each_pair = [&](auto&& fn) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) fn(i, j);
    }
  };

  switch (c.kind) {
    case Coverage::kCycle:
      for (int d = 0; d <= n / 2; ++d) {
        for (int i = 2; i <= n; ++i) diff(1, 1 + d, i, wrap(i + d, n));
      }
      break;
    case Coverage::kComplete:
      for (int i = 2; i <= n; ++i) diff(1, 1, i, i);
      each_pair([&](int i, int j) { diff(1, 2, i, j); });
      break;
    case Coverage::kBalancedBipartite:
    case Coverage::kHyperoctahedral: {
      // Edge and non-edge representatives swap between the two families.
      const bool bipartite = c.kind == Coverage::kBalancedBipartite;
      for (int i = 2; i <= n; ++i) diff(1, 1, i, i);
      each_pair([&](int i, int j) {
        if (g.has_edge(i, j)) {
          diff(1, bipartite ? 2 : 3, i, j);
        } else {
          diff(1, bipartite ? 3 : 2, i, j);
        }
      });
      break;
    }
    case Coverage::kBipartite: {
      const int m = c.m;
      const int k = c.n;
      for (int i = 2; i <= m; ++i) diff(1, 1, i, i);
      for (int i = m + 2; i <= n; ++i) diff(m + 1, m + 1, i, i);
      each_pair([&](int i, int j) {
        if (g.has_edge(i, j)) {
          diff(1, m + 1, i, j);
        } else if (j <= m) {
          diff(1, 2, i, j);
        } else {
          diff(m + 1, m + 2, i, j);
        }
      });
      LinearForm a(n);
      a.add({1, 2}, m);
      a.add({n - 1, n}, -k);
      out.push_back(a);
      LinearForm b(n);
      b.add({1, 1}, m);
      b.add({n - 1, n}, -(k - m));
      b.add({n, n}, -m);
      out.push_back(b);
      break;
    }
    case Coverage::kStar: {
      for (int i = 3; i <= n; ++i) diff(2, 2, i, i);
      each_pair([&](int i, int j) {
        if (g.has_edge(i, j)) {
          diff(1, 2, i, j);
        } else {
          diff(2, 3, i, j);
        }
      });
      LinearForm a(n);
      a.add({1, 1}, 1);
      a.add({n - 1, n}, -(n - 2));
      a.add({n, n}, -1);
      out.push_back(a);
      break;
    }
  }
  return out;
}

FamilyVerification verify_family(const FamilySpec& spec, const Limits& limits) {
  const Covered c = coverage(spec);
  const ColouredGraph g = c.kind == Coverage::kStar ? build_family({Family::kStar, c.n_total, 0, {}, {}})
                                                    : build_family(spec);
  const int n = g.n();
  FamilyVerification out;
  out.label = spec.label();

  switch (c.kind) {
    case Coverage::kCycle:
      out.expected_r = out.expected_s = n / 2 + 1;
      break;
    case Coverage::kComplete:
      out.expected_r = out.expected_s = 2;
      break;
    case Coverage::kBalancedBipartite:
    case Coverage::kHyperoctahedral:
      out.expected_r = out.expected_s = 3;
      break;
    case Coverage::kBipartite:
      out.expected_r = 3;
      out.expected_s = 5;
      break;
    case Coverage::kStar:
      out.expected_r = 3;
      out.expected_s = 4;
      break;
  }

  const Parametrization param(g, limits);
  const LinearPart linear = linear_part(param);
  const AutomorphismGroup group = automorphism_group(g, limits);
  const PairOrbitPartition orbits = pair_orbits(group.generators, n);
  out.r = pencil_properties(g).r;
  out.s = static_cast<int>(orbits.s());
  const auto verdict = classify(linear, orbits, component_zero_forms(g), out.r);

  out.clauses.push_back({"r", out.r == out.expected_r,
                         "r = " + std::to_string(out.r) + ", expected " + std::to_string(out.expected_r)});
  out.clauses.push_back({"s", out.s == out.expected_s,
                         "s = " + std::to_string(out.s) + ", expected " + std::to_string(out.expected_s)});
  const bool expect_induced = out.expected_r == out.expected_s;
  out.clauses.push_back({"induced", verdict.induced == expect_induced,
                         std::string("linear part ") + (verdict.induced ? "is" : "is not") +
                             " induced by symmetries"});

  const std::size_t big_n = param.indexer().size();
  const std::size_t expected_dim = big_n - static_cast<std::size_t>(out.r);
  out.clauses.push_back({"dimension", linear.dimension() == expected_dim,
                         "dim = " + std::to_string(linear.dimension()) + ", C(n+1,2) - r = " +
                             std::to_string(expected_dim)});

  const std::vector<LinearForm> generators = family_generators(spec);
  const bool all_in = std::all_of(generators.begin(), generators.end(),
                                  [&](const LinearForm& f) { return linear.contains(f); });
  const std::size_t gen_rank = span_rank(generators, param.indexer());
  out.clauses.push_back({"span", all_in && gen_rank == linear.dimension(),
                         std::to_string(generators.size()) + " listed forms of rank " + std::to_string(gen_rank) +
                             (all_in ? ", all in the linear part" : ", some outside the linear part")});

  if (c.kind == Coverage::kBipartite || c.kind == Coverage::kStar) {
    const std::size_t extra = c.kind == Coverage::kBipartite ? 2 : 1;
    out.closed_form_generators.assign(generators.end() - static_cast<std::ptrdiff_t>(extra), generators.end());
    bool extra_ok = true;
    std::string detail;
    for (const auto& f : out.closed_form_generators) {
      const bool ok = contains_form(param, f);
      extra_ok = extra_ok && ok;
      detail += (detail.empty() ? "" : "; ") + f.to_string() + (ok ? " vanishes" : " does not vanish");
    }
    out.clauses.push_back({"closed-form generators", extra_ok, detail});

    // det A = λ₁^N − (product of part sizes)·λ₁^{N−2}·λ₂².
    const auto vars = param.matrix().num_vars();
    const long parts = static_cast<long>(c.m) * c.n;
    MultiPoly expected = pow(MultiPoly::variable(vars, 0), static_cast<unsigned>(n));
    expected -= pow(MultiPoly::variable(vars, 0), static_cast<unsigned>(n - 2)) *
                pow(MultiPoly::variable(vars, 1), 2) * Rational(parts);
    const bool det_ok = param.adjugate().det == expected;
    out.clauses.push_back({"determinant", det_ok, "det = " + param.adjugate().det.to_string()});
  }
  return out;
}

}  // namespace recip

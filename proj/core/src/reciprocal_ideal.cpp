#include "recip/reciprocal_ideal.hpp"

#include <algorithm>
#include <map>

#include "recip/errors.hpp"

namespace recip {

Parametrization::Parametrization(const ColouredGraph& g, const Limits& limits)
    : graph_(g), indexer_(g.n()), matrix_(coloured_adjacency(g)), adjugate_(recip::adjugate(matrix_, limits.max_n)) {
  if (adjugate_.det.is_zero()) throw InternalError("coloured adjacency has identically zero determinant");
}

MultiPoly Parametrization::substitute(const LinearForm& f) const {
  if (f.n() != n()) throw DimensionError("form over a different vertex count");
  MultiPoly acc(matrix_.num_vars());
  for (const auto& [p, c] : f.terms()) acc += entry(p) * c;
  return acc;
}

MultiPoly Parametrization::substitute(const QuadraticForm& f) const {
  if (f.n() != n()) throw DimensionError("form over a different vertex count");
  MultiPoly acc(matrix_.num_vars());
  for (const auto& [m, c] : f.terms()) acc += (entry(m.first) * entry(m.second)) * c;
  return acc;
}

namespace {

// Row space of the (λ-monomial × column) coefficient matrix of `polys`.
RowSpace coefficient_row_space(const std::vector<const MultiPoly*>& polys) {
  std::map<Exponents, std::map<std::size_t, Rational>> rows;
  for (std::size_t col = 0; col < polys.size(); ++col) {
    for (const auto& [e, c] : polys[col]->terms()) rows[e].emplace(col, c);
  }
  RowSpace space(polys.size());
  for (const auto& [e, row] : rows) {
    space.insert_sparse(row);
    if (space.rank() == polys.size()) break;
  }
  return space;
}

}  // namespace

RatVector LinearPart::reduce(const LinearForm& f) const {
  if (f.n() != n) throw DimensionError("form over a different vertex count");
  const PairIndexer idx(n);
  RatVector out(pivots.size());
  for (const auto& [p, c] : f.terms()) {
    const std::size_t q = idx.index(p);
    for (std::size_t a = 0; a < pivots.size(); ++a) {
      if (sgn(reduction(q, a)) != 0) out[a] += c * reduction(q, a);
    }
  }
  return out;
}

bool LinearPart::contains(const LinearForm& f) const { return is_zero_vector(reduce(f)); }

LinearPart linear_part(const Parametrization& param) {
  const PairIndexer& idx = param.indexer();
  std::vector<const MultiPoly*> entries;
  entries.reserve(idx.size());
  for (const auto& p : idx.pairs()) entries.push_back(&param.entry(p));
  const RowSpace space = coefficient_row_space(entries);

  LinearPart out;
  out.n = param.n();
  out.reduction = RatMatrix(idx.size(), space.rank());
  std::size_t a = 0;
  for (const auto& [pivot, row] : space.rows()) {
    out.pivots.push_back(idx.pair(pivot));
    // Row a reads adj_pivot + Σ_q row[q]·adj_q ∈ span, and the kernel
    // vector of a free column q is e_q − Σ_a row_a[q]·e_{pivot a}.
    for (std::size_t q = 0; q < idx.size(); ++q) out.reduction(q, a) = row[q];
    ++a;
  }
  for (const auto& v : space.kernel()) out.basis.push_back(LinearForm::from_vector(idx, v));
  return out;
}

namespace {

std::size_t triangle_index(std::size_t a, std::size_t b, std::size_t m) {
  if (a > b) std::swap(a, b);
  return a * m - a * (a - 1) / 2 + (b - a);
}

}  // namespace

QuadraticPart quadratic_part(const Parametrization& param, const LinearPart& linear) {
  const std::size_t m = linear.pivots.size();
  const std::size_t big_n = param.indexer().size();
  std::vector<MultiPoly> products;
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      products.push_back(param.entry(linear.pivots[a]) * param.entry(linear.pivots[b]));
      monomials.emplace_back(a, b);
    }
  }
  std::vector<const MultiPoly*> refs;
  for (const auto& p : products) refs.push_back(&p);
  const RowSpace space = coefficient_row_space(refs);

  QuadraticPart out;
  out.minimal_count = products.size() - space.rank();
  out.full_dimension = big_n * (big_n + 1) / 2 - space.rank();
  for (const auto& v : space.kernel()) {
    QuadraticForm q(param.n());
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      q.add(linear.pivots[monomials[k].first], linear.pivots[monomials[k].second], v[k]);
    }
    out.representatives.push_back(q.normalized());
  }
  return out;
}

RatVector reduce_quadratic(const LinearPart& linear, const QuadraticForm& q) {
  const std::size_t m = linear.pivots.size();
  const PairIndexer idx(linear.n);
  RatVector out(m * (m + 1) / 2);
  for (const auto& [mono, c] : q.terms()) {
    const std::size_t p = idx.index(mono.first);
    const std::size_t r = idx.index(mono.second);
    for (std::size_t a = 0; a < m; ++a) {
      if (sgn(linear.reduction(p, a)) == 0) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (sgn(linear.reduction(r, b)) == 0) continue;
        out[triangle_index(a, b, m)] += c * linear.reduction(p, a) * linear.reduction(r, b);
      }
    }
  }
  return out;
}

std::vector<LinearForm> component_zero_forms(const ColouredGraph& g) {
  const auto components = connected_components(g);
  std::vector<int> component_of(static_cast<std::size_t>(g.n() + 1));
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::vector<LinearForm> out;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = i + 1; j <= g.n(); ++j) {
      if (component_of[static_cast<std::size_t>(i)] != component_of[static_cast<std::size_t>(j)]) {
        out.push_back(LinearForm::variable(g.n(), {i, j}));
      }
    }
  }
  return out;
}

bool contains_form(const Parametrization& param, const LinearForm& f) { return param.substitute(f).is_zero(); }

bool contains_form(const Parametrization& param, const QuadraticForm& f) { return param.substitute(f).is_zero(); }

std::vector<LinearForm> binomial_forms(const Parametrization& param) {
  const PairIndexer& idx = param.indexer();
  std::vector<LinearForm> out;
  // Nonzero entries grouped by their monic (leading coefficient 1) shape.
  std::map<MultiPoly::TermMap, std::vector<std::pair<VertexPair, Rational>>> groups;
  for (const auto& p : idx.pairs()) {
    const MultiPoly& e = param.entry(p);
    if (e.is_zero()) {
      out.push_back(LinearForm::variable(param.n(), p));
      continue;
    }
    const Rational lead = e.terms().begin()->second;
    MultiPoly shape = e;
    shape *= Rational(1) / lead;
    groups[shape.terms()].emplace_back(p, lead);
  }
  for (const auto& [shape, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        LinearForm f(param.n());
        f.add(members[a].first, 1);
        f.add(members[b].first, -members[a].second / members[b].second);
        out.push_back(f.normalized());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace recip

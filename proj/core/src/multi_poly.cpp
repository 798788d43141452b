#include "recip/multi_poly.hpp"

#include <numeric>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

namespace {

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t k) {
  if (k >= num_vars) throw DimensionError("variable index out of range");
  Exponents e(num_vars, 0);
  e[k] = 1;
  MultiPoly p(num_vars);
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != num_vars_) throw DimensionError("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) != d) return false;
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_) throw DimensionError("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::shift(const Exponents& e) {
  if (e.size() != num_vars_) throw DimensionError("exponent vector has wrong length");
  TermMap shifted;
  for (auto& [exp, c] : terms_) {
    Exponents n = exp;
    for (std::size_t k = 0; k < n.size(); ++k) n[k] = static_cast<std::uint16_t>(n[k] + e[k]);
    shifted.emplace_hint(shifted.end(), std::move(n), std::move(c));
  }
  terms_ = std::move(shifted);
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw DimensionError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (unsigned p = 0; p < e[k]; ++p) t *= point[k];
    }
    total += t;
  }
  return total;
}

bool MultiPoly::proportional_to(const MultiPoly& o, Rational* k) const {
  check_compatible(o);
  if (terms_.empty() || o.terms_.empty() || terms_.size() != o.terms_.size()) return false;
  const Rational ratio = terms_.begin()->second / o.terms_.begin()->second;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    if (a->second != ratio * b->second) return false;
  }
  if (k != nullptr) *k = ratio;
  return true;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = degree_of(e) == 0;
    bool need_star = false;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) out << "*";
      out << var_prefix << (k + 1);
      if (e[k] > 1) out << "^" << e[k];
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionError("polynomials over different variable sets");
  MultiPoly r(a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly r = MultiPoly::constant(p.num_vars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

}  // namespace recip

#include "recip/uni_poly.hpp"

#include <sstream>

#include "recip/errors.hpp"

namespace recip {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs_low_to_high) {
  for (long c : coeffs_low_to_high) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::t() { return UniPoly{0, 1}; }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DimensionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lb = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] / lb;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

UniPoly charpoly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly::constant(1);
  std::vector<UniPoly> a(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> UniPoly& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      at(i, j) = UniPoly::constant(-m(i, j));
      if (i == j) at(i, j) += UniPoly::t();
    }
  }
  // Bareiss: every division below is exact in Q[t].
  UniPoly prev = UniPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k).is_zero()) ++swap;
      if (swap == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        auto [q, r] = divmod(num, prev);
        if (!r.is_zero()) throw InternalError("inexact Bareiss division");
        at(i, j) = std::move(q);
      }
      at(i, k) = UniPoly{};
    }
    prev = at(k, k);
  }
  UniPoly det = at(n - 1, n - 1);
  if (sign < 0) det *= Rational(-1);
  return det;
}

int SquarefreeDecomposition::distinct_roots() const {
  int total = 0;
  for (const auto& f : factors) total += f.factor.degree();
  return total;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw DimensionError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.content = p.leading();
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;

  // Yun: a₀ = gcd(f, f'), b₁ = f / a₀, c₁ = f'/a₀, d₁ = c₁ − b₁';
  // then aᵢ = gcd(bᵢ, dᵢ), bᵢ₊₁ = bᵢ/aᵢ, dᵢ₊₁ = dᵢ/aᵢ − bᵢ₊₁'.
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = divmod(f, a0).first;
  UniPoly c = divmod(fp, a0).first;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a.monic(), i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace recip

#include "recip/forms.hpp"

#include <cctype>
#include <sstream>

#include "recip/errors.hpp"

namespace recip {

PairIndexer::PairIndexer(int n) : n_(n) {
  if (n < 0) throw DimensionError("negative vertex count");
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) pairs_.push_back({i, j});
  }
}

std::size_t PairIndexer::index(VertexPair p) const {
  if (p.i < 1 || p.j > n_ || p.i > p.j) throw DimensionError("pair outside 1..n");
  const auto i = static_cast<std::size_t>(p.i - 1);
  const auto n = static_cast<std::size_t>(n_);
  // Rows 1..i contribute n + (n−1) + … + (n−i+1) pairs.
  return i * n - i * (i - 1) / 2 + static_cast<std::size_t>(p.j - p.i);
}

std::string variable_name(VertexPair p, int n) {
  if (n <= 9) return "x" + std::to_string(p.i) + std::to_string(p.j);
  return "x" + std::to_string(p.i) + "_" + std::to_string(p.j);
}

namespace {

// Writes `coeff*body` terms joined by signs; `first` tracks the leading
// sign convention.
void append_term(std::ostringstream& out, const Rational& c, const std::string& body, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  const Rational mag = abs(c);
  if (mag != 1) out << to_string(mag) << "*";
  out << body;
}

template <typename Map>
void scale_primitive(Map& terms) {
  std::vector<Rational> v;
  v.reserve(terms.size());
  for (const auto& [k, c] : terms) v.push_back(c);
  normalize_primitive(v);
  std::size_t k = 0;
  for (auto& [key, c] : terms) c = v[k++];
}

}  // namespace

LinearForm::LinearForm(int n, Terms terms) : n_(n) {
  for (const auto& [p, c] : terms) add(p, c);
}

LinearForm LinearForm::variable(int n, VertexPair p) {
  LinearForm f(n);
  f.add(p, 1);
  return f;
}

LinearForm LinearForm::difference(int n, VertexPair p, VertexPair q) {
  LinearForm f(n);
  f.add(p, 1);
  f.add(q, -1);
  return f;
}

LinearForm LinearForm::from_vector(const PairIndexer& idx, const RatVector& v) {
  if (v.size() != idx.size()) throw DimensionError("form vector has the wrong length");
  LinearForm f(idx.n());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) != 0) f.terms_.emplace(idx.pair(k), v[k]);
  }
  return f;
}

Rational LinearForm::coefficient(VertexPair p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinearForm::add(VertexPair p, const Rational& c) {
  if (p.i < 1 || p.j > n_ || p.i > p.j) throw DimensionError("pair outside 1..n");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

RatVector LinearForm::to_vector(const PairIndexer& idx) const {
  if (idx.n() != n_) throw DimensionError("form and indexer disagree on n");
  RatVector v(idx.size());
  for (const auto& [p, c] : terms_) v[idx.index(p)] = c;
  return v;
}

LinearForm LinearForm::normalized() const {
  LinearForm f = *this;
  scale_primitive(f.terms_);
  return f;
}

std::string LinearForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    append_term(out, c, variable_name(p, n_), first);
    first = false;
  }
  return out.str();
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

QuadraticForm QuadraticForm::product(const LinearForm& a, const LinearForm& b) {
  if (a.n() != b.n()) throw DimensionError("forms over different n");
  QuadraticForm q(a.n());
  for (const auto& [p, c] : a.terms()) {
    for (const auto& [r, d] : b.terms()) q.add(p, r, c * d);
  }
  return q;
}

void QuadraticForm::add(VertexPair p, VertexPair q, const Rational& c) {
  for (const VertexPair& v : {p, q}) {
    if (v.i < 1 || v.j > n_ || v.i > v.j) throw DimensionError("pair outside 1..n");
  }
  if (sgn(c) == 0) return;
  if (q < p) std::swap(p, q);
  auto [it, inserted] = terms_.try_emplace({p, q}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

QuadraticForm QuadraticForm::normalized() const {
  QuadraticForm f = *this;
  scale_primitive(f.terms_);
  return f;
}

std::string QuadraticForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string body = m.first == m.second
                                 ? variable_name(m.first, n_) + "^2"
                                 : variable_name(m.first, n_) + "*" + variable_name(m.second, n_);
    append_term(out, c, body, first);
    first = false;
  }
  return out.str();
}

namespace {

// Recursive-descent reader for sums of monomials in the x_{ij}.
class FormReader {
 public:
  FormReader(std::string_view text, int n) : text_(text), n_(n) {}

  // Each term: coefficient and its list of variables (with multiplicity).
  std::vector<std::pair<Rational, std::vector<VertexPair>>> read() {
    std::vector<std::pair<Rational, std::vector<VertexPair>>> out;
    skip_space();
    if (at_end()) fail("empty form");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto term = read_term();
      term.first *= sign;
      out.push_back(std::move(term));
      skip_space();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "column " + std::to_string(pos_ + 1), what + " in '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  std::pair<Rational, std::vector<VertexPair>> read_term() {
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(digits());
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        const std::string d = digits();
        if (d.empty()) fail("expected a denominator");
        den = Integer(d);
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    std::vector<VertexPair> vars;
    while (peek() == 'x') {
      ++pos_;
      const VertexPair p = read_index();
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        const std::string e = digits();
        if (e.empty()) fail("expected an exponent");
        power = std::stoi(e);
      }
      for (int k = 0; k < power; ++k) vars.push_back(p);
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'x') fail("expected a variable after '*'");
      }
    }
    if (vars.empty()) fail("expected a variable");
    return {coeff, vars};
  }

  VertexPair read_index() {
    int a = 0;
    int b = 0;
    if (peek() == '{') {
      ++pos_;
      const std::string s = digits();
      if (peek() != ',') fail("expected ','");
      ++pos_;
      const std::string t = digits();
      if (peek() != '}' || s.empty() || t.empty()) fail("malformed index");
      ++pos_;
      a = std::stoi(s);
      b = std::stoi(t);
    } else {
      const std::string s = digits();
      if (peek() == '_') {
        ++pos_;
        const std::string t = digits();
        if (s.empty() || t.empty()) fail("malformed index");
        a = std::stoi(s);
        b = std::stoi(t);
      } else {
        if (s.size() != 2) fail("index '" + s + "' needs a separator (x1_12 or x{1,12})");
        a = s[0] - '0';
        b = s[1] - '0';
      }
    }
    if (a < 1 || b < 1 || a > n_ || b > n_) {
      throw ValidationError(ValidationKind::kVertexRange,
                            "variable index (" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside 1.." + std::to_string(n_));
    }
    return VertexPair::of(a, b);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearForm parse_linear_form(std::string_view text, int n) {
  LinearForm f(n);
  for (const auto& [c, vars] : FormReader(text, n).read()) {
    if (vars.size() != 1) throw ParseError(0, "term", "non-linear term in '" + std::string(text) + "'");
    f.add(vars[0], c);
  }
  return f;
}

QuadraticForm parse_quadratic_form(std::string_view text, int n) {
  QuadraticForm f(n);
  for (const auto& [c, vars] : FormReader(text, n).read()) {
    if (vars.size() != 2) throw ParseError(0, "term", "non-quadratic term in '" + std::string(text) + "'");
    f.add(vars[0], vars[1], c);
  }
  return f;
}

std::size_t span_rank(const std::vector<LinearForm>& forms, const PairIndexer& idx) {
  RowSpace space(idx.size());
  for (const auto& f : forms) space.insert(f.to_vector(idx));
  return space.rank();
}

bool same_span(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b, const PairIndexer& idx) {
  RowSpace sa(idx.size());
  for (const auto& f : a) sa.insert(f.to_vector(idx));
  RowSpace sb(idx.size());
  for (const auto& f : b) {
    if (!sa.contains(f.to_vector(idx))) return false;
    sb.insert(f.to_vector(idx));
  }
  return sa.rank() == sb.rank();
}

}  // namespace recip

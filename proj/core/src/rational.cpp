#include "recip/rational.hpp"

#include "recip/errors.hpp"

namespace recip {

std::string to_string(const Rational& q) { return q.get_str(); }

Integer common_denominator(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void normalize_primitive(std::span<Rational> v) {
  const Integer l = common_denominator(v);
  Integer g = 0;
  int lead_sign = 0;
  for (auto& x : v) {
    x *= l;
    if (sgn(x) == 0) continue;
    if (lead_sign == 0) lead_sign = sgn(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (lead_sign == 0) return;
  const Rational scale(Integer(lead_sign) * g);
  for (auto& x : v) {
    if (sgn(x) != 0) x /= scale;
  }
}

ParseError::ParseError(std::size_t line, std::string field, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ", " + field + ": " + what
                     : field + ": " + what),
      line_(line),
      field_(std::move(field)) {}

const char* to_string(ValidationKind kind) {
  switch (kind) {
    case ValidationKind::kLoop: return "loop";
    case ValidationKind::kDuplicateEdge: return "duplicate edge";
    case ValidationKind::kSharedColour: return "shared colour namespace";
    case ValidationKind::kUncolouredVertex: return "uncoloured vertex";
    case ValidationKind::kUncolouredEdge: return "uncoloured edge";
    case ValidationKind::kVertexRange: return "vertex out of range";
    case ValidationKind::kColourCount: return "colour count mismatch";
    case ValidationKind::kInvalidParameter: return "invalid parameter";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationKind kind, const std::string& what)
    : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace recip

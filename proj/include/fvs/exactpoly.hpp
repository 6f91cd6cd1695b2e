#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fvs {

// Arbitrary-precision rational, always kept canonical (gcd 1, positive
// denominator, zero is 0/1).
using BigRational = mpq_class;

// Parses "p/q", an integer, or a finite decimal such as "1.4" (read exactly as
// 7/5). Throws DomainError on malformed input or a zero denominator.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& x);

// Univariate polynomial with exact rational coefficients, ascending degree.
// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coeffs);

  static RationalPoly monomial(const BigRational& c, int degree);

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& leading() const;
  BigRational coeff(int k) const;

  BigRational eval(const BigRational& x) const;
  double eval(double x) const;
  RationalPoly derivative() const;

  // Positive rational multiple with coprime integer coefficients; the sign of
  // the leading coefficient is preserved.
  RationalPoly primitive_part() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const BigRational& s, const RationalPoly& p);
  RationalPoly operator-() const;
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) = default;

  std::string to_string(std::string_view var = "M") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct PolyDivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

// n = q d + r exactly with deg r < deg d. Throws DomainError if d is zero.
PolyDivMod poly_divmod(const RationalPoly& n, const RationalPoly& d);

// p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k) until the remainder vanishes.
// Members after p0 are rescaled to their primitive parts (positive factors).
struct SturmChain {
  std::vector<RationalPoly> polys;

  std::vector<int> degrees() const;
};

SturmChain sturm_chain(const RationalPoly& p);

// Sign changes of (p0(x), p1(x), ...) with zeros removed.
int sign_variations(const SturmChain& chain, const BigRational& x);

struct RootCount {
  int count = 0;  // distinct real roots in (lo, hi)
  int variations_lo = 0;
  int variations_hi = 0;
  BigRational lo;  // endpoints actually used
  BigRational hi;
  bool lo_perturbed = false;
  bool hi_perturbed = false;
  std::vector<int> chain_degrees;
};

// Endpoint perturbation applied (inwards) when p vanishes at lo or hi.
inline const BigRational kEndpointEpsilon{1, 1000000000};

// Distinct real roots of p in (lo, hi) by Sturm's theorem. Requires lo < hi
// and p nonzero.
RootCount count_roots_in_interval(const RationalPoly& p, const BigRational& lo,
                                  const BigRational& hi);

// Van Leer discriminant factor H(gamma, M) as an exact polynomial in M.
RationalPoly h_poly_exact(const BigRational& gamma);

}  // namespace fvs

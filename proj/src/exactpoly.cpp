#include "fvs/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "fvs/state_space.hpp"

namespace fvs {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class pow10(std::size_t n) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 10;
  return r;
}

int sign_of(const BigRational& x) { return sgn(x); }

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  auto fail = [&original]() -> BigRational {
    throw DomainError("cannot parse exact rational from '" + original + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpz_class num, den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return fail();
    num = mpz_class(std::string(n), 10);
    den = mpz_class(std::string(d), 10);
    if (den == 0) throw DomainError("zero denominator in '" + original + "'");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto ip = text.substr(0, dot), fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      return fail();
    num = mpz_class(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    den = pow10(fp.size());
  } else {
    if (!all_digits(text)) return fail();
    num = mpz_class(std::string(text), 10);
  }
  BigRational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) { return x.get_str(); }

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::monomial(const BigRational& c, int degree) {
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1, BigRational(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational RationalPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  mpz_class content = 0;
  for (const auto& c : coeffs_) {
    mpz_class v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<BigRational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(mpz_class(v / content));
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const BigRational& s, const RationalPoly& p) {
  std::vector<BigRational> v = p.coeffs_;
  for (auto& c : v) c *= s;
  return RationalPoly(std::move(v));
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

PolyDivMod poly_divmod(const RationalPoly& n, const RationalPoly& d) {
  if (d.is_zero()) throw DomainError("polynomial division by the zero polynomial");
  const int dd = d.degree();
  if (n.degree() < dd) return {RationalPoly{}, n};

  std::vector<BigRational> rem = n.coeffs();
  std::vector<BigRational> quot(static_cast<std::size_t>(n.degree() - dd) + 1, BigRational(0));
  const BigRational& lead = d.leading();
  for (int k = n.degree(); k >= dd; --k) {
    const BigRational factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * d.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

std::vector<int> SturmChain::degrees() const {
  std::vector<int> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.degree());
  return out;
}

SturmChain sturm_chain(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  SturmChain chain;
  chain.polys.push_back(p);
  RationalPoly next = p.derivative();
  if (next.is_zero()) return chain;
  chain.polys.push_back(next.primitive_part());
  while (true) {
    const auto& prev = chain.polys[chain.polys.size() - 2];
    const auto& cur = chain.polys.back();
    RationalPoly r = poly_divmod(prev, cur).remainder;
    if (r.is_zero()) break;
    chain.polys.push_back((-r).primitive_part());
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const BigRational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain.polys) {
    const int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RootCount count_roots_in_interval(const RationalPoly& p, const BigRational& lo,
                                  const BigRational& hi) {
  if (p.is_zero()) throw DomainError("root count of the zero polynomial");
  if (!(lo < hi)) throw DomainError("root-count interval requires lo < hi");

  RootCount out;
  out.lo = lo;
  out.hi = hi;
  while (p.eval(out.lo) == 0) {
    out.lo += kEndpointEpsilon;
    out.lo_perturbed = true;
  }
  while (p.eval(out.hi) == 0) {
    out.hi -= kEndpointEpsilon;
    out.hi_perturbed = true;
  }
  if (!(out.lo < out.hi)) throw DomainError("interval collapsed after endpoint perturbation");

  const SturmChain chain = sturm_chain(p);
  out.chain_degrees = chain.degrees();
  out.variations_lo = sign_variations(chain, out.lo);
  out.variations_hi = sign_variations(chain, out.hi);
  out.count = out.variations_lo - out.variations_hi;
  return out;
}

RationalPoly h_poly_exact(const BigRational& gamma) {
  const BigRational g = gamma;
  const BigRational g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
  std::vector<BigRational> c = {
      57 * g4 + 26 * g3 + 53 * g2 + 84 * g + 36,
      -42 * g4 - 20 * g3 - 50 * g2 - 72 * g - 72,
      -13 * g4 + 26 * g3 + 39 * g2 - 24 * g + 36,
      20 * g4 - 44 * g2 + 24 * g,
      -5 * g4 - 2 * g3 + 19 * g2 - 12 * g,
      -2 * g4 + 4 * g3 - 2 * g2,
      (g - 1) * (g - 1) * g2,
  };
  return RationalPoly(std::move(c));
}

}  // namespace fvs

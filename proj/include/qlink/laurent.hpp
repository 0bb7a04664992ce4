#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace qlink {

using BigInt = boost::multiprecision::cpp_int;

struct DivideByZero : std::runtime_error {
  DivideByZero() : std::runtime_error("division by zero") {}
};

struct DivisionNotExact : std::runtime_error {
  explicit DivisionNotExact(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& what, size_t p)
      : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

// Gaussian integer, the coefficient ring Z[i].
struct GaussInt {
  BigInt re, im;

  GaussInt() : re(0), im(0) {}
  GaussInt(long r) : re(r), im(0) {}
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  // Unit means +-1 or +-i; the invertible elements of Z[i].
  bool is_unit() const;

  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussInt& o) const { return !(*this == o); }

  // Exact quotient in Z[i]; sets ok=false when *this is not divisible by d.
  GaussInt div_exact(const GaussInt& d, bool& ok) const;
};

// Laurent polynomial in x = q^{1/4} over the Gaussian integers.  Exponents are
// stored in quarter-powers of q, so q^{1/2} is the monomial with exponent 2.
// The term map is canonical: no zero coefficients are ever stored.
class Laurent {
 public:
  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(GaussInt(1), 0); }
  static Laurent monomial(GaussInt c, int quarter_exp);
  // q^{num/den} with den in {1,2,4}.
  static Laurent q_power(int num, int den);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, GaussInt>& terms() const { return terms_; }
  int top_exponent() const;     // throws on zero
  int bottom_exponent() const;  // throws on zero

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Multiplicative inverse; defined only for unit monomials (+-1, +-i times a
  // power of x), which covers every alpha and gamma we ever invert.
  Laurent inverse() const;
  // Integer power; negative k requires a unit monomial base.
  Laurent pow(int k) const;
  // p(x) -> p(1/x); sends every scalar of a spec to its mirror partner.
  Laurent invert_variable() const;

  std::complex<double> eval(std::complex<double> x0) const;

  std::string render() const;
  static Laurent parse(const std::string& text);

  std::string to_json() const;
  static Laurent from_json(const std::string& text);

 private:
  std::map<int, GaussInt> terms_;

  void add_term(int e, const GaussInt& c);
  friend Laurent exact_div(const Laurent& p, const Laurent& r);
};

// Exact quotient u with u*r == p; throws DivisionNotExact / DivideByZero.
Laurent exact_div(const Laurent& p, const Laurent& r);

}  // namespace qlink

#pragma once

/*
  Exact arithmetic on polynomials and rational functions in two formal
  variables u and X over the rationals.

  Convention: u stands for the generic prime p and X for p^{-s}, so a
  quantity p^{a-bs} is the monomial u^a X^b.  All local zeta factors of the
  catalog live here: zeta_p(as+b) = 1/(1 - u^{-b} X^a) for b <= 0, and
  L-factors 1/(1 - chi(p) u^{-b} X^a) likewise.
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta3ab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct rat_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* monomial u^du X^dx; ordering is deg_u major, deg_X minor (also the
   documented term order of the JSON dumps) */
struct Mono {
    int du = 0;
    int dx = 0;
    friend auto operator<=>(const Mono&, const Mono&) = default;
};

class PolyUX {
  public:
    PolyUX() = default;
    PolyUX(long c) { if (c != 0) terms_[{0, 0}] = c; }
    PolyUX(const Rat& c) { if (c != 0) terms_[{0, 0}] = c; }

    static PolyUX monomial(int du, int dx, Rat c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int deg_u() const;
    int deg_x() const;
    const std::map<Mono, Rat>& terms() const { return terms_; }

    /* coefficient of u^du X^dx (zero if absent) */
    Rat coeff(int du, int dx) const;

    PolyUX& operator+=(const PolyUX& o);
    PolyUX& operator-=(const PolyUX& o);
    friend PolyUX operator+(PolyUX a, const PolyUX& b) { return a += b; }
    friend PolyUX operator-(PolyUX a, const PolyUX& b) { return a -= b; }
    friend PolyUX operator*(const PolyUX& a, const PolyUX& b);
    friend PolyUX operator-(const PolyUX& a);
    friend bool operator==(const PolyUX& a, const PolyUX& b) { return a.terms_ == b.terms_; }

    /* exact division; nullopt if o does not divide *this */
    std::optional<PolyUX> divide_exact(const PolyUX& o) const;

    /* substitute u <- p, return dense coefficient list in X (index = deg_X) */
    std::vector<Rat> eval_u(const Int& p) const;

    std::string str() const;

    void set(int du, int dx, Rat c);

  private:
    std::map<Mono, Rat> terms_;  // no zero coefficients stored
};

/* Quotient of two PolyUX.  Kept in a best-effort canonical form: common
   factors from the standard basis {1 - u^j X^a} u {1 + u^j X^a} (j<=6,
   a<=4) and rational content are divided out.  Equality is always decided
   by cross-multiplication, never by comparing canonical forms. */
class RationalUX {
  public:
    RationalUX() : num_(1), den_(1) {}
    RationalUX(long c) : num_(c), den_(1) {}
    RationalUX(PolyUX n) : num_(std::move(n)), den_(1) {}
    RationalUX(PolyUX n, PolyUX d);

    const PolyUX& num() const { return num_; }
    const PolyUX& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalUX operator*(const RationalUX& a, const RationalUX& b);
    friend RationalUX operator+(const RationalUX& a, const RationalUX& b);
    friend RationalUX operator-(const RationalUX& a, const RationalUX& b);
    RationalUX inverse() const;

    /* cross-multiplication equality */
    bool equals(const RationalUX& o) const;

    /* formal substitution u -> 1/u, X -> 1/X followed by clearing the
       minimal monomial u^A X^B so numerator and denominator are again
       polynomials */
    RationalUX substitute_inverse() const;

    /* power series expansion in X at u = p; requires the denominator's
       constant term at u = p to be nonzero */
    std::vector<Rat> series(const Int& p, int m) const;

    std::string str() const;

  private:
    void reduce();
    PolyUX num_, den_;
};

/* zeta_p(as + b) as a rational function of (u, X); requires b <= 0 */
RationalUX zeta_factor(int a, int b);

/* L(as + b, chi, p) with chi(p) = chi_value in {-1, 0, +1}; factor 1 when
   chi_value = 0 (ramified prime) */
RationalUX l_factor(int a, int b, int chi_value);

/* the monomial u^du X^dx */
RationalUX ux_monomial(int du, int dx, Rat c = 1);

/* residue characters mod 3 and mod 4 */
int chi3(long long n);
int chi4(long long n);

long long vp(long long n, long long p);  // p-adic valuation, n != 0

}  // namespace zeta3ab

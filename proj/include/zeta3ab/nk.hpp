#pragma once

/*
  Normal-form arithmetic in N_k = <x1,x2,x3 | [x2,x1] = x3^k, x3 central>.
  An element is the exponent triple (a1,a2,a3) of x1^{a1} x2^{a2} x3^{a3}.

  Collection convention, fixed once for the whole project and validated by
  the relator tests:

      (a1,a2,a3) * (b1,b2,b3) = (a1+b1, a2+b2, a3+b3 + k*a2*b1).

  With commutators read as [a,b] = a^{-1} b^{-1} a b this gives
  [x2,x1] = x3^k exactly.
*/

namespace zeta3ab {

template <class I>
struct Nk {
    I a1 = 0, a2 = 0, a3 = 0;
    friend bool operator==(const Nk&, const Nk&) = default;
};

template <class I>
Nk<I> nk_mul(const I& k, const Nk<I>& a, const Nk<I>& b) {
    return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3 + k * a.a2 * b.a1};
}

template <class I>
Nk<I> nk_inv(const I& k, const Nk<I>& a) {
    return {-a.a1, -a.a2, -a.a3 + k * a.a1 * a.a2};
}

/* a^e for any integer e; e(e-1)/2 is the collection correction */
template <class I>
Nk<I> nk_pow(const I& k, const Nk<I>& a, const I& e) {
    I half = e * (e - 1) / 2;
    return {e * a.a1, e * a.a2, e * a.a3 + k * a.a1 * a.a2 * half};
}

template <class I>
bool nk_is_identity(const Nk<I>& a) {
    return a.a1 == 0 && a.a2 == 0 && a.a3 == 0;
}

}  // namespace zeta3ab

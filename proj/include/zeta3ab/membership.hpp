#pragma once

/*
  Good-basis test and membership in the open subgroup
  B_t = closure< x^{t_1}, x^{t_2}, x^{t_3} > of the pro-p completion of N_k,
  for an upper triangular basis matrix t.

  Membership peels the rows off sequentially with exact integer division:
  each quotient is formed only after the divisibility that makes it
  integral has been checked, so no rational arithmetic is needed.
*/

#include "zeta3ab/nk.hpp"

namespace zeta3ab {

template <class I>
struct Basis {
    I t11 = 1, t22 = 1, t33 = 1;
    I t12 = 0, t13 = 0, t23 = 0;
};

/* t represents a good basis iff t33 | k*t11*t22 (t33 | 0 holds for k = 0) */
template <class I>
bool is_good_basis(const I& k, const Basis<I>& t) {
    return (k * t.t11 * t.t22) % t.t33 == 0;
}

/* x^{(e1,e2,e3)} in B_t?  Assumes is_good_basis(k, t). */
template <class I>
bool in_Bt(const I& k, const Basis<I>& t, const Nk<I>& e) {
    if (e.a1 % t.t11 != 0) return false;
    const I l1 = e.a1 / t.t11;
    const I u2 = e.a2 - l1 * t.t12;
    if (u2 % t.t22 != 0) return false;
    const I l2 = u2 / t.t22;
    const I u3 = e.a3 - l1 * t.t13 - k * t.t11 * t.t12 * (l1 * (l1 - 1) / 2) - l2 * t.t23;
    return u3 % t.t33 == 0;
}

/* value whose divisibility by t33 is the third membership condition;
   only meaningful when the first two conditions hold */
template <class I>
I in_Bt_third_value(const I& k, const Basis<I>& t, const Nk<I>& e) {
    const I l1 = e.a1 / t.t11;
    const I l2 = (e.a2 - l1 * t.t12) / t.t22;
    return e.a3 - l1 * t.t13 - k * t.t11 * t.t12 * (l1 * (l1 - 1) / 2) - l2 * t.t23;
}

}  // namespace zeta3ab

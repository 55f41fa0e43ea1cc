#pragma once

/*
  The family catalog: one record per 3-dimensional almost Bieberbach group
  family, carrying the presentation (as machine-checkable data), the
  closed-form local factors, the functional-equation metadata, the global
  formula as printed, the stated abscissa of convergence, and any errata
  flags where a printed display disagrees with what the enumeration
  confirms.
*/

#include "zeta3ab/group.hpp"
#include "zeta3ab/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zeta3ab {

using I128 = __int128;

struct Params {
    long long q = 1;  // families with k = 2q, 3q, 4q, 6q, 6q+2, 6q+4
    long long r = 1;  // Q=p3 family G: k = r, r not divisible by 3
    long long k = 0;  // the nilpotent family N_k takes k directly
};

/* integer linear in the parameter q: c0 + cq*q (r-families use q := r) */
struct LinQ {
    long long c0 = 0, cq = 0;
    long long operator()(long long q) const { return c0 + cq * q; }
};

/* x1^{e1} x2^{e2} x3^{e3(q)} */
struct TripleQ {
    long long e1 = 0, e2 = 0;
    LinQ e3;
};

/* one letter of a presentation word; sym: 1..3 = x1..x3, 4..5 = generators */
struct Letter {
    int sym;
    LinQ exp;
};
using Word = std::vector<Letter>;

struct Errata {
    std::string site;     // which printed display
    std::string printed;  // the display as printed
    std::string note;     // what the machine confirms instead
};

enum class CharTag { none, chi3, chi4 };

struct LocalFactor {
    RationalUX f;
    std::string form;    // human-readable product form
    std::string branch;  // "p=2", "p=3", "generic"
};

struct FunctionalEquationRule {
    int sign = -1;    // always (-1)^3 in this catalog
    int c;            // u-exponent: substitute_inverse(f) = sign*chi(p)*u^c*X^3*f
    CharTag chi = CharTag::none;
};

struct FamilySpec {
    std::string name;     // catalog key, e.g. "G2", "B1", "p4_E", "p6_H", "Nk"
    std::string display;  // one-line description for `list`
    HolKind kind = HolKind::trivial;
    int order = 1;  // r = |Q|
    int ngens = 0;  // t
    std::string kshape;
    bool has_q = false, has_r = false, has_k = false;
    int epsilon = 0, delta = 0;
    int abscissa;

    std::function<long long(const Params&)> k_of;

    /* presentation data (q-parametric) */
    TripleQ phi[2][3];
    TripleQ power[2];  // cyclic: gamma^d; klein: alpha^2, beta^2
    int swap_kind = 0; // 0 none, 1 comm (b*a*b^-1*a^-1 = A), 2 (alpha*beta)^2 = A,
                       // 3 gamma1*gamma2 = A * gamma2*gamma1 * B
    TripleQ swap_a, swap_b;
    std::vector<std::vector<int>> relators;             // gamma-words for the oracle
    std::vector<std::pair<Word, Word>> presentation;    // printed relations, verbatim

    std::function<LocalFactor(long long p, const Params&)> local;
    FunctionalEquationRule fe;
    std::function<RationalUX(long long p, const Params&)> printed_global;
    std::vector<Errata> errata;

    bool valid_params(const Params&) const;
    std::string params_str(const Params&) const;
    int abscissa_of(const Params&) const;  // N_k depends on k

    /* good prime for the functional-equation check: p coprime to 6 and to k */
    bool fe_guard(long long p, const Params& pr) const;
};

const std::vector<FamilySpec>& catalog();
const FamilySpec* find_family(const std::string& name);

/* instantiate the group arithmetic for concrete parameters */
template <class I>
GroupCtx<I> make_group(const FamilySpec& fam, const Params& pr);

/* evaluate every printed presentation relation with g_mul; returns a list
   of human-readable failures (empty = catalog transcription is sound) */
std::vector<std::string> check_presentation(const FamilySpec& fam, const Params& pr);

/* default parameter grids (q in 1..8, r in {1,2,4,5,7,8}) */
std::vector<Params> default_param_grid(const FamilySpec& fam, bool small = true);

int chi_value(CharTag tag, long long p);

extern template GroupCtx<I128> make_group<I128>(const FamilySpec&, const Params&);
extern template GroupCtx<Int> make_group<Int>(const FamilySpec&, const Params&);

}  // namespace zeta3ab

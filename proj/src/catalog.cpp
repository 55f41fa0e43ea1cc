#include "zeta3ab/family.hpp"

#include <sstream>

/*
  The machine-readable catalog of all 3-dimensional almost Bieberbach
  group families: the nilpotent groups N_k, the nine non-abelian
  Bieberbach groups G2..G6, B1..B4, and the non-Bieberbach families of
  holonomy type Q = p2, pg, p2gg, p4 (E,F), p3 (E,F,G), p6 (E,F,G,H).

  Every presentation relation is stored verbatim and machine-checked by
  check_presentation(); the translated condition lists are never
  hard-coded (the oracle re-derives them), so the closed forms below are
  the only transcription that actually has to be right, and they are
  cross-checked against the enumeration by the verification suite.

  Where a printed display disagrees with what the enumeration confirms,
  the catalog keeps the confirmed form and records the printed one in the
  errata list of the family.
*/

namespace zeta3ab {

namespace {

RationalUX Z(int a, int b) { return zeta_factor(a, b); }
RationalUX Lf(int a, int b, int chiv) { return l_factor(a, b, chiv); }
RationalUX M(int du, int dx) { return ux_monomial(du, dx); }

/* the polynomial 1 - sign*u^du X^dx as a rational function */
RationalUX one_minus(int du, int dx, int sign = 1) {
    return RationalUX(PolyUX(1) - PolyUX::monomial(du, dx, sign));
}

/* 1 - chiv*u^du X^dx; equals 1 when chiv = 0 */
RationalUX one_minus_chi(int du, int dx, int chiv) {
    if (chiv == 0) return RationalUX(1);
    return one_minus(du, dx, chiv);
}

std::string vtag(long long v) {
    return "[v=" + std::to_string(v) + "]";
}

/* zeta_p(s-2) * (zeta_p(s) zeta_p(s-1) - p^{(2-s)(v+1)} zeta_p(2s-2) zeta_p(2s-3)) */
RationalUX nk_bracketed(long long v) {
    return Z(1, -2) * (Z(1, 0) * Z(1, -1) - M(int(2 * (v + 1)), int(v + 1)) * Z(2, -2) * Z(2, -3));
}

/* the Q=p4/p3/p6 generic-prime factor:
   zeta_p(s)(zeta_p(2s-2) - p^{-s(v+1)} zeta_p(4s-2))
   + (chi+1) zeta_p(s) p^{-(s-1)} (zeta_p(s-1) zeta_p(2s-2) - p^{-s(v+2)} zeta_p(4s-2) zeta_p(2s-1)) */
RationalUX hex_bracket(long long v, int chiv) {
    RationalUX a = Z(1, 0) * (Z(2, -2) - M(0, int(v + 1)) * Z(4, -2));
    RationalUX b = Z(1, 0) * M(1, 1) * (Z(1, -1) * Z(2, -2) - M(0, int(v + 2)) * Z(4, -2) * Z(2, -1));
    return a + RationalUX(long(chiv + 1)) * b;
}

/* the Q=p2 generic-prime factor:
   zeta_p(s)(zeta_p(s-1) zeta_p(s-2) - p^{-s(v+1)} zeta_p(2s-1) zeta_p(2s-2)) */
RationalUX p2_bracket_inner(long long v) {
    return Z(1, -1) * Z(1, -2) - M(0, int(v + 1)) * Z(2, -1) * Z(2, -2);
}

/* the Q=p2gg generic-prime factor:
   zeta_p(s-1)(zeta_p(s-1)^2 - p^{-(s-1)(v+1)} zeta_p(2s-2)^2) */
RationalUX p2gg_bracket_inner(long long v) {
    return Z(1, -1) * Z(1, -1) - M(int(v + 1), int(v + 1)) * Z(2, -2) * Z(2, -2);
}

RationalUX nk_bracket_inner(long long v) {
    return Z(1, 0) * Z(1, -1) - M(int(2 * (v + 1)), int(v + 1)) * Z(2, -2) * Z(2, -3);
}

/* shorthand for presentation letters */
Letter X1(long long e = 1) { return {1, {e, 0}}; }
Letter X2(long long e = 1) { return {2, {e, 0}}; }
Letter X3(long long e = 1) { return {3, {e, 0}}; }
Letter X3q(long long c0, long long cq) { return {3, {c0, cq}}; }
Letter Ga(long long e = 1) { return {4, {e, 0}}; }
Letter Gb(long long e = 1) { return {5, {e, 0}}; }

TripleQ tq(long long e1, long long e2, long long c0, long long cq = 0) {
    return {e1, e2, {c0, cq}};
}

/* base Euler factor at p of zeta(s-1) zeta(2s-1) L(s-1,chi) L(2s-1,chi) / L(3s-2,chi) */
RationalUX hex_base(long long p, CharTag tag) {
    const int c = chi_value(tag, p);
    return Z(1, -1) * Z(2, -1) * Lf(1, -1, c) * Lf(2, -1, c) * one_minus_chi(2, 3, c);
}

/* the printed L-series correction factor of the Q=p3/p6 global displays,
   chi_4 in the numerator as printed */
RationalUX hex_printed_corr(long long p, CharTag tag) {
    const int c = chi_value(tag, p);
    return Lf(3, -2, chi4(p)) * one_minus(1, 1) * one_minus(1, 2) *
           one_minus_chi(1, 1, c) * one_minus_chi(1, 2, c);
}

FamilySpec make_g_family(const std::string& name, const std::string& it, int order) {
    FamilySpec f;
    f.name = name;
    f.kind = HolKind::cyclic;
    f.order = order;
    f.ngens = 1;
    f.kshape = "0";
    f.k_of = [](const Params&) { return 0LL; };
    f.relators = {std::vector<int>(order, 1)};
    f.display = "Bieberbach " + name + ", IT " + it + ", Q = C" + std::to_string(order) + ", k = 0";
    return f;
}

std::vector<FamilySpec> build_catalog() {
    std::vector<FamilySpec> cat;

    /* ---------------- N_k ---------------- */
    {
        FamilySpec f;
        f.name = "Nk";
        f.display = "nilpotent N_k = <x1,x2,x3 | [x2,x1]=x3^k>, trivial holonomy";
        f.kind = HolKind::trivial;
        f.order = 1;
        f.ngens = 0;
        f.kshape = "k";
        f.has_k = true;
        f.abscissa = 3;  // k = 0; 2 for k > 0 (see abscissa_of)
        f.k_of = [](const Params& pr) { return pr.k; };
        f.local = [](long long p, const Params& pr) -> LocalFactor {
            if (pr.k == 0)
                return {Z(1, 0) * Z(1, -1) * Z(1, -2), "Z(1,0)*Z(1,-1)*Z(1,-2)", "generic"};
            long long v = vp(pr.k, p);
            return {nk_bracketed(v),
                    "Z(1,-2)*(Z(1,0)*Z(1,-1) - u^" + std::to_string(2 * (v + 1)) + "X^" +
                        std::to_string(v + 1) + "*Z(2,-2)*Z(2,-3)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params& pr) -> RationalUX {
            if (pr.k == 0) return Z(1, 0) * Z(1, -1) * Z(1, -2);
            RationalUX base = Z(1, 0) * Z(1, -1) * Z(2, -2) * Z(2, -3) * one_minus(3, 3);
            if (pr.k % p == 0)
                base = base * nk_bracket_inner(vp(pr.k, p)) * nk_bracket_inner(0).inverse();
            return base;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- G2 ---------------- */
    {
        FamilySpec f = make_g_family("G2", "(3,4)", 2);
        f.abscissa = 3;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0);
        f.phi[0][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2(-1)}},
            {{Ga(), X3(), Ga(-1)}, {X3(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) return {Z(1, -1) * Z(1, -2), "Z(1,-1)*Z(1,-2)", "p=2"};
            return {Z(1, 0) * Z(1, -1) * Z(1, -2), "Z(1,0)*Z(1,-1)*Z(1,-2)", "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(1, -2);
            if (p == 2) g = g * one_minus(0, 1);
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- G3 ---------------- */
    {
        FamilySpec f = make_g_family("G3", "(3,144)", 3);
        f.abscissa = 2;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, 0, 1);
        f.phi[0][2] = tq(0, -1, -1);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(3)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X3()}},
            {{Ga(), X3(), Ga(-1)}, {X2(-1), X3(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 3) return {Z(1, -1), "Z(1,-1)", "p=3"};
            return {Z(1, 0) * Z(1, -1) * Lf(1, -1, chi3(p)),
                    "Z(1,0)*Z(1,-1)*L(1,-1;chi3)", "generic"};
        };
        f.fe = {-1, 2, CharTag::chi3};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Lf(1, -1, chi3(p));
            if (p == 3) g = g * one_minus(0, 1) * one_minus_chi(1, 1, chi3(3));
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- G4 ---------------- */
    {
        FamilySpec f = make_g_family("G4", "(3,76)", 4);
        f.abscissa = 2;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, 0, 1);
        f.phi[0][2] = tq(0, -1, 0);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(4)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X3()}},
            {{Ga(), X3(), Ga(-1)}, {X2(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) return {Z(1, -1), "Z(1,-1)", "p=2"};
            return {Z(1, 0) * Z(1, -1) * Lf(1, -1, chi4(p)),
                    "Z(1,0)*Z(1,-1)*L(1,-1;chi4)", "generic"};
        };
        f.fe = {-1, 2, CharTag::chi4};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Lf(1, -1, chi4(p));
            if (p == 2) g = g * one_minus(0, 1) * one_minus_chi(1, 1, chi4(2));
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- G5 ---------------- */
    {
        FamilySpec f = make_g_family("G5", "(3,169)", 6);
        f.abscissa = 2;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, 0, 1);
        f.phi[0][2] = tq(0, -1, 1);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(6)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X3()}},
            {{Ga(), X3(), Ga(-1)}, {X2(-1), X3()}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) return {Z(2, -2), "Z(2,-2)", "p=2"};
            if (p == 3) return {Z(1, -1), "Z(1,-1)", "p=3"};
            return {Z(1, 0) * Z(1, -1) * Lf(1, -1, chi3(p)),
                    "Z(1,0)*Z(1,-1)*L(1,-1;chi3)", "generic"};
        };
        f.fe = {-1, 2, CharTag::chi3};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Lf(1, -1, chi3(p));
            if (p == 2)
                g = g * Z(2, -2) * one_minus(0, 1) * one_minus(1, 1) * one_minus_chi(1, 1, chi3(2));
            if (p == 3) g = g * one_minus(0, 1) * one_minus_chi(1, 1, chi3(3));
            return g;
        };
        f.errata = {
            {"presentation", "gamma^6 = 1",
             "stored as gamma^6 = x1: the printed relation contradicts torsion-freeness and "
             "the translated condition x1^{6 v1 + 1} in B_t"},
            {"local factor at p=3", "zeta_2(s-1)",
             "confirmed zeta_3(s-1); the printed global display already carries the correct "
             "p=3 factor"},
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- G6 ---------------- */
    {
        FamilySpec f;
        f.name = "G6";
        f.display = "Bieberbach G6, IT (3,19), Q = C2 x C2, k = 0";
        f.kind = HolKind::klein;
        f.order = 4;
        f.ngens = 2;
        f.kshape = "0";
        f.abscissa = 2;
        f.k_of = [](const Params&) { return 0LL; };
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0);
        f.phi[0][2] = tq(0, 0, -1);
        f.phi[1][0] = tq(-1, 0, 0);
        f.phi[1][1] = tq(0, 1, 0);
        f.phi[1][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.power[1] = tq(0, 1, 0);
        f.swap_kind = 2;
        f.swap_a = tq(0, 0, -1);  // (alpha beta)^2 = x3^{-1}
        f.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2}};
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2(-1)}},
            {{Ga(), X3(), Ga(-1)}, {X3(-1)}},
            {{Gb(2)}, {X2()}},
            {{Gb(), X1(), Gb(-1)}, {X1(-1)}},
            {{Gb(), X3(), Gb(-1)}, {X3(-1)}},
            {{Ga(), Gb(), Ga(), Gb()}, {X3(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) return {RationalUX(1), "1", "p=2"};
            return {Z(1, -1) * Z(1, -1) * Z(1, -1), "Z(1,-1)^3", "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, -1) * Z(1, -1) * Z(1, -1);
            if (p == 2) g = g * one_minus(1, 1) * one_minus(1, 1) * one_minus(1, 1);
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- B1 ---------------- */
    {
        FamilySpec f = make_g_family("B1", "(3,7)", 2);
        f.abscissa = 2;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, 1, 0);
        f.phi[0][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2()}},
            {{Ga(), X3(), Ga(-1)}, {X3(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) {
                RationalUX f2 = RationalUX(PolyUX(1) + PolyUX::monomial(1, 1)) * Z(1, -1) * Z(1, -1);
                return {f2, "(1+uX)*Z(1,-1)^2", "p=2"};
            }
            return {Z(1, 0) * Z(1, -1) * Z(1, -1), "Z(1,0)*Z(1,-1)^2", "generic"};
        };
        f.fe = {-1, 2, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(1, -1);
            if (p == 2) g = g * one_minus(0, 1) * RationalUX(PolyUX(1) + PolyUX::monomial(1, 1));
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- B2 ---------------- */
    {
        FamilySpec f = make_g_family("B2", "(3,9)", 2);
        f.abscissa = 2;
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, 1, 0);
        f.phi[0][2] = tq(0, 1, -1);
        f.power[0] = tq(1, 0, 0);
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2()}},
            {{Ga(), X3(), Ga(-1)}, {X2(), X3(-1)}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) {
                // 1 + 2^{1-s} (1 + 2^{1-s}) zeta_2(s-1)^2 = (1 - uX + 2u^2X^2)/(1-uX)^2
                PolyUX num = PolyUX(1) - PolyUX::monomial(1, 1) + PolyUX::monomial(2, 2, 2);
                RationalUX f2 = RationalUX(num) * Z(1, -1) * Z(1, -1);
                return {f2, "(1-uX+2u^2X^2)*Z(1,-1)^2", "p=2"};
            }
            return {Z(1, 0) * Z(1, -1) * Z(1, -1), "Z(1,0)*Z(1,-1)^2", "generic"};
        };
        f.fe = {-1, 2, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(1, -1);
            if (p == 2) {
                PolyUX printed = PolyUX(1) + PolyUX::monomial(1, 1) + PolyUX::monomial(3, 2);
                g = g * one_minus(0, 1) * RationalUX(printed);
            }
            return g;
        };
        f.errata = {
            {"local factor at p=2",
             "zeta_{B2,N,2}(s) = 1 + 2 zeta_{B2,N,2}(s) = zeta(s-1)^2 (1 + 2^{1-s} + 2^{3-2s})",
             "circular as printed, and the expansion [1,6,28,...] disagrees with the "
             "enumeration [1,2,12,...]; the confirmed factor is "
             "1 + 2^{1-s}(1+2^{1-s}) zeta_2(s-1)^2 = (1-uX+2u^2X^2)/(1-uX)^2, i.e. the two "
             "index-2 subgroups isomorphic to B1 each contribute 2^{-s} zeta_{B1,N',2}(s)"},
            {"global formula", "zeta(s) zeta(s-1)^2 (1 + 2^{1-s} + 2^{3-2s}) / zeta_2(s)",
             "the 2-adic part inherits the local error; the assembled global uses the "
             "confirmed p=2 factor"},
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- B3 ---------------- */
    {
        FamilySpec f;
        f.name = "B3";
        f.display = "Bieberbach B3, IT (3,29), Q = C2 x C2, k = 0";
        f.kind = HolKind::klein;
        f.order = 4;
        f.ngens = 2;
        f.kshape = "0";
        f.abscissa = 2;
        f.k_of = [](const Params&) { return 0LL; };
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0);
        f.phi[0][2] = tq(0, 0, -1);
        f.phi[1][0] = tq(1, 0, 0);
        f.phi[1][1] = tq(0, 1, 0);
        f.phi[1][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.power[1] = tq(0, 1, 0);
        f.swap_kind = 1;
        f.swap_a = tq(0, 1, 0);  // beta alpha beta^{-1} alpha^{-1} = x2
        f.relators = {{1, 1}, {2, 2}, {2, 1, -2, -1}};
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2(-1)}},
            {{Ga(), X3(), Ga(-1)}, {X3(-1)}},
            {{Gb(2)}, {X2()}},
            {{Gb(), X1(), Gb(-1)}, {X1()}},
            {{Gb(), X3(), Gb(-1)}, {X3(-1)}},
            {{Gb(), Ga(), Gb(-1), Ga(-1)}, {X2()}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) {
                RationalUX f2 = RationalUX(PolyUX(1) + PolyUX::monomial(1, 1)) * Z(1, -1);
                return {f2, "(1+uX)*Z(1,-1)", "p=2"};
            }
            return {Z(1, 0) * Z(1, -1) * Z(1, -1), "Z(1,0)*Z(1,-1)^2", "generic"};
        };
        f.fe = {-1, 2, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(1, -1);
            if (p == 2)
                g = g * RationalUX(PolyUX(1) + PolyUX::monomial(1, 1)) * one_minus(0, 1) *
                    one_minus(1, 1);
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- B4 ---------------- */
    {
        FamilySpec f;
        f.name = "B4";
        f.display = "Bieberbach B4, IT (3,33), Q = C2 x C2, k = 0";
        f.kind = HolKind::klein;
        f.order = 4;
        f.ngens = 2;
        f.kshape = "0";
        f.abscissa = 2;
        f.k_of = [](const Params&) { return 0LL; };
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0);
        f.phi[0][2] = tq(0, 0, -1);
        f.phi[1][0] = tq(1, 0, 0);
        f.phi[1][1] = tq(0, 1, 0);
        f.phi[1][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.power[1] = tq(0, 1, 0);
        f.swap_kind = 1;
        f.swap_a = tq(0, 1, 1);  // beta alpha beta^{-1} alpha^{-1} = x2 x3
        f.relators = {{1, 1}, {2, 2}, {2, 1, -2, -1}};
        f.presentation = {
            {{Ga(2)}, {X1()}},
            {{Ga(), X2(), Ga(-1)}, {X2(-1)}},
            {{Ga(), X3(), Ga(-1)}, {X3(-1)}},
            {{Gb(2)}, {X2()}},
            {{Gb(), X1(), Gb(-1)}, {X1()}},
            {{Gb(), X3(), Gb(-1)}, {X3(-1)}},
            {{Gb(), Ga(), Gb(-1), Ga(-1)}, {X2(), X3()}},
        };
        f.local = [](long long p, const Params&) -> LocalFactor {
            if (p == 2) return {RationalUX(1), "1", "p=2"};
            return {Z(1, 0) * Z(1, -1) * Z(1, -1), "Z(1,0)*Z(1,-1)^2", "generic"};
        };
        f.fe = {-1, 2, CharTag::none};
        f.printed_global = [](long long p, const Params&) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(1, -1);
            if (p == 2) g = g * one_minus(0, 1) * one_minus(1, 1) * one_minus(1, 1);
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = p2 ---------------- */
    {
        FamilySpec f;
        f.name = "p2";
        f.display = "Q=p2 E: k=2q, Q = C2, gamma^2 = x3";
        f.kind = HolKind::cyclic;
        f.order = 2;
        f.ngens = 1;
        f.kshape = "2q";
        f.has_q = true;
        f.abscissa = 3;
        f.k_of = [](const Params& pr) { return 2 * pr.q; };
        f.phi[0][0] = tq(-1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0);
        f.phi[0][2] = tq(0, 0, 1);
        f.power[0] = tq(0, 0, 1);
        f.relators = {{1, 1}};
        f.presentation = {
            {{Ga(), X1()}, {X1(-1), Ga()}},
            {{Ga(), X2()}, {X2(-1), Ga()}},
            {{Ga(), X3()}, {X3(), Ga()}},
            {{Ga(2)}, {X3()}},
        };
        f.local = [](long long p, const Params& pr) -> LocalFactor {
            if (p == 2) return {Z(1, -1) * Z(1, -2), "Z(1,-1)*Z(1,-2)", "p=2"};
            long long v = vp(2 * pr.q, p);
            return {Z(1, 0) * p2_bracket_inner(v),
                    "Z(1,0)*(Z(1,-1)*Z(1,-2) - X^" + std::to_string(v + 1) +
                        "*Z(2,-1)*Z(2,-2)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params& pr) -> RationalUX {
            RationalUX g = Z(1, -1) * Z(1, -2) * Z(2, -1) * Z(2, -2) * one_minus(3, 3);
            if (p == 2) g = g * Z(3, -3) * one_minus(1, 2) * one_minus(2, 2);
            else if (pr.q % p == 0)
                g = g * p2_bracket_inner(vp(pr.q, p)) * p2_bracket_inner(0).inverse();
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = pg ---------------- */
    {
        FamilySpec f;
        f.name = "pg";
        f.display = "Q=pg E: k=2q, Q = C2, gamma^2 = x1";
        f.kind = HolKind::cyclic;
        f.order = 2;
        f.ngens = 1;
        f.kshape = "2q";
        f.has_q = true;
        f.abscissa = 2;
        f.k_of = [](const Params& pr) { return 2 * pr.q; };
        f.phi[0][0] = tq(1, 0, 0);
        f.phi[0][1] = tq(0, -1, 0, 1);  // x2^{-1} x3^{q}
        f.phi[0][2] = tq(0, 0, -1);
        f.power[0] = tq(1, 0, 0);
        f.relators = {{1, 1}};
        f.presentation = {
            {{Ga(), X1()}, {X1(), Ga()}},
            {{Ga(), X3()}, {X3(-1), Ga()}},
            {{Ga(), X2()}, {X2(-1), Ga(), X3q(0, -1)}},
            {{Ga(2)}, {X1()}},
        };
        f.local = [](long long p, const Params& pr) -> LocalFactor {
            if (p == 2) {
                long long w = vp(pr.q, 2);
                return {Z(1, -2) * (Z(1, -1) - M(int(2 * (w + 1)), int(w + 1)) * Z(2, -3)),
                        "Z(1,-2)*(Z(1,-1) - u^" + std::to_string(2 * (w + 1)) + "X^" +
                            std::to_string(w + 1) + "*Z(2,-3)) " + vtag(w),
                        "p=2"};
            }
            long long v = vp(2 * pr.q, p);
            return {nk_bracketed(v),
                    "Z(1,-2)*(Z(1,0)*Z(1,-1) - u^" + std::to_string(2 * (v + 1)) + "X^" +
                        std::to_string(v + 1) + "*Z(2,-2)*Z(2,-3)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params& pr) -> RationalUX {
            RationalUX g = Z(1, 0) * Z(1, -1) * Z(2, -2) * Z(2, -3) * one_minus(3, 3);
            if (p == 2) {
                long long w = vp(pr.q, 2);
                g = g * Z(1, -2) * (Z(1, -1) - M(int(2 * (w + 1)), int(w + 1)) * Z(2, -3));
            } else if (pr.q % p == 0) {
                g = g * nk_bracket_inner(vp(pr.q, p)) * nk_bracket_inner(0).inverse();
            }
            return g;
        };
        f.errata = {
            {"global formula",
             "zeta_2(s-2)(zeta_2(s-1) - 2^{-(s-2)(v_2(q)+1)} zeta_2(2s-3)) * [generic product]",
             "the exceptional 2-adic factor is multiplied in without dividing out the base "
             "Euler factor at p=2; the assembled global inserts that division"},
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = p2gg ---------------- */
    {
        FamilySpec f;
        f.name = "p2gg";
        f.display = "Q=p2gg E: k=4q, Q = C2 x C2, gamma1^2 = x3, gamma2^2 = x1";
        f.kind = HolKind::klein;
        f.order = 4;
        f.ngens = 2;
        f.kshape = "4q";
        f.has_q = true;
        f.abscissa = 2;
        f.k_of = [](const Params& pr) { return 4 * pr.q; };
        f.phi[0][0] = tq(-1, 0, 0, 2);  // x1^{-1} x3^{2q}
        f.phi[0][1] = tq(0, -1, 0, -2);
        f.phi[0][2] = tq(0, 0, 1);
        f.phi[1][0] = tq(1, 0, 0);
        f.phi[1][1] = tq(0, -1, 0, 2);  // x2^{-1} x3^{2q}
        f.phi[1][2] = tq(0, 0, -1);
        f.power[0] = tq(0, 0, 1);
        f.power[1] = tq(1, 0, 0);
        f.swap_kind = 3;
        f.swap_a = tq(-1, -1, 0);        // gamma1 gamma2 = x1^{-1}x2^{-1} gamma2 gamma1 x3^{-(2q+1)}
        f.swap_b = tq(0, 0, -1, -2);
        f.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2}};
        f.presentation = {
            {{Ga(), X1()}, {X1(-1), Ga(), X3q(0, 2)}},
            {{Ga(), X2()}, {X2(-1), Ga(), X3q(0, -2)}},
            {{Ga(), X3()}, {X3(), Ga()}},
            {{Gb(), X1()}, {X1(), Gb()}},
            {{Gb(), X2()}, {X2(-1), Gb(), X3q(0, -2)}},
            {{Gb(), X3()}, {X3(-1), Gb()}},
            {{Ga(2)}, {X3()}},
            {{Gb(2)}, {X1()}},
            {{Ga(), Gb()}, {X1(-1), X2(-1), Gb(), Ga(), X3q(-1, -2)}},
        };
        f.local = [](long long p, const Params& pr) -> LocalFactor {
            if (p == 2) return {RationalUX(1), "1", "p=2"};
            long long v = vp(4 * pr.q, p);
            return {Z(1, -1) * p2gg_bracket_inner(v),
                    "Z(1,-1)*(Z(1,-1)^2 - (uX)^" + std::to_string(v + 1) + "*Z(2,-2)^2) " +
                        vtag(v),
                    "generic"};
        };
        f.fe = {-1, 3, CharTag::none};
        f.printed_global = [](long long p, const Params& pr) -> RationalUX {
            RationalUX g = Z(1, -1) * Z(1, -1) * Z(2, -2) * Z(2, -2) * one_minus(3, 3);
            if (p != 2 && pr.q % p == 0)
                g = g * p2gg_bracket_inner(vp(pr.q, p)) * p2gg_bracket_inner(0).inverse();
            return g;
        };
        f.errata = {
            {"global formula",
             "prod_{p<>2, p|q} [ratio] * zeta(s-1)^2 zeta(2s-2)^2 / zeta(3s-3)",
             "no 2-adic correction is printed although the local factor at p=2 is 1; the "
             "assembled global divides out the base Euler factor at 2"},
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = p4, families E and F ---------------- */
    for (int variant = 0; variant < 2; variant++) {
        const bool is_e = variant == 0;
        FamilySpec f;
        f.name = is_e ? "p4_E" : "p4_F";
        f.display = std::string("Q=p4 ") + (is_e ? "E: k=2q" : "F: k=4q") + ", Q = C4, gamma^4 = " +
                    (is_e ? "x3" : "x3^3");
        f.kind = HolKind::cyclic;
        f.order = 4;
        f.ngens = 1;
        f.kshape = is_e ? "2q" : "4q";
        f.has_q = true;
        f.epsilon = is_e ? 2 : 4;
        f.abscissa = 2;
        f.k_of = [is_e](const Params& pr) { return (is_e ? 2 : 4) * pr.q; };
        f.phi[0][0] = tq(0, 1, 0);
        f.phi[0][1] = tq(-1, 0, 0);
        f.phi[0][2] = tq(0, 0, 1);
        f.power[0] = tq(0, 0, is_e ? 1 : 3);
        f.relators = {{1, 1, 1, 1}};
        f.presentation = {
            {{Ga(), X1()}, {X2(), Ga()}},
            {{Ga(), X2()}, {X1(-1), Ga()}},
            {{Ga(), X3()}, {X3(), Ga()}},
            {{Ga(4)}, {X3(is_e ? 1 : 3)}},
        };
        f.local = [is_e](long long p, const Params& pr) -> LocalFactor {
            if (p == 2) return {Z(1, -1), "Z(1,-1)", "p=2"};
            long long v = vp((is_e ? 2 : 4) * pr.q, p);
            return {hex_bracket(v, chi4(p)),
                    "Z(1,0)*(Z(2,-2)-X^" + std::to_string(v + 1) + "*Z(4,-2)) + (chi4(p)+1)*" +
                        "Z(1,0)*uX*(Z(1,-1)*Z(2,-2)-X^" + std::to_string(v + 2) +
                        "*Z(4,-2)*Z(2,-1)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 2, CharTag::chi4};
        f.printed_global = [](long long p, const Params& pr) -> RationalUX {
            RationalUX g = hex_base(p, CharTag::chi4);
            if (p == 2) {
                g = g * Z(1, -1) * Lf(3, -2, chi4(2)) * one_minus(1, 1) * one_minus(1, 2) *
                    one_minus_chi(1, 1, chi4(2)) * one_minus_chi(1, 2, chi4(2));
            } else if ((2 * pr.q) % p == 0) {
                g = g * hex_bracket(vp(pr.q, p), chi4(p)) * hex_printed_corr(p, CharTag::chi4);
            }
            return g;
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = p3, families E, F, G ---------------- */
    for (int variant = 0; variant < 3; variant++) {
        const char* names[] = {"p3_E", "p3_F", "p3_G"};
        FamilySpec f;
        f.name = names[variant];
        f.kind = HolKind::cyclic;
        f.order = 3;
        f.ngens = 1;
        f.epsilon = variant == 1 ? 2 : 1;
        f.delta = variant == 2 ? 1 : 0;
        f.abscissa = 2;
        if (variant == 2) {
            f.kshape = "r";
            f.has_r = true;
            f.k_of = [](const Params& pr) { return pr.r; };
            f.display = "Q=p3 G: k=r (r not in 3N), Q = C3, gamma^3 = x3, delta-twisted action";
        } else {
            f.kshape = "3q";
            f.has_q = true;
            f.k_of = [](const Params& pr) { return 3 * pr.q; };
            f.display = std::string("Q=p3 ") + (variant == 0 ? "E" : "F") +
                        ": k=3q, Q = C3, gamma^3 = " + (variant == 0 ? "x3" : "x3^2");
        }
        f.phi[0][0] = variant == 2 ? tq(0, 1, 1) : tq(0, 1, 0);
        f.phi[0][1] = tq(-1, -1, 0);
        f.phi[0][2] = tq(0, 0, 1);
        f.power[0] = tq(0, 0, f.epsilon);
        f.relators = {{1, 1, 1}};
        if (variant == 2)
            f.presentation = {
                {{Ga(), X1()}, {X2(), Ga(), X3()}},
                {{Ga(), X2()}, {X1(-1), X2(-1), Ga()}},
                {{Ga(), X3()}, {X3(), Ga()}},
                {{Ga(3)}, {X3()}},
            };
        else
            f.presentation = {
                {{Ga(), X1()}, {X2(), Ga()}},
                {{Ga(), X2()}, {X1(-1), X2(-1), Ga()}},
                {{Ga(), X3()}, {X3(), Ga()}},
                {{Ga(3)}, {X3(f.epsilon)}},
            };
        auto k_of = f.k_of;
        f.local = [k_of](long long p, const Params& pr) -> LocalFactor {
            if (p == 3) return {Z(1, -1), "Z(1,-1)", "p=3"};
            long long v = vp(k_of(pr), p);
            return {hex_bracket(v, chi3(p)),
                    "Z(1,0)*(Z(2,-2)-X^" + std::to_string(v + 1) + "*Z(4,-2)) + (chi3(p)+1)*" +
                        "Z(1,0)*uX*(Z(1,-1)*Z(2,-2)-X^" + std::to_string(v + 2) +
                        "*Z(4,-2)*Z(2,-1)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 2, CharTag::chi3};
        f.printed_global = [k_of](long long p, const Params& pr) -> RationalUX {
            RationalUX g = hex_base(p, CharTag::chi3);
            const long long k = k_of(pr);
            if (p == 3) {
                g = g * Z(1, -1) * hex_printed_corr(3, CharTag::chi3);
            } else if (k % p == 0) {
                g = g * hex_bracket(vp(k, p), chi3(p)) * hex_printed_corr(p, CharTag::chi3);
            }
            return g;
        };
        f.errata = {
            {"functional equation", "(-1)^3 p^{-3s+2} chi_4(p)",
             "chi_3 confirmed (the printed chi_4 fails e.g. at p=7 where chi_3=1, chi_4=-1); "
             "matches the Q=p6 shape, whose local factors are identical"},
            {"global formula", "L(3s-2, chi_4, p) in the correction product",
             "chi_3 confirmed; as printed the assembled product disagrees at p=3"},
        };
        cat.push_back(std::move(f));
    }

    /* ---------------- Q = p6, families E, F, G, H ---------------- */
    for (int variant = 0; variant < 4; variant++) {
        const char* names[] = {"p6_E", "p6_F", "p6_G", "p6_H"};
        const char* shapes[] = {"6q", "6q+4", "6q", "6q+2"};
        const int eps[] = {1, 1, 5, 5};
        FamilySpec f;
        f.name = names[variant];
        f.kind = HolKind::cyclic;
        f.order = 6;
        f.ngens = 1;
        f.kshape = shapes[variant];
        f.has_q = true;
        f.epsilon = eps[variant];
        f.abscissa = 2;
        f.display = std::string("Q=p6 ") + names[variant][3] + ": k=" + shapes[variant] +
                    ", eps=" + std::to_string(eps[variant]);
        const int addk = variant == 1 ? 4 : variant == 3 ? 2 : 0;
        f.k_of = [addk](const Params& pr) { return 6 * pr.q + addk; };
        f.phi[0][0] = tq(1, 1, 0);
        f.phi[0][1] = tq(-1, 0, 0);
        f.phi[0][2] = tq(0, 0, 1);
        f.power[0] = tq(0, 0, eps[variant]);
        f.relators = {{1, 1, 1, 1, 1, 1}};
        f.presentation = {
            {{Ga(), X1()}, {X1(), X2(), Ga()}},
            {{Ga(), X2()}, {X1(-1), Ga()}},
            {{Ga(), X3()}, {X3(), Ga()}},
            {{Ga(6)}, {X3(eps[variant])}},
        };
        auto k_of = f.k_of;
        f.local = [k_of](long long p, const Params& pr) -> LocalFactor {
            if (p == 2) return {Z(2, -2), "Z(2,-2)", "p=2"};
            if (p == 3) return {Z(1, -1), "Z(1,-1)", "p=3"};
            long long v = vp(k_of(pr), p);
            return {hex_bracket(v, chi3(p)),
                    "Z(1,0)*(Z(2,-2)-X^" + std::to_string(v + 1) + "*Z(4,-2)) + (chi3(p)+1)*" +
                        "Z(1,0)*uX*(Z(1,-1)*Z(2,-2)-X^" + std::to_string(v + 2) +
                        "*Z(4,-2)*Z(2,-1)) " + vtag(v),
                    "generic"};
        };
        f.fe = {-1, 2, CharTag::chi3};
        f.printed_global = [k_of](long long p, const Params& pr) -> RationalUX {
            RationalUX g = hex_base(p, CharTag::chi3);
            const long long k = k_of(pr);
            if (p == 2) g = g * Z(2, -2);
            else if (p == 3) g = g * Z(1, -1);
            else if (k % p == 0)
                g = g * hex_bracket(vp(pr.q, p), chi3(p)) * hex_printed_corr(p, CharTag::chi3);
            return g;
        };
        f.errata = {
            {"local factor at p=3", "zeta_2(s-1)", "confirmed zeta_3(s-1)"},
            {"global formula",
             "zeta_2(2s-2) zeta_3(s-1) prod_{p<>2,3}[bracket] prod_{p<>2,3; p|k} L(3s-2,chi_4,p)/(...)",
             "the leading exceptional factors lack the division by the base Euler factors at "
             "p=2,3, the first product lacks the p|k restriction (it diverges as printed), the "
             "brackets say v_p(q) for v_p(k), and the L(3s-2) correction says chi_4 for chi_3"},
        };
        cat.push_back(std::move(f));
    }

    return cat;
}

}  // namespace

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> cat = build_catalog();
    return cat;
}

const FamilySpec* find_family(const std::string& name) {
    for (const FamilySpec& f : catalog())
        if (f.name == name) return &f;
    return nullptr;
}

int FamilySpec::abscissa_of(const Params& pr) const {
    if (has_k) return pr.k == 0 ? 3 : 2;
    return abscissa;
}

}  // namespace zeta3ab

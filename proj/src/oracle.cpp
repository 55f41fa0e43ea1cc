#include "zeta3ab/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <thread>

namespace zeta3ab {

namespace {

using I = I128;

I ipow(long long p, int e) {
    I r = 1;
    while (e-- > 0) r *= p;
    return r;
}

long long llpow(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

Int to_Int(I v) {
    bool neg = v < 0;
    if (neg) v = -v;
    Int r = (unsigned long long)(v >> 64);
    r <<= 64;
    r += (unsigned long long)(v & ~0ULL);
    return neg ? -r : r;
}

struct WorkCounter {
    std::atomic<long long>* used = nullptr;
    long long limit = 0;
    long long local = 0;

    void add(long long n = 1) {
        local += n;
        if (local >= 16384) flush();
    }
    void flush() {
        if (!used) {
            local = 0;
            return;
        }
        long long total = used->fetch_add(local) + local;
        local = 0;
        if (total > limit) throw budget_exceeded(-1);
    }
};

/* dependence of one w-part on one v-coordinate, from numeric probing:
   affine = second difference vanishes; const_slope = slope is the same at
   every probed base point (then `slope` is that integer) */
struct DepInfo {
    bool dep = false;
    bool affine = true;
    bool const_slope = true;
    long long slope = 0;
    bool seen = false;
};

struct Inst {
    const FamilySpec* fam = nullptr;
    Params pr;
    GroupCtx<I> G;
    I k = 0;
    int t = 0;
    std::vector<std::vector<int>> relators;
    std::vector<int> rel_support;
    // winfo[r][part: 0=w1,1=w2,2=w3][coord j*3+c]
    std::vector<std::array<std::array<DepInfo, 6>, 3>> winfo;
    bool conj_vfree = false;
    bool fast_ok = true;

    Inst(const FamilySpec& f, const Params& p)
        : fam(&f), pr(p), G(make_group<I>(f, p)), k(G.k()), t(f.ngens), relators(f.relators) {
        conj_vfree = (k == 0);
        probe();
    }

    void probe();
};

void Inst::probe() {
    rel_support.assign(relators.size(), 0);
    winfo.assign(relators.size(), {});
    static const long long bases[4][6] = {
        {0, 0, 0, 0, 0, 0}, {3, 5, 7, 2, 9, 4}, {11, 6, 2, 8, 3, 10}, {1, 13, 4, 6, 12, 5}};
    auto get = [](Nk<I>& v, int c) -> I& { return c == 0 ? v.a1 : c == 1 ? v.a2 : v.a3; };
    for (size_t r = 0; r < relators.size(); r++) {
        for (int letter : relators[r]) rel_support[r] |= 1 << (std::abs(letter) - 1);
        for (int co = 0; co < 3 * t; co++) {
            for (auto& base : bases) {
                Nk<I> v[2] = {{base[0], base[1], base[2]}, {base[3], base[4], base[5]}};
                Nk<I> w0 = G.relation_word(relators[r], v);
                get(v[co / 3], co % 3) += 1;
                Nk<I> w1 = G.relation_word(relators[r], v);
                get(v[co / 3], co % 3) += 1;
                Nk<I> w2 = G.relation_word(relators[r], v);
                const I d1[3] = {w1.a1 - w0.a1, w1.a2 - w0.a2, w1.a3 - w0.a3};
                const I d2[3] = {w2.a1 - w1.a1, w2.a2 - w1.a2, w2.a3 - w1.a3};
                for (int part = 0; part < 3; part++) {
                    DepInfo& wi = winfo[r][part][co];
                    if (d1[part] != 0 || d2[part] != 0) wi.dep = true;
                    if (d1[part] != d2[part]) wi.affine = false;
                    if (wi.seen && wi.slope != (long long)d1[part]) wi.const_slope = false;
                    wi.slope = (long long)d1[part];
                    wi.seen = true;
                }
            }
        }
        // cross term check between the two v_j2 coordinates (klein)
        if (t == 2) {
            Nk<I> v[2] = {{2, 3, 1}, {5, 4, 6}};
            auto w3 = [&](long long a, long long b) {
                Nk<I> u[2] = {v[0], v[1]};
                u[0].a2 += a;
                u[1].a2 += b;
                return G.relation_word(relators[r], u).a3;
            };
            if (w3(1, 1) - w3(1, 0) - w3(0, 1) + w3(0, 0) != 0) fast_ok = false;
        }
        // fast-path structural requirements
        for (int co = 0; co < 3 * t; co++) {
            if (co % 3 != 0 && winfo[r][0][co].dep) fast_ok = false;  // w1 sees only v_j1
            if (co % 3 != 0 && winfo[r][1][co].dep &&
                (!winfo[r][1][co].affine || !winfo[r][1][co].const_slope))
                fast_ok = false;                                      // w2 affine, fixed slopes
            if (co % 3 == 2 && !winfo[r][2][co].affine) fast_ok = false;  // w3 affine in v_j3
        }
    }
    // conjugation words: x1/x2 parts must not involve v (x3 is central)
    for (int j = 0; j < t; j++) {
        static const long long tv[3][3] = {{7, 5, 3}, {2, 11, 6}, {0, 0, 13}};
        for (auto& row : tv) {
            Nk<I> target{row[0], row[1], row[2]};
            Nk<I> w0 = G.conjugation_word(j, target, Nk<I>{});
            Nk<I> w1 = G.conjugation_word(j, target, Nk<I>{4, 9, 2});
            if (w0.a1 != w1.a1 || w0.a2 != w1.a2)
                throw group_error("conjugation word has v-dependent x1/x2 part");
            if (conj_vfree && w0.a3 != w1.a3)
                throw group_error("k = 0 but conjugation word depends on v");
        }
    }
}

struct CellKey {
    int a, b, c;
};

std::vector<CellKey> cells_up_to(int m) {
    std::vector<CellKey> cells;
    for (int a = 0; a <= m; a++)
        for (int b = 0; a + b <= m; b++)
            for (int c = 0; a + b + c <= m; c++) cells.push_back({a, b, c});
    return cells;
}

/* ==================================================================== */
/*  full mode                                                           */
/* ==================================================================== */

I count_cell_full(const Inst& X, long long p, int a, int b, int c, WorkCounter& wc) {
    const I pa = ipow(p, a), pb = ipow(p, b), pc = ipow(p, c);
    Basis<I> T{pa, pb, pc, 0, 0, 0};
    if (!is_good_basis(X.k, T)) return 0;
    if (X.t == 0) return pb * pc * pc;  // good basis is the only condition

    I total = 0;
    const int nr = (int)X.relators.size();

    for (I t12 = 0; t12 < pb; t12++)
        for (I t13 = 0; t13 < pc; t13++)
            for (I t23 = 0; t23 < pc; t23++) {
                T.t12 = t12;
                T.t13 = t13;
                T.t23 = t23;
                const Nk<I> rows[3] = {{pa, t12, t13}, {0, pb, t23}, {0, 0, pc}};

                bool ok = true;
                for (int j = 0; j < X.t && ok; j++)
                    for (int i = 0; i < 3 && ok; i++) {
                        wc.add();
                        Nk<I> w = X.G.conjugation_word(j, rows[i], Nk<I>{});
                        if (X.conj_vfree) {
                            ok = in_Bt(X.k, T, w);
                        } else {  // v-free parts only
                            if (w.a1 % pa != 0) {
                                ok = false;
                            } else if ((w.a2 - (w.a1 / pa) * t12) % pb != 0) {
                                ok = false;
                            }
                        }
                    }
                if (!ok) continue;

                auto conj3_ok = [&](int j, const Nk<I>& vj) {
                    if (X.conj_vfree) return true;
                    for (int i = 0; i < 3; i++) {
                        wc.add();
                        if (!in_Bt(X.k, T, X.G.conjugation_word(j, rows[i], vj))) return false;
                    }
                    return true;
                };

                if (X.t == 1) {
                    const auto& R = X.relators[0];
                    const bool w1_v3free = !X.winfo[0][0][2].dep;
                    const bool w2_v3free = !X.winfo[0][1][2].dep;
                    for (I u1 = 0; u1 < pa; u1++)
                        for (I u2 = 0; u2 < pb; u2++) {
                            Nk<I> v[1] = {{u1, u2, 0}};
                            if (!conj3_ok(0, v[0])) continue;
                            if (w1_v3free) {
                                wc.add();
                                Nk<I> w = X.G.relation_word(R, v);
                                if (w.a1 % pa != 0) continue;
                                if (w2_v3free && (w.a2 - (w.a1 / pa) * t12) % pb != 0) continue;
                            }
                            for (I u3 = 0; u3 < pc; u3++) {
                                v[0].a3 = u3;
                                wc.add();
                                if (in_Bt(X.k, T, X.G.relation_word(R, v))) total++;
                            }
                            wc.flush();
                        }
                } else {
                    int relA = -1, relB = -1;
                    std::vector<int> relAB;
                    for (int r = 0; r < nr; r++) {
                        if (X.rel_support[r] == 1) relA = r;
                        else if (X.rel_support[r] == 2) relB = r;
                        else relAB.push_back(r);
                    }
                    struct Cand {
                        I u1, u2;
                        std::vector<uint8_t> ok3;
                    };
                    auto build = [&](int j, int rown) {
                        std::vector<Cand> S;
                        for (I u1 = 0; u1 < pa; u1++)
                            for (I u2 = 0; u2 < pb; u2++) {
                                Nk<I> v[2] = {};
                                v[j] = {u1, u2, 0};
                                if (!conj3_ok(j, v[j])) continue;
                                Cand cand{u1, u2, {}};
                                if (rown >= 0) {
                                    cand.ok3.assign((size_t)(long long)pc, 0);
                                    bool any = false;
                                    for (I u3 = 0; u3 < pc; u3++) {
                                        v[j].a3 = u3;
                                        wc.add();
                                        if (in_Bt(X.k, T,
                                                  X.G.relation_word(X.relators[rown], v))) {
                                            cand.ok3[(size_t)(long long)u3] = 1;
                                            any = true;
                                        }
                                    }
                                    if (!any) continue;
                                }
                                S.push_back(std::move(cand));
                                wc.flush();
                            }
                        return S;
                    };
                    std::vector<Cand> S1 = build(0, relA), S2 = build(1, relB);
                    if (S1.empty() || S2.empty()) continue;
                    for (const Cand& x : S1)
                        for (const Cand& y : S2) {
                            for (I v13 = 0; v13 < pc; v13++) {
                                if (relA >= 0 && !x.ok3[(size_t)(long long)v13]) continue;
                                for (I v23 = 0; v23 < pc; v23++) {
                                    if (relB >= 0 && !y.ok3[(size_t)(long long)v23]) continue;
                                    Nk<I> v[2] = {{x.u1, x.u2, v13}, {y.u1, y.u2, v23}};
                                    bool pass = true;
                                    for (int r : relAB) {
                                        wc.add();
                                        if (!in_Bt(X.k, T,
                                                   X.G.relation_word(X.relators[r], v))) {
                                            pass = false;
                                            break;
                                        }
                                    }
                                    if (pass) total++;
                                }
                            }
                            wc.flush();
                        }
                }
            }
    return total;
}

/* ==================================================================== */
/*  counting solutions of affine systems mod p^gamma                    */
/* ==================================================================== */

long long inv_mod(long long u, long long P) {
    long long t0 = 0, t1 = 1, r0 = P, r1 = ((u % P) + P) % P;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
    }
    return ((t0 % P) + P) % P;
}

/* solutions of A x = rhs (mod p^gamma), x in [0,p^gamma)^nvars */
I count_linear(std::vector<std::vector<long long>> A, std::vector<long long> rhs, int nvars,
               long long p, int gamma) {
    if (gamma == 0) return 1;
    const long long P = llpow(p, gamma);
    const int m = (int)A.size();
    const int n = nvars;
    for (auto& row : A)
        for (auto& x : row) x = ((x % P) + P) % P;
    for (auto& x : rhs) x = ((x % P) + P) % P;

    auto val = [&](long long x) {
        int e = 0;
        while (x % p == 0 && e < gamma) {
            x /= p;
            e++;
        }
        return e;
    };

    int r = 0;
    std::vector<int> pivval;
    while (r < std::min(m, n)) {
        int bi = -1, bj = -1, be = gamma;
        for (int i = r; i < m; i++)
            for (int j = r; j < n; j++)
                if (A[i][j] != 0) {
                    int e = val(A[i][j]);
                    if (e < be) {
                        be = e;
                        bi = i;
                        bj = j;
                    }
                }
        if (bi < 0) break;
        std::swap(A[r], A[bi]);
        std::swap(rhs[r], rhs[bi]);
        for (int i = 0; i < m; i++) std::swap(A[i][r], A[i][bj]);
        const long long pe = llpow(p, be);
        const long long ui = inv_mod(A[r][r] / pe, P);
        for (int j = r; j < n; j++) A[r][j] = (long long)((I)A[r][j] * ui % P);
        rhs[r] = (long long)((I)rhs[r] * ui % P);
        for (int i = r + 1; i < m; i++) {
            if (A[i][r] == 0) continue;
            const long long f = A[i][r] / pe;  // valuation >= be by pivot minimality
            for (int j = r; j < n; j++)
                A[i][j] = (long long)((((I)A[i][j] - (I)f * A[r][j]) % P + P) % P);
            rhs[i] = (long long)((((I)rhs[i] - (I)f * rhs[r]) % P + P) % P);
        }
        for (int j = r + 1; j < n; j++) {
            if (A[r][j] == 0) continue;
            const long long f = A[r][j] / pe;
            for (int i = r; i < m; i++)
                A[i][j] = (long long)((((I)A[i][j] - (I)f * A[i][r]) % P + P) % P);
        }
        pivval.push_back(be);
        r++;
    }
    I count = 1;
    for (int i = 0; i < r; i++) {
        const long long pe = llpow(p, pivval[i]);
        if (rhs[i] % pe != 0) return 0;
        count *= pe;
    }
    for (int i = r; i < m; i++)
        if (rhs[i] != 0) return 0;
    for (int j = r; j < n; j++) count *= P;
    return count;
}

/* ==================================================================== */
/*  fast mode                                                           */
/* ==================================================================== */

struct Progression {  // x = start + step*h within [0, modulus)
    long long start = 0, step = 1, count = 0;
};

/* solutions of slope*x + g = 0 (mod p^e) for x in [0, p^e) */
Progression solve_cong(long long slope, long long g, long long p, int e) {
    const long long P = llpow(p, e);
    slope = ((slope % P) + P) % P;
    g = ((g % P) + P) % P;
    if (slope == 0) return g == 0 ? Progression{0, 1, P} : Progression{0, 1, 0};
    int ev = 0;
    long long s = slope;
    while (s % p == 0) {
        s /= p;
        ev++;
    }
    const long long pe = llpow(p, ev);
    if (g % pe != 0) return {0, 1, 0};
    const long long Pr = P / pe;
    const long long x0 = (long long)((I)((Pr - (g / pe) % Pr) % Pr) * inv_mod(s, Pr) % Pr);
    return {x0, Pr, pe};
}

Progression intersect(const Progression& A, const Progression& B) {
    if (A.count == 0 || B.count == 0) return {0, 1, 0};
    const Progression& big = A.step >= B.step ? A : B;
    const Progression& small = A.step >= B.step ? B : A;
    if (((big.start - small.start) % small.step + small.step) % small.step != 0)
        return {0, 1, 0};
    return big;
}

struct FastCell {
    const Inst* X;
    long long p;
    int a, b, c;
    I pa, pb, pc;
    int nr;
    // classification
    bool v3_enum[2] = {};    // w2 depends on v_j3: enumerate it
    bool v3_consumed[2] = {};
    bool v2_free[2] = {};
    bool v2_solver[2] = {};
    bool v2_enum[2] = {};
    bool rel_dropped[3] = {};
    std::vector<int> enum_vars;  // encoded: j*2 + (0 = v_j3, 1 = v_j2)
    std::vector<int> solver_vars;  // encoded: 0=t13, 1=t23, 2+j = v_j3, 4+j = v_j2
    I free_factor = 1, box_factor = 1;
};

void classify_fast(FastCell& fc) {
    const Inst& X = *fc.X;
    const int t = X.t, nr = fc.nr;
    for (int j = 0; j < t; j++) {
        bool w2dep = false;
        for (int r = 0; r < nr; r++) w2dep |= X.winfo[r][1][j * 3 + 2].dep;
        fc.v3_enum[j] = w2dep;
    }
    // drop rule: relator third conditions solvable in a private unit-slope v_j3
    if (fc.c > 0) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int j = 0; j < t; j++) {
                if (fc.v3_enum[j] || fc.v3_consumed[j]) continue;
                int home = -1, uses = 0;
                for (int r = 0; r < nr; r++)
                    if (!fc.rel_dropped[r] && X.winfo[r][2][j * 3 + 2].dep) {
                        home = r;
                        uses++;
                    }
                if (uses == 1 && X.winfo[home][2][j * 3 + 2].const_slope &&
                    X.winfo[home][2][j * 3 + 2].slope % fc.p != 0) {
                    fc.rel_dropped[home] = true;
                    fc.v3_consumed[j] = true;
                    changed = true;
                }
            }
        }
    }
    for (int j = 0; j < t; j++) {
        bool w2dep = false, w3dep = false, w3affine = true;
        for (int r = 0; r < nr; r++) {
            w2dep |= X.winfo[r][1][j * 3 + 1].dep;
            if (!fc.rel_dropped[r]) {
                w3dep |= X.winfo[r][2][j * 3 + 1].dep;
                w3affine &= X.winfo[r][2][j * 3 + 1].affine;
            }
        }
        if (!w2dep && fc.c == 0)
            fc.v2_free[j] = true;
        else if (!w2dep && X.conj_vfree && !w3dep)
            fc.v2_free[j] = true;
        else if (!w2dep && fc.b >= fc.c && fc.c > 0 && w3affine)
            fc.v2_solver[j] = true;
        else
            fc.v2_enum[j] = true;
    }
    for (int j = 0; j < t; j++) {
        if (fc.v3_enum[j]) fc.enum_vars.push_back(j * 2);
        if (fc.v2_enum[j]) fc.enum_vars.push_back(j * 2 + 1);
        if (fc.v2_free[j]) fc.free_factor *= fc.pb;
    }
    if (fc.c > 0) {
        fc.solver_vars.push_back(0);
        fc.solver_vars.push_back(1);
        for (int j = 0; j < t; j++) {
            if (!fc.v3_enum[j] && !fc.v3_consumed[j]) fc.solver_vars.push_back(2 + j);
            if (fc.v2_solver[j]) {
                fc.solver_vars.push_back(4 + j);
                fc.box_factor *= ipow(fc.p, fc.b - fc.c);
            }
        }
    }
}

I fast_prefix(const FastCell& fc, Basis<I>& T, Nk<I> v[2], WorkCounter& wc);

I count_cell_fast(const Inst& X, long long p, int a, int b, int c, WorkCounter& wc) {
    const I pa = ipow(p, a), pb = ipow(p, b), pc = ipow(p, c);
    Basis<I> T{pa, pb, pc, 0, 0, 0};
    if (!is_good_basis(X.k, T)) return 0;
    if (X.t == 0) return pb * pc * pc;

    FastCell fc;
    fc.X = &X;
    fc.p = p;
    fc.a = a;
    fc.b = b;
    fc.c = c;
    fc.pa = pa;
    fc.pb = pb;
    fc.pc = pc;
    fc.nr = (int)X.relators.size();
    classify_fast(fc);

    I total = 0;
    Nk<I> v[2] = {};
    std::function<I(int)> loop = [&](int j) -> I {
        if (j == X.t) {
            I sub = 0;
            for (I t12 = 0; t12 < pb; t12++) {
                T.t12 = t12;
                sub += fast_prefix(fc, T, v, wc);
            }
            return sub;
        }
        I sub = 0;
        for (v[j].a1 = 0; v[j].a1 < pa; v[j].a1++) sub += loop(j + 1);
        return sub;
    };
    total = loop(0);
    return total;
}

/* one (v_j1..., t12) prefix: phase A checks, enumerated-variable recursion
   with congruence pinning, then the affine solve mod p^c */
I fast_prefix(const FastCell& fc, Basis<I>& T, Nk<I> v[2], WorkCounter& wc) {
    const Inst& X = *fc.X;
    const long long p = fc.p;
    const int t = X.t, nr = fc.nr;

    /* phase A: v-free parts of conjugation conditions; relator first parts */
    const Nk<I> rows[3] = {{T.t11, T.t12, T.t13}, {0, T.t22, T.t23}, {0, 0, T.t33}};
    for (int j = 0; j < t; j++)
        for (int i = 0; i < 3; i++) {
            wc.add();
            Nk<I> w = X.G.conjugation_word(j, rows[i], Nk<I>{});
            if (w.a1 % T.t11 != 0) return 0;
            if ((w.a2 - (w.a1 / T.t11) * T.t12) % T.t22 != 0) return 0;
        }
    I w1val[3], lam1[3];
    for (int r = 0; r < nr; r++) {
        wc.add();
        Nk<I> zero2[2] = {{v[0].a1, 0, 0}, {v[1].a1, 0, 0}};
        Nk<I> w = X.G.relation_word(X.relators[r], zero2);
        w1val[r] = w.a1;
        if (w.a1 % T.t11 != 0) return 0;
        lam1[r] = w.a1 / T.t11;
    }

    /* phase B: enumerate v_j3-with-w2-dependence and v_j2-enumerated vars,
       pinning the last unknown of each relator second condition */
    I total = 0;
    Nk<I> vv[2] = {{v[0].a1, 0, 0}, {v[1].a1, 0, 0}};
    std::vector<int> assigned;

    auto rel_w = [&](int r) {
        wc.add();
        return X.G.relation_word(X.relators[r], vv);
    };

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == fc.enum_vars.size()) {
            /* all enumerated variables assigned; check relator second
               conditions (solver variables have zero slope there) */
            std::vector<I> lam2(nr);
            for (int r = 0; r < nr; r++) {
                Nk<I> w = rel_w(r);
                I u2 = w.a2 - lam1[r] * T.t12;
                if (u2 % T.t22 != 0) return;
                lam2[r] = u2 / T.t22;
            }
            if (fc.c == 0) {
                total += 1;
                return;
            }
            /* phase C: affine solve over the solver variables mod p^c */
            const int nv = (int)fc.solver_vars.size();
            std::vector<std::vector<long long>> A;
            std::vector<long long> rhs;
            auto third_at = [&](auto&& word_third, int var, long long delta) -> I {
                // evaluate the third condition value with one solver variable
                // displaced by delta
                return word_third(var, delta);
            };
            (void)third_at;
            // conjugation third conditions
            for (int j = 0; j < t; j++)
                for (int i = 0; i < 3; i++) {
                    auto F = [&](int var, long long delta) -> I {
                        Basis<I> Tl = T;
                        if (var >= 0 && fc.solver_vars[var] == 0) Tl.t13 += delta;
                        if (var >= 0 && fc.solver_vars[var] == 1) Tl.t23 += delta;
                        Nk<I> vj = vv[j];
                        if (var >= 0 && fc.solver_vars[var] == 4 + j) vj.a2 += delta;
                        const Nk<I> lrows[3] = {
                            {Tl.t11, Tl.t12, Tl.t13}, {0, Tl.t22, Tl.t23}, {0, 0, Tl.t33}};
                        wc.add();
                        Nk<I> w = X.G.conjugation_word(j, lrows[i], vj);
                        return in_Bt_third_value(X.k, Tl, w);
                    };
                    I base = F(-1, 0);
                    std::vector<long long> row(nv, 0);
                    for (int var = 0; var < nv; var++) {
                        const int code = fc.solver_vars[var];
                        if (code == 2 + 0 || code == 2 + 1) continue;  // conj never sees v_j3
                        if (code >= 4 && code != 4 + j) continue;
                        row[var] = (long long)(F(var, 1) - base);
                    }
                    A.push_back(std::move(row));
                    rhs.push_back((long long)(-base % ipow(p, fc.c)));
                }
            // relator third conditions (surviving relators)
            for (int r = 0; r < nr; r++) {
                if (fc.rel_dropped[r]) continue;
                auto F = [&](int var, long long delta) -> I {
                    Basis<I> Tl = T;
                    Nk<I> lv[2] = {vv[0], vv[1]};
                    if (var >= 0) {
                        const int code = fc.solver_vars[var];
                        if (code == 0) Tl.t13 += delta;
                        else if (code == 1) Tl.t23 += delta;
                        else if (code == 2 || code == 3) lv[code - 2].a3 += delta;
                        else lv[code - 4].a2 += delta;
                    }
                    wc.add();
                    Nk<I> w = X.G.relation_word(X.relators[r], lv);
                    return in_Bt_third_value(X.k, Tl, w);
                };
                I base = F(-1, 0);
                std::vector<long long> row(nv, 0);
                for (int var = 0; var < nv; var++) row[var] = (long long)(F(var, 1) - base);
                A.push_back(std::move(row));
                rhs.push_back((long long)(-base % ipow(p, fc.c)));
            }
            total += fc.box_factor * count_linear(A, rhs, nv, p, fc.c);
            return;
        }
        const int code = fc.enum_vars[idx];
        const int j = code / 2;
        const bool is_v3 = (code % 2) == 0;
        I& slot = is_v3 ? vv[j].a3 : vv[j].a2;
        const long long box = (long long)(is_v3 ? fc.pc : fc.pb);

        /* restrict the range with any relator second condition (mod t22 =
           p^b) that is numeric except this variable; the solution set of a
           congruence over all integers is a full progression, so stepping
           it through [0, box) is exact whatever the relative sizes */
        Progression dom{0, 1, box};
        for (int r = 0; r < nr; r++) {
            const DepInfo& di = X.winfo[r][1][j * 3 + (is_v3 ? 2 : 1)];
            if (!di.dep || !di.const_slope) continue;
            bool others_known = true;
            for (size_t l = idx + 1; l < fc.enum_vars.size(); l++) {
                const int c2 = fc.enum_vars[l];
                if (X.winfo[r][1][(c2 / 2) * 3 + (c2 % 2 == 0 ? 2 : 1)].dep) others_known = false;
            }
            if (!others_known) continue;
            slot = 0;
            Nk<I> w = rel_w(r);
            I g = w.a2 - lam1[r] * T.t12;  // slope*x + g must be divisible by t22
            Progression pr = solve_cong(di.slope, (long long)(g % ipow(p, fc.b)), p, fc.b);
            dom = intersect(dom, pr);
        }
        if (dom.count != 0)
            for (long long x = dom.start; x < box; x += dom.step) {
                slot = x;
                rec(idx + 1);
            }
        slot = 0;
    };

    rec(0);
    wc.flush();
    return total * fc.free_factor;
}

/* ==================================================================== */
/*  drivers                                                             */
/* ==================================================================== */

std::vector<I> run_cells(const Inst& X, long long p, int m, OracleMode mode,
                         const OracleOptions& opt) {
    auto cells = cells_up_to(m);
    std::vector<I> counts(m + 1, 0);
    std::atomic<long long> work{0};
    std::atomic<size_t> next{0};
    std::vector<I> cell_counts(cells.size(), 0);
    std::vector<uint8_t> done(cells.size(), 0);
    std::exception_ptr err;
    std::mutex err_mutex;

    const bool use_fast = (mode == OracleMode::fast) && X.fast_ok;
    auto worker = [&]() {
        WorkCounter wc{&work, opt.work_limit};
        try {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= cells.size()) break;
                const CellKey& ck = cells[i];
                cell_counts[i] = use_fast ? count_cell_fast(X, p, ck.a, ck.b, ck.c, wc)
                                          : count_cell_full(X, p, ck.a, ck.b, ck.c, wc);
                wc.flush();
                done[i] = 1;
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mutex);
            if (!err) err = std::current_exception();
            next.store(cells.size());
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; i++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) {
        try {
            std::rethrow_exception(err);
        } catch (const budget_exceeded&) {
            int reached = -1;
            for (int n = 0; n <= m; n++) {
                bool all = true;
                for (size_t i = 0; i < cells.size(); i++)
                    if (cells[i].a + cells[i].b + cells[i].c == n && !done[i]) all = false;
                if (all) reached = n;
                else break;
            }
            throw budget_exceeded(reached);
        }
    }
    for (size_t i = 0; i < cells.size(); i++)
        counts[cells[i].a + cells[i].b + cells[i].c] += cell_counts[i];
    return counts;
}

}  // namespace

CoeffTable oracle_count(const FamilySpec& fam, const Params& pr, long long p, int m,
                        OracleMode mode, const OracleOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    Inst X(fam, pr);
    std::vector<I> counts = run_cells(X, p, m, mode, opt);
    CoeffTable out;
    out.p = p;
    out.m = m;
    out.provenance = (mode == OracleMode::fast && X.fast_ok) ? "oracle-fast" : "oracle-full";
    out.family = fam.name;
    out.params = fam.params_str(pr);
    for (I c : counts) out.counts.push_back(to_Int(c));
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

void witness_stream(const FamilySpec& fam, const Params& pr, long long p, int m,
                    const std::function<void(const Witness&)>& cb, const OracleOptions& opt) {
    Inst X(fam, pr);
    std::atomic<long long> work{0};
    WorkCounter wc{&work, opt.work_limit};
    const int t = X.t;
    for (int a = 0; a <= m; a++)
        for (int b = 0; a + b <= m; b++)
            for (int c = 0; a + b + c <= m; c++) {
                const I pa = ipow(p, a), pb = ipow(p, b), pc = ipow(p, c);
                Basis<I> T{pa, pb, pc, 0, 0, 0};
                if (!is_good_basis(X.k, T)) continue;
                const I vbox[3] = {pa, pb, pc};
                for (I t12 = 0; t12 < pb; t12++)
                    for (I t13 = 0; t13 < pc; t13++)
                        for (I t23 = 0; t23 < pc; t23++) {
                            T.t12 = t12;
                            T.t13 = t13;
                            T.t23 = t23;
                            const Nk<I> rows[3] = {
                                {pa, t12, t13}, {0, pb, t23}, {0, 0, pc}};
                            // iterate v in lexicographic order
                            int ncoord = 3 * t;
                            std::vector<I> vc(std::max(1, ncoord), 0);
                            std::function<void(int)> recv = [&](int ci) {
                                if (ci == ncoord) {
                                    Nk<I> v[2] = {};
                                    for (int j = 0; j < t; j++)
                                        v[j] = {vc[j * 3], vc[j * 3 + 1], vc[j * 3 + 2]};
                                    for (int j = 0; j < t; j++)
                                        for (int i = 0; i < 3; i++) {
                                            wc.add();
                                            if (!in_Bt(X.k, T,
                                                       X.G.conjugation_word(j, rows[i], v[j])))
                                                return;
                                        }
                                    for (auto& R : X.relators) {
                                        wc.add();
                                        if (!in_Bt(X.k, T, X.G.relation_word(R, v))) return;
                                    }
                                    Witness w;
                                    w.a = a;
                                    w.b = b;
                                    w.c = c;
                                    w.t12 = (long long)t12;
                                    w.t13 = (long long)t13;
                                    w.t23 = (long long)t23;
                                    for (int j = 0; j < t; j++)
                                        for (int i = 0; i < 3; i++)
                                            w.v[j][i] = (long long)vc[j * 3 + i];
                                    cb(w);
                                    return;
                                }
                                for (vc[ci] = 0; vc[ci] < vbox[ci % 3]; vc[ci]++) recv(ci + 1);
                                vc[ci] = 0;
                            };
                            recv(0);
                            wc.flush();
                        }
            }
}

std::vector<Rat> measure_series(const FamilySpec& fam, const Params& pr, long long p, int m,
                                const OracleOptions& opt) {
    Inst X(fam, pr);
    std::atomic<long long> work{0};
    WorkCounter wc{&work, opt.work_limit};
    const int t = X.t;
    const int M = m + 1;
    std::vector<Rat> out(m + 1, Rat(0));
    const Rat unitcube = Rat(Int(1), Int((long long)llpow(p, 1)));  // 1/p
    const Rat haar3 = Rat(1) / ((Rat(1) - unitcube) * (Rat(1) - unitcube) * (Rat(1) - unitcube));

    auto powR = [&](int e) {  // p^e as a rational (e may exceed long long for big M*vars)
        Rat r = 1;
        for (int i = 0; i < e; i++) r *= Rat(p);
        return r;
    };

    for (int a = 0; a <= m; a++)
        for (int b = 0; a + b <= m; b++)
            for (int c = 0; a + b + c <= m; c++) {
                const int dv = std::min(M, a + b + c + (p == 2 ? 1 : 0));
                const int d12 = std::min(M, b + c);
                const int d3 = std::min(M, c);
                const I pa = ipow(p, a), pb = ipow(p, b), pc = ipow(p, c);
                const I U1 = ipow(p, M - a), U2 = ipow(p, M - b), U3 = ipow(p, M - c);
                const I B12 = ipow(p, d12), B3 = ipow(p, d3), BV = ipow(p, dv);
                // collapse: every skipped residue level contributes p per level
                int collapsed = (M - d12) + 2 * (M - d3) + 3 * t * (M - dv);
                Rat weight = haar3 * powR(a * (1 + t) + b * (2 + t) + c * (3 + t) + collapsed) /
                             powR(M * (6 + 3 * t));
                Rat cellsum = 0;

                for (I u1 = 1; u1 < U1; u1++) {
                    if (u1 % p == 0) continue;
                    for (I u2 = 1; u2 < U2; u2++) {
                        if (u2 % p == 0) continue;
                        for (I u3 = 1; u3 < U3; u3++) {
                            if (u3 % p == 0) continue;
                            Basis<I> T{pa * u1, pb * u2, pc * u3, 0, 0, 0};
                            if (!is_good_basis(X.k, T)) continue;
                            for (I t12 = 0; t12 < B12; t12++)
                                for (I t13 = 0; t13 < B3; t13++)
                                    for (I t23 = 0; t23 < B3; t23++) {
                                        T.t12 = t12;
                                        T.t13 = t13;
                                        T.t23 = t23;
                                        const Nk<I> rows[3] = {{T.t11, t12, t13},
                                                               {0, T.t22, t23},
                                                               {0, 0, T.t33}};
                                        if (t == 0) {
                                            cellsum += 1;
                                            continue;
                                        }
                                        // nested v rows with per-generator pruning
                                        long long hits = 0;
                                        Nk<I> v[2] = {};
                                        auto gen_ok = [&](int j) {
                                            for (int i = 0; i < 3; i++) {
                                                wc.add();
                                                if (!in_Bt(X.k, T,
                                                           X.G.conjugation_word(j, rows[i],
                                                                                v[j])))
                                                    return false;
                                            }
                                            for (int r = 0; r < (int)X.relators.size(); r++) {
                                                if (X.rel_support[r] != (1 << j)) continue;
                                                wc.add();
                                                if (!in_Bt(X.k, T,
                                                           X.G.relation_word(X.relators[r], v)))
                                                    return false;
                                            }
                                            return true;
                                        };
                                        auto rest_ok = [&]() {
                                            for (int r = 0; r < (int)X.relators.size(); r++) {
                                                if (X.rel_support[r] == 1 || X.rel_support[r] == 2)
                                                    continue;  // already checked per generator
                                                wc.add();
                                                if (!in_Bt(X.k, T,
                                                           X.G.relation_word(X.relators[r], v)))
                                                    return false;
                                            }
                                            return true;
                                        };
                                        std::function<void(int)> recv = [&](int j) {
                                            if (j == t) {
                                                if (rest_ok()) hits++;
                                                return;
                                            }
                                            for (v[j].a1 = 0; v[j].a1 < BV; v[j].a1++)
                                                for (v[j].a2 = 0; v[j].a2 < BV; v[j].a2++)
                                                    for (v[j].a3 = 0; v[j].a3 < BV; v[j].a3++)
                                                        if (gen_ok(j)) recv(j + 1);
                                            v[j] = {};
                                        };
                                        recv(0);
                                        wc.flush();
                                        cellsum += hits;
                                    }
                        }
                    }
                }
                out[a + b + c] += weight * cellsum;
            }
    return out;
}

namespace {

/* full acceptance test for arbitrary triangular t entries and raw v */
bool accept_candidate(const Inst& X, const Basis<I>& T, const Nk<I> v[2]) {
    if (!is_good_basis(X.k, T)) return false;
    const Nk<I> rows[3] = {{T.t11, T.t12, T.t13}, {0, T.t22, T.t23}, {0, 0, T.t33}};
    for (int j = 0; j < X.t; j++)
        for (int i = 0; i < 3; i++)
            if (!in_Bt(X.k, T, X.G.conjugation_word(j, rows[i], v[j]))) return false;
    for (auto& R : X.relators)
        if (!in_Bt(X.k, T, X.G.relation_word(R, v))) return false;
    return true;
}

}  // namespace

AuditReport invariance_audit(const FamilySpec& fam, const Params& pr, long long p,
                             long long trials, unsigned seed, bool break_shift) {
    Inst X(fam, pr);
    std::mt19937_64 rng(seed);
    AuditReport rep;
    auto rnd = [&](long long n) { return (long long)(rng() % (unsigned long long)n); };

    for (long long trial = 0; trial < trials; trial++) {
        // random candidate in a small cell; a >= 1 so the negative control
        // always shifts by a genuine non-member
        const int a = 1 + (int)rnd(2), b = (int)rnd(2), c = (int)rnd(2);
        const I pa = ipow(p, a), pb = ipow(p, b), pc = ipow(p, c);
        Basis<I> T{pa, pb, pc, rnd((long long)pb), rnd((long long)pc), rnd((long long)pc)};
        if (!is_good_basis(X.k, T)) continue;
        Nk<I> v[2] = {};
        for (int j = 0; j < X.t; j++)
            v[j] = {rnd((long long)pa), rnd((long long)pb), rnd((long long)pc)};
        const bool before = accept_candidate(X, T, v);

        Basis<I> T2 = T;
        Nk<I> v2[2] = {v[0], v[1]};
        if (X.t > 0 && (break_shift || rng() % 2 == 0)) {
            // shift one v_j; by an element of B_t normally, by x1 when broken
            const int j = (int)rnd(std::max(1, X.t));
            Nk<I> shift;
            if (break_shift) {
                shift = {1, 0, 0};  // x1 has valuation 0 < a, never in B_t here
            } else {
                Nk<I> r1{T.t11, T.t12, T.t13}, r2{0, T.t22, T.t23}, r3{0, 0, T.t33};
                shift = nk_pow(X.k, r1, (I)rnd(3));
                shift = nk_mul(X.k, shift, nk_pow(X.k, r2, (I)rnd(3)));
                shift = nk_mul(X.k, shift, nk_pow(X.k, r3, (I)rnd(3)));
            }
            v2[j] = nk_mul(X.k, v2[j], shift);
        } else {
            // replace a row by itself times a later row (keeps the triangle)
            const int which = (int)rnd(2);
            const I mu = (I)(1 + rnd(2));
            Nk<I> r2{0, T.t22, T.t23}, r3{0, 0, T.t33};
            if (which == 0) {
                Nk<I> r1{T.t11, T.t12, T.t13};
                Nk<I> nr = nk_mul(X.k, r1, nk_pow(X.k, (rng() % 2 ? r2 : r3), mu));
                T2.t12 = nr.a2;
                T2.t13 = nr.a3;
            } else {
                Nk<I> nr = nk_mul(X.k, r2, nk_pow(X.k, r3, mu));
                T2.t23 = nr.a3;
            }
        }
        const bool after = accept_candidate(X, T2, v2);
        rep.trials++;
        if (before != after) {
            rep.violations++;
            if (rep.notes.size() < 10)
                rep.notes.push_back("trial " + std::to_string(trial) + ": acceptance changed " +
                                    (before ? "true->false" : "false->true"));
        }
    }
    return rep;
}

CoeffTable closed_form_table(const FamilySpec& fam, const Params& pr, long long p, int m) {
    LocalFactor lf = fam.local(p, pr);
    std::vector<Rat> ser = lf.f.series(Int(p), m);
    CoeffTable out;
    out.p = p;
    out.m = m;
    out.provenance = "closed-form";
    out.family = fam.name;
    out.params = fam.params_str(pr);
    for (auto& c : ser) {
        if (denominator(c) != 1)
            throw rat_error("closed form of " + fam.name + " at p=" + std::to_string(p) +
                            " has non-integer series coefficient");
        out.counts.push_back(numerator(c));
    }
    return out;
}

}  // namespace zeta3ab

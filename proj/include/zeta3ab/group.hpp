#pragma once

/*
  Arithmetic in an almost Bieberbach group G presented over its Fitting
  subgroup N_k.  An element is (q, n): q the canonical label of the coset
  in the finite holonomy group Q = G/N, n in N_k, meaning rep(q) * n for a
  fixed section rep.  Multiplication collects N-letters rightward through
  the section words using precomputed automorphism and cocycle tables.

  Holonomy groups in the catalog are cyclic of order 2,3,4,6 or C2 x C2,
  so all tables are tiny and built once per family instance.
*/

#include "zeta3ab/nk.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace zeta3ab {

enum class HolKind { trivial, cyclic, klein };

struct group_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* automorphism of N_k given by the images of x1, x2, x3; the image of x3
   is always x3^{+-1} in this catalog */
template <class I>
struct Auto3 {
    Nk<I> img[3];

    Nk<I> apply(const I& k, const Nk<I>& n) const {
        Nk<I> r = nk_pow(k, img[0], n.a1);
        r = nk_mul(k, r, nk_pow(k, img[1], n.a2));
        r = nk_mul(k, r, nk_pow(k, img[2], n.a3));
        return r;
    }
};

template <class I>
struct GElem {
    int q = 0;
    Nk<I> n;
};

/* Inverse of an automorphism of N_k.  For k = 0 the map is an arbitrary
   unimodular 3x3 matrix and is inverted by the adjugate.  For k != 0 the
   center direction x3 must map to x3^{+-1} and the x1x2-block must be
   unimodular; the x3-parts of the inverse images are solved for. */
template <class I>
Auto3<I> invert_auto(const I& k, const Auto3<I>& f) {
    Auto3<I> g;
    if (k == 0) {
        I m[3][3];
        for (int j = 0; j < 3; j++) {
            m[0][j] = f.img[j].a1;
            m[1][j] = f.img[j].a2;
            m[2][j] = f.img[j].a3;
        }
        const I det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det != 1 && det != -1) throw group_error("automorphism not unimodular");
        auto cof = [&](int r, int c) {
            int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
            return m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        };
        for (int j = 0; j < 3; j++)
            g.img[j] = {det * cof(j, 0), det * cof(j, 1), det * cof(j, 2)};
    } else {
        const I m11 = f.img[0].a1, m21 = f.img[0].a2;
        const I m12 = f.img[1].a1, m22 = f.img[1].a2;
        const I det = m11 * m22 - m12 * m21;
        if (det != 1 && det != -1) throw group_error("automorphism x1x2-part not unimodular");
        const I s = f.img[2].a3;
        if ((s != 1 && s != -1) || f.img[2].a1 != 0 || f.img[2].a2 != 0)
            throw group_error("automorphism must send x3 to x3^{+-1} when k != 0");
        const I n11 = det * m22, n21 = det * -m21;  // columns of M^{-1} = det*adj(M)
        const I n12 = det * -m12, n22 = det * m11;
        auto solve = [&](const I& a, const I& b) {
            Nk<I> t = f.apply(k, Nk<I>{a, b, 0});
            return Nk<I>{a, b, -s * t.a3};
        };
        g.img[0] = solve(n11, n21);
        g.img[1] = solve(n12, n22);
        g.img[2] = {0, 0, s};
    }
    for (int i = 0; i < 3; i++) {
        Nk<I> chk = f.apply(k, g.img[i]);
        Nk<I> want{i == 0, i == 1, i == 2};
        if (!(chk == want)) throw group_error("automorphism inversion failed");
    }
    return g;
}

/* Raw per-family data needed to build the tables.  phi[j] is conjugation
   by the j-th holonomy generator: phi(x) = gamma x gamma^{-1}. */
template <class I>
struct GroupData {
    HolKind kind = HolKind::trivial;
    int order = 1;  // |Q|
    int ngens = 0;  // t
    I k = 0;
    Auto3<I> phi[2];
    Nk<I> power[2];  // cyclic: power[0] = gamma^d; klein: alpha^2, beta^2
    Nk<I> swap_nc;   // klein: beta*alpha = swap_nc * alpha*beta
};

template <class I>
class GroupCtx {
  public:
    explicit GroupCtx(const GroupData<I>& d) : d_(d) {
        switch (d.kind) {
            case HolKind::trivial: break;
            case HolKind::cyclic: build_cyclic(); break;
            case HolKind::klein: build_klein(); break;
        }
    }

    const I& k() const { return d_.k; }
    int order() const { return d_.order; }
    int ngens() const { return d_.ngens; }
    HolKind kind() const { return d_.kind; }

    /* label of the j-th generator (j = 0,1) */
    int gen_label(int j) const { return d_.kind == HolKind::klein ? j + 1 : 1; }

    GElem<I> identity() const { return {0, {}}; }
    GElem<I> from_n(const Nk<I>& n) const { return {0, n}; }
    GElem<I> gen(int j, const Nk<I>& v = {}) const { return {gen_label(j), v}; }

    GElem<I> mul(const GElem<I>& a, const GElem<I>& b) const {
        if (d_.kind == HolKind::trivial)
            return {0, nk_mul(d_.k, a.n, b.n)};
        Nk<I> n = nk_mul(d_.k, coc_[a.q][b.q], psi_[b.q].apply(d_.k, a.n));
        return {qmul_[a.q][b.q], nk_mul(d_.k, n, b.n)};
    }

    GElem<I> inv(const GElem<I>& g) const {
        if (d_.kind == HolKind::trivial)
            return {0, nk_inv(d_.k, g.n)};
        int qi = qinv_[g.q];
        Nk<I> m = nk_mul(d_.k, coc_[g.q][qi], psi_[qi].apply(d_.k, g.n));
        return {qi, nk_inv(d_.k, m)};
    }

    /* exact N_k normal form of (gamma_j x^v)^{-1} x^{target} (gamma_j x^v) */
    Nk<I> conjugation_word(int j, const Nk<I>& target, const Nk<I>& v) const {
        GElem<I> g = gen(j, v);
        GElem<I> w = mul(inv(g), mul(from_n(target), g));
        if (w.q != 0) throw group_error("conjugation_word: nontrivial holonomy part");
        return w.n;
    }

    /* evaluate a relator word (letters +-1, +-2 index the generators, sign
       means inverse) at the adjusted generators gamma_j x^{v_j} */
    Nk<I> relation_word(const std::vector<int>& word, const Nk<I>* v) const {
        GElem<I> acc = identity();
        for (int letter : word) {
            int j = (letter > 0 ? letter : -letter) - 1;
            GElem<I> g = gen(j, v[j]);
            acc = mul(acc, letter > 0 ? g : inv(g));
        }
        if (acc.q != 0) throw group_error("relation_word: word is not a relator of Q");
        return acc.n;
    }

    const Auto3<I>& psi(int q) const { return psi_[q]; }

  private:
    Auto3<I> identity_auto() const {
        Auto3<I> a;
        a.img[0] = {1, 0, 0};
        a.img[1] = {0, 1, 0};
        a.img[2] = {0, 0, 1};
        return a;
    }

    Auto3<I> compose(const Auto3<I>& first, const Auto3<I>& then) const {
        // (then o first)(x) = then(first(x))
        Auto3<I> r;
        for (int i = 0; i < 3; i++) r.img[i] = then.apply(d_.k, first.img[i]);
        return r;
    }

    void build_cyclic() {
        const int d = d_.order;
        Auto3<I> psi1 = invert_auto(d_.k, d_.phi[0]);
        for (int i = 0; i < d; i++)
            for (int j = 0; j < d; j++) {
                qmul_[i][j] = (i + j) % d;
                coc_[i][j] = (i + j >= d) ? d_.power[0] : Nk<I>{};
            }
        for (int i = 0; i < d; i++) qinv_[i] = (d - i) % d;
        psi_[0] = identity_auto();
        for (int i = 1; i < d; i++) psi_[i] = compose(psi_[i - 1], psi1);
    }

    void build_klein() {
        // labels: 0 = e, 1 = alpha, 2 = beta, 3 = alpha*beta
        const Auto3<I> pa = d_.phi[0], pb = d_.phi[1];
        const Auto3<I> sa = invert_auto(d_.k, pa), sb = invert_auto(d_.k, pb);
        psi_[0] = identity_auto();
        psi_[1] = sa;
        psi_[2] = sb;
        psi_[3] = compose(sa, sb);  // (ab)^{-1} n (ab) = b^{-1}(a^{-1} n a)b
        for (int i = 0; i < 4; i++) {
            qinv_[i] = i;
            for (int j = 0; j < 4; j++) qmul_[i][j] = i ^ j;
        }
        const Nk<I> na = d_.power[0], nb = d_.power[1], nc = d_.swap_nc;
        const I& k = d_.k;
        // step[q][g]: rep(q) * gamma_g = rep(q') * m
        struct Step { int q; Nk<I> m; };
        Step step[4][2];
        step[0][0] = {1, {}};
        step[1][0] = {0, na};
        step[2][0] = {3, psi_[3].apply(k, nc)};                                 // beta*alpha
        step[3][0] = {2, sb.apply(k, nk_mul(k, pa.apply(k, nc), na))};          // (alpha*beta)*alpha
        step[0][1] = {2, {}};
        step[1][1] = {3, {}};
        step[2][1] = {0, nb};
        step[3][1] = {1, nb};                                                   // alpha*beta^2 = alpha*nb
        static const std::vector<int> reps[4] = {{}, {0}, {1}, {0, 1}};
        for (int q1 = 0; q1 < 4; q1++)
            for (int q2 = 0; q2 < 4; q2++) {
                int q = q1;
                Nk<I> n{};
                for (int g : reps[q2]) {
                    const Step& s = step[q][g];
                    n = nk_mul(k, s.m, (g == 0 ? sa : sb).apply(k, n));
                    q = s.q;
                }
                coc_[q1][q2] = n;
            }
    }

    GroupData<I> d_;
    int qmul_[6][6] = {};
    int qinv_[6] = {};
    Auto3<I> psi_[6];
    Nk<I> coc_[6][6];
};

}  // namespace zeta3ab

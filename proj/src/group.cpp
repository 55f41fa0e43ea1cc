#include "zeta3ab/family.hpp"

#include <sstream>

namespace zeta3ab {

template <class I>
GroupCtx<I> make_group(const FamilySpec& fam, const Params& pr) {
    const long long qlike = fam.has_r ? pr.r : pr.q;
    GroupData<I> d;
    d.kind = fam.kind;
    d.order = fam.order;
    d.ngens = fam.ngens;
    d.k = I(fam.k_of(pr));
    auto trip = [&](const TripleQ& t) { return Nk<I>{I(t.e1), I(t.e2), I(t.e3(qlike))}; };
    for (int j = 0; j < fam.ngens; j++)
        for (int i = 0; i < 3; i++) d.phi[j].img[i] = trip(fam.phi[j][i]);
    if (fam.kind == HolKind::cyclic) {
        d.power[0] = trip(fam.power[0]);
    } else if (fam.kind == HolKind::klein) {
        d.power[0] = trip(fam.power[0]);
        d.power[1] = trip(fam.power[1]);
        const Nk<I> A = trip(fam.swap_a), B = trip(fam.swap_b);
        const I& k = d.k;
        switch (fam.swap_kind) {
            case 1:  // beta*alpha*beta^{-1}*alpha^{-1} = A
                d.swap_nc = A;
                break;
            case 2: {  // (alpha*beta)^2 = A
                Auto3<I> sa = invert_auto(k, d.phi[0]);
                Nk<I> inner = nk_mul(k, A, nk_inv(k, d.power[1]));
                d.swap_nc = nk_mul(k, sa.apply(k, inner), nk_inv(k, d.power[0]));
                break;
            }
            case 3: {  // gamma1*gamma2 = A * gamma2*gamma1 * B
                Nk<I> b_inv = nk_inv(k, B);
                Nk<I> conj = d.phi[0].apply(k, d.phi[1].apply(k, b_inv));
                d.swap_nc = nk_mul(k, nk_inv(k, A), conj);
                break;
            }
            default:
                throw group_error("klein family without swap relation");
        }
    }
    return GroupCtx<I>(d);
}

template GroupCtx<I128> make_group<I128>(const FamilySpec&, const Params&);
template GroupCtx<Int> make_group<Int>(const FamilySpec&, const Params&);

namespace {

GElem<Int> eval_word(const GroupCtx<Int>& G, const Word& w, long long qlike) {
    GElem<Int> acc = G.identity();
    for (const Letter& l : w) {
        long long e = l.exp(qlike);
        GElem<Int> g;
        if (l.sym <= 3) {
            Nk<Int> n{};
            (l.sym == 1 ? n.a1 : l.sym == 2 ? n.a2 : n.a3) = e;
            acc = G.mul(acc, G.from_n(n));
            continue;
        }
        g = G.gen(l.sym - 4);
        if (e < 0) {
            g = G.inv(g);
            e = -e;
        }
        for (long long i = 0; i < e; i++) acc = G.mul(acc, g);
    }
    return acc;
}

std::string word_str(const Word& w, long long qlike) {
    static const char* names[] = {"", "x1", "x2", "x3", "g1", "g2"};
    std::ostringstream os;
    for (const Letter& l : w) {
        long long e = l.exp(qlike);
        os << names[l.sym];
        if (e != 1) os << "^" << e;
        os << " ";
    }
    return os.str();
}

}  // namespace

std::vector<std::string> check_presentation(const FamilySpec& fam, const Params& pr) {
    std::vector<std::string> bad;
    const long long qlike = fam.has_r ? pr.r : pr.q;
    GroupCtx<Int> G = make_group<Int>(fam, pr);
    for (auto& [lhs, rhs] : fam.presentation) {
        GElem<Int> a = eval_word(G, lhs, qlike);
        GElem<Int> b = eval_word(G, rhs, qlike);
        if (a.q != b.q || !(a.n == b.n))
            bad.push_back(fam.name + ": relation '" + word_str(lhs, qlike) + "= " +
                          word_str(rhs, qlike) + "' fails");
    }
    return bad;
}

bool FamilySpec::valid_params(const Params& pr) const {
    if (has_q) return pr.q >= 1 && pr.q <= 8;
    if (has_r) return pr.r >= 1 && pr.r <= 8 && pr.r % 3 != 0;
    if (has_k) return pr.k >= 0;
    return true;
}

std::string FamilySpec::params_str(const Params& pr) const {
    if (has_q) return "q=" + std::to_string(pr.q);
    if (has_r) return "r=" + std::to_string(pr.r);
    if (has_k) return "k=" + std::to_string(pr.k);
    return "";
}

bool FamilySpec::fe_guard(long long p, const Params& pr) const {
    if (p == 2 || p == 3) return false;
    const long long k = k_of(pr);
    return k == 0 || k % p != 0;
}

std::vector<Params> default_param_grid(const FamilySpec& fam, bool small) {
    std::vector<Params> out;
    if (fam.has_q) {
        for (long long q = 1; q <= (small ? 4 : 8); q++) out.push_back({.q = q});
    } else if (fam.has_r) {
        for (long long r : (small ? std::vector<long long>{1, 2}
                                  : std::vector<long long>{1, 2, 4, 5, 7, 8}))
            out.push_back({.r = r});
    } else if (fam.has_k) {
        for (long long k : {0, 1, 2, 4, 6}) out.push_back({.k = k});
    } else {
        out.push_back({});
    }
    return out;
}

int chi_value(CharTag tag, long long p) {
    switch (tag) {
        case CharTag::none: return 1;
        case CharTag::chi3: return chi3(p);
        case CharTag::chi4: return chi4(p);
    }
    return 1;
}

}  // namespace zeta3ab

#include "zeta3ab/rational.hpp"

#include <sstream>

namespace zeta3ab {

PolyUX PolyUX::monomial(int du, int dx, Rat c) {
    PolyUX r;
    if (c != 0) r.terms_[{du, dx}] = std::move(c);
    return r;
}

bool PolyUX::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
           terms_.begin()->second == 1;
}

int PolyUX::deg_u() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.du);
    return d;
}

int PolyUX::deg_x() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
}

Rat PolyUX::coeff(int du, int dx) const {
    auto it = terms_.find({du, dx});
    return it == terms_.end() ? Rat(0) : it->second;
}

void PolyUX::set(int du, int dx, Rat c) {
    if (c == 0)
        terms_.erase({du, dx});
    else
        terms_[{du, dx}] = std::move(c);
}

PolyUX& PolyUX::operator+=(const PolyUX& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PolyUX& PolyUX::operator-=(const PolyUX& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

PolyUX operator*(const PolyUX& a, const PolyUX& b) {
    PolyUX r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            Mono m{ma.du + mb.du, ma.dx + mb.dx};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

PolyUX operator-(const PolyUX& a) {
    PolyUX r;
    for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

std::optional<PolyUX> PolyUX::divide_exact(const PolyUX& o) const {
    if (o.is_zero()) return std::nullopt;
    PolyUX rem = *this, quot;
    // leading term of o in the (du, dx) lex order
    const Mono lead = o.terms_.rbegin()->first;
    const Rat lead_c = o.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        Mono m = rem.terms_.rbegin()->first;
        Rat c = rem.terms_.rbegin()->second;
        if (m.du < lead.du || m.dx < lead.dx) return std::nullopt;
        Mono q{m.du - lead.du, m.dx - lead.dx};
        Rat qc = c / lead_c;
        quot.set(q.du, q.dx, quot.coeff(q.du, q.dx) + qc);
        rem -= o * PolyUX::monomial(q.du, q.dx, qc);
    }
    return quot;
}

std::vector<Rat> PolyUX::eval_u(const Int& p) const {
    std::vector<Rat> out(deg_x() + 1, Rat(0));
    for (auto& [m, c] : terms_) {
        Int pw = 1;
        for (int i = 0; i < m.du; i++) pw *= p;
        out[m.dx] += c * Rat(pw);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::string PolyUX::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        bool unit = (a == 1) && (m.du || m.dx);
        if (!unit) os << a.str();
        if (m.du) {
            if (!unit || m.dx) os << (unit ? "" : "*");
            os << "u";
            if (m.du > 1) os << "^" << m.du;
        }
        if (m.dx) {
            if (m.du || !unit) os << "*";
            os << "X";
            if (m.dx > 1) os << "^" << m.dx;
        }
    }
    return os.str();
}

/* ------------------------------------------------------------------ */

RationalUX::RationalUX(PolyUX n, PolyUX d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw rat_error("RationalUX: zero denominator");
    reduce();
}

void RationalUX::reduce() {
    if (num_.is_zero()) {
        den_ = PolyUX(1);
        return;
    }
    // trial division against the standard basis; best effort only
    bool progress = true;
    while (progress) {
        progress = false;
        for (int j = 0; j <= 6 && !progress; j++)
            for (int a = 1; a <= 4 && !progress; a++)
                for (int s : {-1, +1}) {
                    PolyUX f = PolyUX(1) + PolyUX::monomial(j, a, s);
                    auto qn = num_.divide_exact(f);
                    if (!qn) continue;
                    auto qd = den_.divide_exact(f);
                    if (!qd) continue;
                    num_ = *qn;
                    den_ = *qd;
                    progress = true;
                    break;
                }
    }
    // normalize so the lex-least denominator coefficient is +1
    const Rat lead = den_.terms().begin()->second;
    if (lead != 1) {
        PolyUX n2, d2;
        for (auto& [m, c] : num_.terms()) n2.set(m.du, m.dx, c / lead);
        for (auto& [m, c] : den_.terms()) d2.set(m.du, m.dx, c / lead);
        num_ = n2;
        den_ = d2;
    }
}

RationalUX operator*(const RationalUX& a, const RationalUX& b) {
    return RationalUX(a.num_ * b.num_, a.den_ * b.den_);
}

RationalUX operator+(const RationalUX& a, const RationalUX& b) {
    return RationalUX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalUX operator-(const RationalUX& a, const RationalUX& b) {
    return RationalUX(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalUX RationalUX::inverse() const {
    if (num_.is_zero()) throw rat_error("RationalUX: inverse of zero");
    return RationalUX(den_, num_);
}

bool RationalUX::equals(const RationalUX& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalUX RationalUX::substitute_inverse() const {
    const int A = std::max(num_.deg_u(), den_.deg_u());
    const int B = std::max(num_.deg_x(), den_.deg_x());
    PolyUX n2, d2;
    for (auto& [m, c] : num_.terms()) n2.set(A - m.du, B - m.dx, c);
    for (auto& [m, c] : den_.terms()) d2.set(A - m.du, B - m.dx, c);
    return RationalUX(std::move(n2), std::move(d2));
}

std::vector<Rat> RationalUX::series(const Int& p, int m) const {
    std::vector<Rat> n = num_.eval_u(p), d = den_.eval_u(p);
    if (d[0] == 0)
        throw rat_error("series: denominator " + den_.str() +
                        " has zero constant term at u=" + p.str());
    std::vector<Rat> c(m + 1, Rat(0));
    for (int i = 0; i <= m; i++) {
        Rat acc = i < (int)n.size() ? n[i] : Rat(0);
        for (int j = 1; j <= i && j < (int)d.size(); j++) acc -= d[j] * c[i - j];
        c[i] = acc / d[0];
    }
    return c;
}

std::string RationalUX::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

/* ------------------------------------------------------------------ */

RationalUX zeta_factor(int a, int b) {
    if (a <= 0) throw rat_error("zeta_factor: a must be positive");
    if (b > 0) throw rat_error("zeta_factor: b > 0 not supported (no catalog factor needs it)");
    PolyUX d = PolyUX(1) - PolyUX::monomial(-b, a);
    return RationalUX(PolyUX(1), d);
}

RationalUX l_factor(int a, int b, int chi_value) {
    if (a <= 0) throw rat_error("l_factor: a must be positive");
    if (b > 0) throw rat_error("l_factor: b > 0 not supported");
    if (chi_value == 0) return RationalUX(1);
    if (chi_value != 1 && chi_value != -1) throw rat_error("l_factor: chi must be -1, 0 or +1");
    PolyUX d = PolyUX(1) - PolyUX::monomial(-b, a, chi_value);
    return RationalUX(PolyUX(1), d);
}

RationalUX ux_monomial(int du, int dx, Rat c) {
    return RationalUX(PolyUX::monomial(du, dx, std::move(c)));
}

int chi3(long long n) {
    long long r = n % 3;
    if (r < 0) r += 3;
    return r == 1 ? 1 : r == 2 ? -1 : 0;
}

int chi4(long long n) {
    long long r = n % 4;
    if (r < 0) r += 4;
    return r == 1 ? 1 : r == 3 ? -1 : 0;
}

long long vp(long long n, long long p) {
    if (n == 0) throw rat_error("vp(0) undefined");
    if (n < 0) n = -n;
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        v++;
    }
    return v;
}

}  // namespace zeta3ab

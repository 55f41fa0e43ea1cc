#include "zeta3ab/series.hpp"

#include <cmath>

namespace zeta3ab {

std::vector<long long> primes_up_to(long long N) {
    std::vector<bool> comp(N + 1, false);
    std::vector<long long> out;
    for (long long i = 2; i <= N; i++) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= N; j += i) comp[j] = true;
    }
    return out;
}

GlobalCoeffs euler_assemble(const std::map<long long, std::vector<Int>>& locals, long long N) {
    // smallest prime factor sieve
    std::vector<long long> spf(N + 1, 0);
    for (long long i = 2; i <= N; i++) {
        if (spf[i]) continue;
        for (long long j = i; j <= N; j += i)
            if (!spf[j]) spf[j] = i;
    }
    GlobalCoeffs g;
    g.N = N;
    g.a.assign(N + 1, Int(0));
    g.a[1] = 1;
    for (long long n = 2; n <= N; n++) {
        const long long p = spf[n];
        long long m = n;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            e++;
        }
        auto it = locals.find(p);
        if (it == locals.end())
            throw series_error("euler_assemble: no local table for p=" + std::to_string(p));
        if ((int)it->second.size() <= e)
            throw series_error("euler_assemble: table for p=" + std::to_string(p) +
                               " too shallow (need exponent " + std::to_string(e) + ")");
        g.a[n] = it->second[e] * g.a[m];
    }
    return g;
}

namespace {

GlobalCoeffs assemble_from(const FamilySpec& fam, const Params& pr, long long N,
                           bool printed) {
    std::map<long long, std::vector<Int>> locals;
    for (long long p : primes_up_to(N)) {
        int depth = 0;
        long long pw = 1;
        while (pw <= N / p) {
            pw *= p;
            depth++;
        }
        RationalUX f = printed ? fam.printed_global(p, pr) : fam.local(p, pr).f;
        std::vector<Rat> ser = f.series(Int(p), depth);
        std::vector<Int> tab;
        for (auto& c : ser) {
            if (denominator(c) != 1)
                throw series_error("non-integer coefficient in " + fam.name +
                                   " at p=" + std::to_string(p));
            tab.push_back(numerator(c));
        }
        locals[p] = std::move(tab);
    }
    GlobalCoeffs g = euler_assemble(locals, N);
    g.source = fam.name + (printed ? " (printed global)" : " (closed-form locals)");
    return g;
}

}  // namespace

GlobalCoeffs global_coeffs(const FamilySpec& fam, const Params& pr, long long N) {
    return assemble_from(fam, pr, N, false);
}

GlobalCoeffs printed_global_coeffs(const FamilySpec& fam, const Params& pr, long long N) {
    return assemble_from(fam, pr, N, true);
}

GrowthEstimate growth_exponent(const GlobalCoeffs& g) {
    if (g.N < 1000) throw series_error("growth_exponent needs N >= 1000");
    // log-spaced sample of partial sums
    std::vector<double> xs, ys;
    Int sum = 0;
    long long next = 1000;
    double ratio = std::pow((double)g.N / 1000.0, 1.0 / 23.0);
    std::vector<long long> grid;
    for (int i = 0; i <= 23; i++) {
        grid.push_back(next);
        next = std::max(next + 1, (long long)std::llround(1000.0 * std::pow(ratio, i + 1)));
    }
    size_t gi = 0;
    for (long long n = 1; n <= g.N && gi < grid.size(); n++) {
        sum += g.a[n];
        while (gi < grid.size() && n == grid[gi]) {
            xs.push_back(std::log((double)n));
            ys.push_back(std::log(sum.convert_to<double>()));
            gi++;
        }
    }
    const size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; i++) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    GrowthEstimate est;
    est.slope = (n * sxy - sx * sy) / denom;
    double rss = 0;
    const double icpt = (sy - est.slope * sx) / n;
    for (size_t i = 0; i < n; i++) {
        double r = ys[i] - (icpt + est.slope * xs[i]);
        rss += r * r;
    }
    est.stderr_ = std::sqrt(rss / ((n - 2) * (sxx - sx * sx / n)));
    return est;
}

CompareResult table_compare(const std::vector<Int>& x, const std::vector<Int>& y) {
    const size_t n = std::min(x.size(), y.size());
    for (size_t i = 0; i < n; i++)
        if (x[i] != y[i]) return {(long long)i};
    if (x.size() != y.size()) return {(long long)n};
    return {-1};
}

CompareResult table_compare(const CoeffTable& x, const CoeffTable& y) {
    if (x.p != y.p) throw series_error("table_compare: different primes");
    return table_compare(x.counts, y.counts);
}

GlobalCoeffs sum_with_shift(const GlobalCoeffs& gn, long long r, const GlobalCoeffs& nk) {
    GlobalCoeffs out;
    out.N = gn.N;
    out.a.assign(gn.N + 1, Int(0));
    for (long long n = 1; n <= gn.N; n++) {
        out.a[n] = gn.a[n];
        if (n % r == 0 && n / r <= nk.N) out.a[n] += nk.a[n / r];
    }
    out.source = gn.source + " + r^{-s} * " + nk.source;
    return out;
}

GlobalCoeffs full_zeta_prime_holonomy(const FamilySpec& fam, const Params& pr, long long N) {
    const long long r = fam.order;
    const bool prime_r = (r == 2 || r == 3 || r == 5 || r == 7);
    if (fam.kind == HolKind::trivial || !prime_r)
        throw series_error(
            "full_zeta_prime_holonomy: holonomy order " + std::to_string(r) +
            " is not prime; supply the intermediate-subgroup identifications "
            "(H-type, parameter) explicitly to assemble zeta_G for this family");
    GlobalCoeffs gn = global_coeffs(fam, pr, N);
    const FamilySpec* nk = find_family("Nk");
    Params nkp;
    nkp.k = fam.k_of(pr);
    GlobalCoeffs nkt = global_coeffs(*nk, nkp, N);
    GlobalCoeffs out = sum_with_shift(gn, r, nkt);
    out.source = "zeta_" + fam.name + " (prime holonomy assembly)";
    return out;
}

}  // namespace zeta3ab

#pragma once

/*
  Dirichlet-coefficient machinery: multiplicative (Euler) assembly of
  global coefficient tables from per-prime local tables, the partial-sum
  growth estimate used as an abscissa smoke test, and table comparison.
*/

#include "zeta3ab/oracle.hpp"

#include <map>

namespace zeta3ab {

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalCoeffs {
    long long N = 0;
    std::vector<Int> a;  // a[1..N]; a[0] unused
    std::string source;
};

/* a_n = prod_p a_{p^{v_p(n)}}; every prime <= N must be supplied with
   depth at least floor(log_p N) */
GlobalCoeffs euler_assemble(const std::map<long long, std::vector<Int>>& locals, long long N);

/* global table of a family from its closed-form local factors */
GlobalCoeffs global_coeffs(const FamilySpec& fam, const Params& pr, long long N);

/* global table from the printed global formula (per-prime literal reading) */
GlobalCoeffs printed_global_coeffs(const FamilySpec& fam, const Params& pr, long long N);

/* least-squares slope of log(partial sums) against log(N) */
struct GrowthEstimate {
    double slope = 0;
    double stderr_ = 0;
};
GrowthEstimate growth_exponent(const GlobalCoeffs& g);

/* first index of disagreement, or -1 when equal */
struct CompareResult {
    long long first_diff = -1;
    bool equal() const { return first_diff < 0; }
};
CompareResult table_compare(const std::vector<Int>& x, const std::vector<Int>& y);
CompareResult table_compare(const CoeffTable& x, const CoeffTable& y);

/* zeta_G = zeta_{G,N} + r^{-s} zeta_{N_k} for prime holonomy order r:
   out[n] = gn[n] + (r | n ? nk[n/r] : 0) */
GlobalCoeffs sum_with_shift(const GlobalCoeffs& gn, long long r, const GlobalCoeffs& nk);

/* the same assembly from the catalog: requires prime |G/N| */
GlobalCoeffs full_zeta_prime_holonomy(const FamilySpec& fam, const Params& pr, long long N);

std::vector<long long> primes_up_to(long long N);

}  // namespace zeta3ab

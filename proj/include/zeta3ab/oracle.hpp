#pragma once

/*
  The brute-force subgroup counter.  Enumerates normalized pairs (t, v) --
  t a Hermite-normal-form triangular basis with diagonal p^a, p^b, p^c and
  off-diagonal entries reduced mod the diagonal of their column, v one
  coset-adjustment triple per holonomy generator reduced mod the
  (p^a, p^b, p^c) box -- and checks the three membership conditions
  (good basis, conjugation of the rows, relators) exactly.

  Modes:
    full    - plain enumeration of every normalized candidate;
    fast    - same counts, with trailing variables that occur affinely
              removed by congruence counting instead of enumeration.
  A separate measure mode integrates over all residues mod p^{m+1} with
  explicit Haar weights and reproduces the same series; it validates the
  normalization bookkeeping rather than the counts per se.
*/

#include "zeta3ab/family.hpp"
#include "zeta3ab/membership.hpp"

#include <atomic>
#include <functional>

namespace zeta3ab {

struct OracleOptions {
    long long work_limit = 100000000;  // condition evaluations per invocation
    int jobs = 1;
};

enum class OracleMode { full, fast };

struct budget_exceeded : std::runtime_error {
    int reached_m;
    explicit budget_exceeded(int m)
        : std::runtime_error("oracle work limit exceeded (reached X^" + std::to_string(m) + ")"),
          reached_m(m) {}
};

struct CoeffTable {
    long long p = 0;
    int m = 0;
    std::vector<Int> counts;
    std::string provenance;  // oracle-full | oracle-fast | closed-form
    std::string family, params;
    double elapsed_ms = 0;
};

CoeffTable oracle_count(const FamilySpec& fam, const Params& pr, long long p, int m,
                        OracleMode mode, const OracleOptions& opt = {});

struct Witness {
    int a = 0, b = 0, c = 0;
    long long t12 = 0, t13 = 0, t23 = 0;
    long long v[2][3] = {};
};

void witness_stream(const FamilySpec& fam, const Params& pr, long long p, int m,
                    const std::function<void(const Witness&)>& cb,
                    const OracleOptions& opt = {});

/* truncated cone integral over all residues mod p^{m+1}, with the
   (1-p^{-1})^{-3} |t11|^{s-1-t}|t22|^{s-2-t}|t33|^{s-3-t} weights summed
   symbolically in X; exact for the coefficients of X^0..X^m */
std::vector<Rat> measure_series(const FamilySpec& fam, const Params& pr, long long p, int m,
                                const OracleOptions& opt = {});

struct AuditReport {
    long long trials = 0;
    long long violations = 0;
    std::vector<std::string> notes;
};

/* re-representation invariance: shifting v by elements of B_t and
   replacing rows of t by row-multiples must not change acceptance.
   break_shift = true deliberately shifts v by a non-member (negative
   control; violations are then expected). */
AuditReport invariance_audit(const FamilySpec& fam, const Params& pr, long long p,
                             long long trials, unsigned seed = 1, bool break_shift = false);

/* series expansion of the catalog closed form, as a CoeffTable */
CoeffTable closed_form_table(const FamilySpec& fam, const Params& pr, long long p, int m);

}  // namespace zeta3ab

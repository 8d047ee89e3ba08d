#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scarflab/common.hpp"

namespace scarflab {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; C(n, k) = 0 for k < 0 or k > n >= 0.
bigint binom(const bigint& n, long long k);

// Sharp Betti bound f_i(S_q^r) in closed form; r in {1, 2, 3}.
//   r=1: C(q, i+1)
//   r=2: C(C(q,2), i+1) + q*C(q-1, i)
//   r=3: the seven-term closed formula (empty sums/binomials vanish).
bigint beta_bound(int q, int r, long long i);

// The r=3 pre-simplification summation form; agrees with beta_bound(q,3,i)
// for all q, i (kept as an independent regression oracle).
bigint beta_bound_r3_intermediate(int q, long long i);

// f_i of the full Taylor complex: C(C(q+r-1, r), i+1).
bigint taylor_bound(int q, int r, long long i);

// f_i(L_q^3) = q*C(q-1, i) + C(C(q,3) + 2*C(q,2), i+1); r must be 3.
bigint l_bound(int q, int r, long long i);

// Projective dimension of E_q^r, r in {1, 2, 3}:
//   r=1: q-1
//   r=2: C(q,2)-1 if q >= 3, else q-1
//   r=3: C(q,3)-1 if q >= 5; C(q,2)-1 if 3 <= q <= 4; q-1 if q <= 2.
int pd_bound(int q, int r);

struct BettiVector {
    std::vector<bigint> values;  // indices 0 .. pd
    bool log_concave = false;    // b_i^2 >= b_{i-1} b_{i+1} on the support
    bool unimodal = false;
    bigint top_value;            // values[pd]
};
BettiVector betti_vector(int q, int r);

struct RatioRow {
    long long i = 0;
    bool defined = false;  // scarf entry nonzero
    bigrat taylor_over_scarf;
    bigrat l_over_scarf;
};
struct RatioDiagnostics {
    std::vector<RatioRow> rows;  // i = 0 .. pd(Taylor) while scarf nonzero
    bigrat max_taylor_over_scarf;
    bigrat max_l_over_scarf;
};
// Exact finite-q ratios f_i(T)/f_i(S) and f_i(L)/f_i(S); q <= 10, r = 3.
RatioDiagnostics ratio_diagnostics(int q);

} // namespace scarflab

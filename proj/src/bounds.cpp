#include "scarflab/bounds.hpp"

#include <stdexcept>

namespace scarflab {

bigint binom(const bigint& n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    bigint kk = k;
    if (bigint(2) * kk > n) kk = n - kk;
    bigint result = 1;
    for (bigint j = 1; j <= kk; ++j) {
        result *= n - kk + j;
        result /= j;  // exact at every step
    }
    return result;
}

namespace {

bigint C(long long n, long long k) { return binom(bigint(n), k); }
bigint C2(int q) { return C(q, 2); }
bigint C3(int q) { return C(q, 3); }

long long ll(const bigint& v) { return v.convert_to<long long>(); }

bigint beta_bound_r3(int q, long long i) {
    bigint t = binom(C3(q), i + 1);
    t += q * C(q - 1, i);
    t += C2(q) * C(q - 2, i - 1);
    for (int s = 2; s <= q - 3; ++s)
        t += q * C(q - 1, s - 1) * binom(C3(q - s) + C2(q - 1), i - s + 2);
    t += q * C2(q - 1) * binom(C2(q - 1), i - q + 4);
    t += bigint(q) * (q - 1) * binom(C2(q - 1), i - q + 3);
    t += q * binom(C2(q - 1), i - q + 2);
    return t;
}

} // namespace

bigint beta_bound(int q, int r, long long i) {
    if (q < 1) throw std::domain_error("beta_bound: q must be >= 1");
    if (i < 0) throw std::domain_error("beta_bound: i must be >= 0");
    switch (r) {
        case 1: return C(q, i + 1);
        case 2: return binom(C2(q), i + 1) + q * C(q - 1, i);
        case 3: return beta_bound_r3(q, i);
        default:
            throw std::domain_error("beta_bound: r must be 1, 2, or 3");
    }
}

bigint beta_bound_r3_intermediate(int q, long long i) {
    if (q < 1) throw std::domain_error("beta_bound_r3_intermediate: q >= 1");
    bigint t = binom(C3(q), i + 1);
    t += q * (binom(C2(q), i + 1) - binom(C2(q - 1), i + 1));
    t += q * C(q - 1, i);
    t += C2(q) * C(q - 2, i - 1);
    for (int s = 2; s <= q - 3; ++s)
        t += q * C(q - 1, s - 1) *
             (binom(C3(q - s) + C2(q - 1), i - s + 2) -
              binom(C2(q - 1), i - s + 2));
    return t;
}

bigint taylor_bound(int q, int r, long long i) {
    return binom(C(q + r - 1, r), i + 1);
}

bigint l_bound(int q, int r, long long i) {
    if (r != 3) throw std::domain_error("l_bound: only r = 3 is supported");
    return q * C(q - 1, i) + binom(C3(q) + 2 * C2(q), i + 1);
}

int pd_bound(int q, int r) {
    if (q < 1) throw std::domain_error("pd_bound: q must be >= 1");
    switch (r) {
        case 1: return q - 1;
        case 2: return q >= 3 ? ll(C2(q)) - 1 : q - 1;
        case 3:
            if (q >= 5) return ll(C3(q)) - 1;
            if (q >= 3) return ll(C2(q)) - 1;
            return q - 1;
        default:
            throw std::domain_error("pd_bound: r must be 1, 2, or 3");
    }
}

BettiVector betti_vector(int q, int r) {
    BettiVector bv;
    const int pd = pd_bound(q, r);
    bv.values.reserve(pd + 1);
    for (long long i = 0; i <= pd; ++i) bv.values.push_back(beta_bound(q, r, i));
    bv.top_value = bv.values.back();

    bv.log_concave = true;
    for (std::size_t i = 1; i + 1 < bv.values.size(); ++i) {
        if (bv.values[i] == 0) continue;  // tested on positive entries
        if (bv.values[i] * bv.values[i] < bv.values[i - 1] * bv.values[i + 1])
            bv.log_concave = false;
    }

    bv.unimodal = true;
    bool descending = false;
    for (std::size_t i = 1; i < bv.values.size(); ++i) {
        if (bv.values[i] < bv.values[i - 1]) descending = true;
        else if (descending && bv.values[i] > bv.values[i - 1]) bv.unimodal = false;
    }
    return bv;
}

RatioDiagnostics ratio_diagnostics(int q) {
    if (q > 10) throw resource_error("ratio_diagnostics: q capped at 10");
    RatioDiagnostics d;
    d.max_taylor_over_scarf = 0;
    d.max_l_over_scarf = 0;
    const int pd = pd_bound(q, 3);
    for (long long i = 0; i <= pd; ++i) {
        RatioRow row;
        row.i = i;
        const bigint s = beta_bound(q, 3, i);
        if (s != 0) {
            row.defined = true;
            row.taylor_over_scarf = bigrat(taylor_bound(q, 3, i), s);
            row.l_over_scarf = bigrat(l_bound(q, 3, i), s);
            if (row.taylor_over_scarf > d.max_taylor_over_scarf)
                d.max_taylor_over_scarf = row.taylor_over_scarf;
            if (row.l_over_scarf > d.max_l_over_scarf)
                d.max_l_over_scarf = row.l_over_scarf;
        }
        d.rows.push_back(std::move(row));
    }
    return d;
}

} // namespace scarflab

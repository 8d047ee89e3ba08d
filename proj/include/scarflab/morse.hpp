#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scarflab/common.hpp"
#include "scarflab/ideal.hpp"
#include "scarflab/lattice.hpp"
#include "scarflab/r3.hpp"

namespace scarflab {

// Classification of a minimal nonface of S_q^3 (r = 3 matching machinery).
//   Type I:   {eps_i^3, n} with eps_i^3 the larger vertex.
//   Type II:  {eps_i^2 eps_j, eps_i eps_j^2, n}, i < j, n square-free over
//             [q] \ {i, j}.
//   Type III: {eps_i^2 eps_j, n} with n in Q_{i,j}.
// Exactly one type/parameter choice must match; zero or multiple matches
// throw invariant_violation (the classification's totality is a verified
// property, never patched around).
struct MorseClass {
    int type = 0;  // 1, 2, or 3
    int i = 0;     // 1-based
    int j = 0;     // 1-based
    Point omega;   // the matching vertex omega(sigma)
};
MorseClass classify_nonface(const Face& sigma);

// omega(sigma) alone (convenience accessor over classify_nonface).
Point omega(const Face& sigma);

// The largest (under the face order) minimal nonface contained in tau.
// Throws std::domain_error if tau is a face.
Face partition_class(const Face& tau, const std::vector<NonfaceDescriptor>& N);

// Generic directed-cycle detection on an explicit graph (iterative DFS);
// exposed so tests can feed synthetic graphs to the detector.
bool has_directed_cycle(const std::vector<std::vector<int>>& adj);

// Full verification of the matching over the whole Taylor complex of E_q^3.
// Requires C(q+2,3) <= 20 vertices (q <= 4), else resource_error.
struct MorseVerdict {
    bool perfect = false;      // every nonface cell matched exactly once
    bool homogeneous = false;  // matched pairs share lcm labels
    bool acyclic = false;      // no directed cycle in any dimension layer
    bool critical_equals_scarf = false;  // critical census vs label oracle
    std::uint64_t cells = 0;
    std::uint64_t nonfaces = 0;
    std::uint64_t critical = 0;

    bool all_pass() const {
        return perfect && homogeneous && acyclic && critical_equals_scarf;
    }
};
MorseVerdict verify_matching_full(int q);

// Sampled class-stability check at scale (Lemma-style reduction): draws
// `samples` random nonface cells with a pinned RNG seed and checks that
//   tau in Y(sigma)  =>  tau u {omega(sigma)} in Y(sigma), and
//   omega(sigma) in tau, sigma subseteq tau \ {omega(sigma)}
//                    =>  tau \ {omega(sigma)} in Y(sigma).
struct StabilityReport {
    std::uint64_t samples = 0;
    std::uint64_t passed = 0;
    bool all_pass() const { return passed == samples; }
};
StabilityReport class_stability_sampled(int q, std::uint64_t samples,
                                        std::uint64_t seed);

} // namespace scarflab

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zoll::counting {

// One counting experiment's result: either a dense per-index profile
// (annulus counts over j) or a sparse two-index profile (triple cells over
// (l1, l2)), plus the running totals every audit checks.
struct CountProfile {
    std::string kind;
    long long lambda = 0;
    long long alpha = 0;
    double c0 = 0.0;
    long long j = 0;

    long long index_lo = 0;              // dense profiles: counts[i] is index_lo + i
    std::vector<std::uint64_t> counts;
    std::map<std::array<long long, 2>, std::uint64_t> cells;

    std::uint64_t total = 0;             // number of enumerated tuples, with window
                                         // multiplicity for the annulus profile
    std::uint64_t max_count = 0;
    long long argmax = 0;
    long long argmax2 = 0;

    void finalize();                     // recompute total/max/argmax
};

// Pairs (k, l) with lambda/4 <= k, l <= 4*lambda counted into every integer j
// whose window [j - c0 - 1, j + c0 + 1] contains (k + alpha/4)^2 + (l + alpha/4)^2.
// Shifted squares are scaled by 16 so membership is exact integer arithmetic;
// c0 must therefore have 16*c0 integral. Dense profile over j.
CountProfile annulus_pair_count(long long lambda, long long alpha, double c0);

// max_j of the annulus profile without materializing it: stripe block
// histograms over the scaled sums, viable through lambda = 2^14. Requires
// integer c0 (window edges on 16-blocks). Returns (max count, argmax j).
std::pair<std::uint64_t, long long> max_annulus_pair_count(long long lambda,
                                                           long long alpha,
                                                           long long c0);

// Number of pairs (k1, k2) of nonnegative integers with
// k1^2 + k1 + k2^2 + k2 = ell.
std::uint64_t pair_representation_count(long long ell);

// max of pair_representation_count over 0 <= ell <= ell_max by a sieve scan.
// Returns (max, argmax ell).
std::pair<std::uint64_t, long long> max_pair_representation(long long ell_max);

// Number of (k1, k2) with k1, k2 >= 0, k1 + k2 <= k and
// q(k1) + q(k2) + q(k - k1 - k2) = ell1, where q(x) = x^2 + x.
std::uint64_t triple_representation_count(long long k, long long ell1);

// max over ell1 at fixed k. Returns (max, argmax ell1).
std::pair<std::uint64_t, long long> max_triple_representation(long long k);

// Ordered triples (k1, k2, k3), each level in [lambda/4, 4*lambda], binned by
// the cell (ell1, ell2) with ell1 = sum q(k_i) and
// ell2 = floor(sum k_i / (lambda * 4^j)). Requires lambda * 4^j >= 1; the bin
// edge is evaluated in exact integer arithmetic for any sign of j.
CountProfile triple_level_sets(long long lambda, long long j);

// max cell count without materializing the profile, per-ell2 stripe
// histograms; ordered=false counts each unordered triple once.
std::uint64_t max_triple_cell_count(long long lambda, long long j, bool ordered);

}  // namespace zoll::counting

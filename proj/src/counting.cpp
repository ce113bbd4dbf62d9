#include "zoll/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zoll::counting {

namespace {

using ll = long long;
using u64 = std::uint64_t;

ll floor_div(ll a, ll b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

ll ceil_div(ll a, ll b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

ll isqrt(ll n) {
    ll r = static_cast<ll>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

ll q_of(ll x) { return x * x + x; }

void check_band(ll lambda) {
    if (lambda < 4) throw std::invalid_argument("lambda must be >= 4");
}

ll scaled_c0(double c0) {
    if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be positive");
    const double s = 16.0 * c0;
    const ll r = std::llround(s);
    if (std::abs(s - static_cast<double>(r)) > 1e-9)
        throw std::invalid_argument("c0 must be a multiple of 1/16 (exact windows)");
    return r;
}

}  // namespace

void CountProfile::finalize() {
    total = 0;
    max_count = 0;
    argmax = index_lo;
    argmax2 = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        total += counts[i];
        if (counts[i] > max_count) {
            max_count = counts[i];
            argmax = index_lo + static_cast<ll>(i);
        }
    }
    for (const auto& [key, c] : cells) {
        total += c;
        if (c > max_count) {
            max_count = c;
            argmax = key[0];
            argmax2 = key[1];
        }
    }
}

CountProfile annulus_pair_count(ll lambda, ll alpha, double c0) {
    check_band(lambda);
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    const ll c16 = scaled_c0(c0);

    const ll kl = (lambda + 3) / 4, kh = 4 * lambda;
    std::vector<ll> sq;
    sq.reserve(kh - kl + 1);
    for (ll k = kl; k <= kh; ++k) sq.push_back((4 * k + alpha) * (4 * k + alpha));

    // s = 16[(k+a/4)^2 + (l+a/4)^2]; s/16 in [j-c0-1, j+c0+1] iff
    // 16 j in [s - c16 - 16, s + c16 + 16]
    const ll s_min = 2 * sq.front(), s_max = 2 * sq.back();
    const ll j_min = ceil_div(s_min - c16 - 16, 16);
    const ll j_max = floor_div(s_max + c16 + 16, 16);
    if (j_max - j_min + 1 > (1LL << 27))
        throw std::length_error("annulus_pair_count: profile too large; use max_annulus_pair_count");

    CountProfile p;
    p.kind = "annulus";
    p.lambda = lambda;
    p.alpha = alpha;
    p.c0 = c0;
    p.index_lo = j_min;
    p.counts.assign(static_cast<std::size_t>(j_max - j_min + 1), 0);

    for (std::size_t i = 0; i < sq.size(); ++i) {
        for (std::size_t jx = i; jx < sq.size(); ++jx) {
            const ll s = sq[i] + sq[jx];
            const ll lo = ceil_div(s - c16 - 16, 16);
            const ll hi = floor_div(s + c16 + 16, 16);
            const u64 inc = (i == jx) ? 1 : 2;
            for (ll j = lo; j <= hi; ++j) p.counts[static_cast<std::size_t>(j - j_min)] += inc;
        }
    }
    p.finalize();
    return p;
}

std::pair<u64, ll> max_annulus_pair_count(ll lambda, ll alpha, ll c0) {
    check_band(lambda);
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (c0 < 1) throw std::invalid_argument("c0 must be a positive integer");

    const ll kl = (lambda + 3) / 4, kh = 4 * lambda;
    std::vector<ll> sq;
    sq.reserve(kh - kl + 1);
    for (ll k = kl; k <= kh; ++k) sq.push_back((4 * k + alpha) * (4 * k + alpha));
    const ll n = static_cast<ll>(sq.size());
    const ll* sd = sq.data();

    // count(j) = (full 16-blocks j-c0-1 .. j+c0) + (sums exactly at the right
    // edge 16(j+c0+1)); stripes bound the histogram memory
    const ll b_lo = (2 * sq.front()) >> 4, b_hi = (2 * sq.back()) >> 4;
    const ll margin = c0 + 2;
    const ll stripe = 1LL << 25;
    u64 best = 0;
    ll best_j = b_lo;
    std::vector<std::uint16_t> blocks, edge;

    for (ll b0 = b_lo; b0 <= b_hi; b0 += stripe) {
        const ll b1 = std::min(b0 + stripe, b_hi + 1);
        const ll base = b0 - margin;
        const ll lo = base << 4;
        const ll hi = ((b1 + margin) << 4) - 1;
        const std::size_t len = static_cast<std::size_t>(b1 - b0 + 2 * margin + 1);
        blocks.assign(len, 0);
        edge.assign(len, 0);
        for (ll i = 0; i < n; ++i) {
            const ll x = sd[i];
            const ll j0 = std::lower_bound(sd + i, sd + n, lo - x) - sd;  // unordered: j >= i
            const ll j1 = std::upper_bound(sd + j0, sd + n, hi - x) - sd;
            for (ll jx = j0; jx < j1; ++jx) {
                const ll s = x + sd[jx];
                const ll b = (s >> 4) - base;
                const std::uint16_t inc = (i == jx) ? 1 : 2;  // restore ordered count
                blocks[static_cast<std::size_t>(b)] += inc;
                if (!(s & 15)) edge[static_cast<std::size_t>(b)] += inc;
            }
        }
        for (ll j = b0; j < b1; ++j) {
            const ll r = j - base;
            u64 c = edge[static_cast<std::size_t>(r + c0 + 1)];
            for (ll d = -c0 - 1; d <= c0; ++d) c += blocks[static_cast<std::size_t>(r + d)];
            if (c > best) {
                best = c;
                best_j = j;
            }
        }
    }
    return {best, best_j};
}

u64 pair_representation_count(ll ell) {
    if (ell < 0) throw std::invalid_argument("ell must be >= 0");
    u64 count = 0;
    for (ll k1 = 0; q_of(k1) <= ell; ++k1) {
        const ll rem = ell - q_of(k1);
        const ll k2 = (isqrt(4 * rem + 1) - 1) / 2;
        if (q_of(k2) == rem) ++count;
    }
    return count;
}

std::pair<u64, ll> max_pair_representation(ll ell_max) {
    if (ell_max < 0) throw std::invalid_argument("ell_max must be >= 0");
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(ell_max) + 1, 0);
    for (ll k1 = 0; q_of(k1) <= ell_max; ++k1) {
        for (ll k2 = k1; q_of(k1) + q_of(k2) <= ell_max; ++k2)
            hist[static_cast<std::size_t>(q_of(k1) + q_of(k2))] += (k1 == k2) ? 1 : 2;
    }
    u64 best = 0;
    ll arg = 0;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] > best) {
            best = hist[i];
            arg = static_cast<ll>(i);
        }
    }
    return {best, arg};
}

u64 triple_representation_count(ll k, ll ell1) {
    if (k < 0 || ell1 < 0) throw std::invalid_argument("arguments must be >= 0");
    u64 count = 0;
    for (ll k1 = 0; k1 <= k; ++k1)
        for (ll k2 = 0; k1 + k2 <= k; ++k2)
            if (q_of(k1) + q_of(k2) + q_of(k - k1 - k2) == ell1) ++count;
    return count;
}

std::pair<u64, ll> max_triple_representation(ll k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<std::uint32_t> hist(static_cast<std::size_t>(3 * q_of(k)) + 1, 0);
    for (ll k1 = 0; k1 <= k; ++k1)
        for (ll k2 = 0; k1 + k2 <= k; ++k2)
            ++hist[static_cast<std::size_t>(q_of(k1) + q_of(k2) + q_of(k - k1 - k2))];
    u64 best = 0;
    ll arg = 0;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        if (hist[i] > best) {
            best = hist[i];
            arg = static_cast<ll>(i);
        }
    }
    return {best, arg};
}

namespace {

// ell2 bin of a triple with level sum s: floor(s / (lambda * 4^j)), exactly.
ll ell2_bin(ll s, ll lambda, ll j) {
    if (j >= 0) return s / (lambda << (2 * j));
    return (s << (-2 * j)) / lambda;
}

void check_cell_width(ll lambda, ll j) {
    check_band(lambda);
    if (lambda < 8) throw std::invalid_argument("lambda must be >= 8");
    if (j > 20 || j < -20) throw std::invalid_argument("unreasonable scale index j");
    if (j < 0 && (1LL << (-2 * j)) > lambda)
        throw std::invalid_argument("cell width lambda*4^j must be >= 1");
}

}  // namespace

CountProfile triple_level_sets(ll lambda, ll j) {
    check_cell_width(lambda, j);
    const ll kl = (lambda + 3) / 4, kh = 4 * lambda;
    const ll band = kh - kl + 1;
    if (band * band * band / 6 > (200LL << 20))
        throw std::length_error("triple_level_sets: profile too large; use max_triple_cell_count");

    CountProfile p;
    p.kind = "triple_cells";
    p.lambda = lambda;
    p.j = j;
    for (ll k1 = kl; k1 <= kh; ++k1) {
        for (ll k2 = k1; k2 <= kh; ++k2) {
            for (ll k3 = k2; k3 <= kh; ++k3) {
                const ll l1 = q_of(k1) + q_of(k2) + q_of(k3);
                const ll l2 = ell2_bin(k1 + k2 + k3, lambda, j);
                const u64 orbit = (k1 == k2) ? (k2 == k3 ? 1 : 3) : (k2 == k3 ? 3 : 6);
                p.cells[{l1, l2}] += orbit;
            }
        }
    }
    p.finalize();
    return p;
}

u64 max_triple_cell_count(ll lambda, ll j, bool ordered) {
    check_cell_width(lambda, j);
    const ll kl = (lambda + 3) / 4, kh = 4 * lambda;
    const ll l1_lo = 3 * q_of(kl), l1_hi = 3 * q_of(kh);
    const ll l2_lo = ell2_bin(3 * kl, lambda, j), l2_hi = ell2_bin(3 * kh, lambda, j);

    std::vector<std::uint32_t> hist;
    u64 best = 0;
    for (ll l2 = l2_lo; l2 <= l2_hi; ++l2) {
        // level sums landing in this ell2 bin
        ll s_lo, s_hi;
        if (j >= 0) {
            const ll w = lambda << (2 * j);
            s_lo = l2 * w;
            s_hi = (l2 + 1) * w - 1;
        } else {
            const ll sc = 1LL << (-2 * j);
            s_lo = ceil_div(l2 * lambda, sc);
            s_hi = ceil_div((l2 + 1) * lambda, sc) - 1;
        }
        hist.assign(static_cast<std::size_t>(l1_hi - l1_lo + 1), 0);
        for (ll k1 = kl; k1 <= kh; ++k1) {
            for (ll k2 = k1; k2 <= kh; ++k2) {
                const ll lo = std::max(k2, s_lo - k1 - k2);
                const ll hi = std::min(kh, s_hi - k1 - k2);
                const ll base = q_of(k1) + q_of(k2) - l1_lo;
                for (ll k3 = lo; k3 <= hi; ++k3) {
                    const std::uint32_t orbit =
                        ordered ? ((k1 == k2) ? (k2 == k3 ? 1 : 3) : (k2 == k3 ? 3 : 6)) : 1;
                    hist[static_cast<std::size_t>(base + q_of(k3))] += orbit;
                }
            }
        }
        for (std::uint32_t v : hist) best = std::max<u64>(best, v);
    }
    return best;
}

}  // namespace zoll::counting

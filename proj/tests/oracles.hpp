// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// Determinant by the Leibniz permutation sum. Independent of both the
// library's cofactor expansion and its SNF elimination.
inline mpz_class det_leibniz(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class det = 0;
    do {
        // sign of the permutation by counting inversions
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        mpz_class term = (inversions % 2 == 0) ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Order of Z^3 / (column lattice of a), counted by enumerating the integer
// points of the half-open fundamental parallelepiped A.[0,1)^3. Requires
// det != 0. Returns the exact count.
inline mpz_class cokernel_order_3x3(const std::vector<std::vector<long>>& a) {
    long adj[3][3];
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    // adjugate: adj[i][j] = cofactor(j,i)
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            if (r0 > r1) std::swap(r0, r1);
            if (c0 > c1) std::swap(c0, c1);
            long sign = ((i + j) % 2 == 0) ? 1 : -1;
            adj[i][j] = sign * minor2(r0, r1, c0, c1);
        }
    long det = a[0][0] * adj[0][0] + a[0][1] * adj[1][0] + a[0][2] * adj[2][0];

    long lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
        lo[i] = hi[i] = 0;
        for (int j = 0; j < 3; ++j) {
            lo[i] += std::min(0L, a[i][j]);
            hi[i] += std::max(0L, a[i][j]);
        }
    }
    mpz_class count = 0;
    for (long x0 = lo[0]; x0 <= hi[0]; ++x0)
        for (long x1 = lo[1]; x1 <= hi[1]; ++x1)
            for (long x2 = lo[2]; x2 <= hi[2]; ++x2) {
                bool inside = true;
                for (int i = 0; i < 3 && inside; ++i) {
                    long t = adj[i][0] * x0 + adj[i][1] * x1 + adj[i][2] * x2;
                    if (det > 0)
                        inside = (t >= 0 && t < det);
                    else
                        inside = (t <= 0 && t > det);
                }
                if (inside) ++count;
            }
    return count;
}

// Exhaustive search over unimodular row/column operations with bounded
// entries: all diagonal, nonnegative, divisibility-chain forms reachable from
// a given 2x2 start matrix.
inline std::set<std::array<long, 4>> reachable_snf_forms_2x2(std::array<long, 4> start,
                                                             long bound) {
    std::set<std::array<long, 4>> seen;
    std::vector<std::array<long, 4>> queue{start};
    seen.insert(start);
    auto push = [&](std::array<long, 4> m) {
        for (long v : m)
            if (v > bound || v < -bound) return;
        if (seen.insert(m).second) queue.push_back(m);
    };
    while (!queue.empty()) {
        auto m = queue.back();
        queue.pop_back();
        // m = [a b; c d], rows (a,b),(c,d); cols (a,c),(b,d)
        push({m[2], m[3], m[0], m[1]});                          // swap rows
        push({m[1], m[0], m[3], m[2]});                          // swap cols
        push({-m[0], -m[1], m[2], m[3]});                        // negate row 0
        push({m[0], m[1], -m[2], -m[3]});                        // negate row 1
        for (long s : {1L, -1L}) {
            push({m[0] + s * m[2], m[1] + s * m[3], m[2], m[3]}); // r0 += s r1
            push({m[0], m[1], m[2] + s * m[0], m[3] + s * m[1]}); // r1 += s r0
            push({m[0] + s * m[1], m[1], m[2] + s * m[3], m[3]}); // c0 += s c1
            push({m[0], m[1] + s * m[0], m[2], m[3] + s * m[2]}); // c1 += s c0
        }
    }
    std::set<std::array<long, 4>> forms;
    for (const auto& m : seen)
        if (m[1] == 0 && m[2] == 0 && m[0] >= 0 && m[3] >= 0 &&
            (m[0] == 0 ? m[3] == 0 : m[3] % m[0] == 0))
            forms.insert(m);
    return forms;
}

// Betti numbers over Q of a finite chain complex, by rational Gaussian
// elimination on the boundary matrices. boundaries[k] maps C_k -> C_{k-1};
// dims[k] is the rank of C_k.
inline std::vector<long> betti_from_chain_complex(
    const std::vector<long>& dims, const std::vector<std::vector<std::vector<mpq_class>>>& boundaries) {
    auto rank = [](std::vector<std::vector<mpq_class>> m) -> long {
        long r = 0;
        std::size_t rows = m.size();
        if (rows == 0) return 0;
        std::size_t cols = m[0].size();
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols && row < rows; ++col) {
            std::size_t pivot = row;
            while (pivot < rows && m[pivot][col] == 0) ++pivot;
            if (pivot == rows) continue;
            std::swap(m[pivot], m[row]);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == row || m[i][col] == 0) continue;
                mpq_class f = m[i][col] / m[row][col];
                for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            }
            ++row;
            ++r;
        }
        return r;
    };
    std::vector<long> ranks(dims.size() + 1, 0);
    for (std::size_t k = 1; k < dims.size(); ++k)
        if (dims[k] > 0 && dims[k - 1] > 0 && k < boundaries.size() && !boundaries[k].empty())
            ranks[k] = rank(boundaries[k]);
    std::vector<long> betti(dims.size(), 0);
    for (std::size_t k = 0; k < dims.size(); ++k)
        betti[k] = dims[k] - ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
    return betti;
}

inline long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Deterministic 64-bit mixer for sampling without <random> engine variance.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
};

} // namespace oracles

#pragma once

// Test-only oracles, implemented independently of the library code paths they
// check. Everything here is brute force or a textbook closed form; nothing
// calls into deltacurve::modcurve or deltacurve::arith.

#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline long phi(long n) {
    long count = 0;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

inline std::vector<long> primes_of(long n) {
    std::vector<long> ps;
    for (long p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (prime) ps.push_back(p);
    }
    return ps;
}

// Legendre-type factors found by brute search for square roots mod p.
inline int local_solutions(long p, long a, long b, long c) {
    int count = 0;
    for (long x = 0; x < p; ++x)
        if (((a * x * x + b * x + c) % p + p) % p == 0) ++count;
    return count;
}

// Classical genus of X_0(N); the elliptic terms are products of local root
// counts found by brute search.
inline long g0(long N) {
    long mu = N;
    for (long p : primes_of(N)) mu = mu / p * (p + 1);
    long v2 = 1, v3 = 1;
    if (N % 4 == 0) v2 = 0;
    else
        for (long p : primes_of(N)) v2 *= local_solutions(p, 1, 0, 1);
    if (N % 9 == 0) v3 = 0;
    else
        for (long p : primes_of(N)) v3 *= local_solutions(p, 1, -1, 1);
    long vinf = 0;
    for (long d = 1; d <= N; ++d)
        if (N % d == 0) vinf += phi(std::gcd(d, N / d));
    // 12(g-1) = mu - 3 v2 - 4 v3 - 6 vinf
    return (12 + mu - 3 * v2 - 4 * v3 - 6 * vinf) / 12;
}

// Classical genus of X_1(N); the first few levels are special-cased.
inline long g1(long N) {
    if (N <= 4) return 0;
    long mu = N * N;
    for (long p : primes_of(N)) mu = mu / (p * p) * (p * p - 1);
    mu /= 2;
    long vinf = 0;
    for (long d = 1; d <= N; ++d)
        if (N % d == 0) vinf += phi(d) * phi(N / d);
    vinf /= 2;
    return (12 + mu - 6 * vinf) / 12;
}

// Number of subgroups of (Z/NZ)^* containing +-1, by exhausting subsets of
// the +-pairs. Usable for N up to ~30.
inline long subgroup_count_brute(long N) {
    if (N <= 2) return 1;
    std::vector<std::pair<long, long>> pairs;
    for (long r = 1; r < N; ++r)
        if (std::gcd(r, N) == 1 && r <= N - r) pairs.push_back({r, N - r});
    const std::size_t n = pairs.size();
    long count = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::set<long> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                s.insert(pairs[i].first);
                s.insert(pairs[i].second);
            }
        if (!s.count(1) || !s.count(N - 1)) continue;
        bool closed = true;
        for (long a : s)
            for (long b : s)
                if (!s.count(a * b % N)) closed = false;
        if (closed) ++count;
    }
    return count;
}

// |P^1(Z/NZ)| by orbit counting: pairs (a,b) with gcd(a,b,N)=1 modulo unit
// scaling. Backs the index oracle mu = |P^1| * phi(N) / |Delta|.
inline long p1_size_brute(long N) {
    if (N == 1) return 1;
    std::vector<long> units;
    for (long u = 1; u < N; ++u)
        if (std::gcd(u, N) == 1) units.push_back(u);
    std::set<std::pair<long, long>> reps;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b) {
            if (std::gcd(std::gcd(a, b), N) != 1) continue;
            std::pair<long, long> best{N, N};
            for (long u : units) best = std::min(best, {a * u % N, b * u % N});
            reps.insert(best);
        }
    return static_cast<long>(reps.size());
}

}  // namespace oracle

#include "deltacurve/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace deltacurve {

namespace {

void check_level(long level, long ceiling) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    if (level > ceiling)
        throw std::invalid_argument("level " + std::to_string(level) +
                                    " exceeds ceiling " + std::to_string(ceiling));
}

}  // namespace

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<long> prime_divisors(long n) {
    if (n < 1) throw std::invalid_argument("prime_divisors: n must be positive");
    std::vector<long> ps;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

UnitGroup UnitGroup::of(long level, long ceiling) {
    check_level(level, ceiling);
    UnitGroup g;
    g.level = level;
    if (level <= 2) {
        g.residues = {1};
        return g;
    }
    for (long r = 1; r < level; ++r)
        if (std::gcd(r, level) == 1) g.residues.push_back(r);
    return g;
}

bool SubgroupDelta::contains(long residue) const {
    return std::binary_search(residues.begin(), residues.end(), residue);
}

bool SubgroupDelta::is_trivial() const {
    return order() == (level > 2 ? 2 : 1);
}

bool SubgroupDelta::is_full() const {
    return order() == (level <= 2 ? 1 : euler_phi(level));
}

bool SubgroupDelta::operator<(const SubgroupDelta& o) const {
    if (level != o.level) return level < o.level;
    if (order() != o.order()) return order() < o.order();
    return residues < o.residues;
}

void SubgroupDelta::validate() const {
    if (level < 1) throw std::invalid_argument("subgroup: level must be positive");
    if (residues.empty()) throw std::invalid_argument("subgroup: empty residue list");
    if (!std::is_sorted(residues.begin(), residues.end()) ||
        std::adjacent_find(residues.begin(), residues.end()) != residues.end())
        throw std::invalid_argument("subgroup: residues not strictly increasing");
    if (level <= 2) {
        if (residues != std::vector<long>{1})
            throw std::invalid_argument("subgroup: for N <= 2 the group is {1}");
        return;
    }
    for (long r : residues) {
        if (r < 1 || r >= level || std::gcd(r, level) != 1)
            throw std::invalid_argument("subgroup: residue " + std::to_string(r) +
                                        " not a unit mod " + std::to_string(level));
    }
    if (!contains(1) || !contains(level - 1))
        throw std::invalid_argument("subgroup: must contain +-1");
    for (long a : residues)
        for (long b : residues)
            if (!contains((a * b) % level))
                throw std::invalid_argument("subgroup: not closed under multiplication");
    if (euler_phi(level) % order() != 0)
        throw std::invalid_argument("subgroup: order does not divide phi(N)");
}

SubgroupDelta SubgroupDelta::from_residues(long level, std::vector<long> residues) {
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    SubgroupDelta d;
    d.level = level;
    d.residues = std::move(residues);
    d.validate();
    return d;
}

SubgroupDelta closure(long level, std::span<const long> generators, long ceiling) {
    check_level(level, ceiling);
    SubgroupDelta d;
    d.level = level;
    if (level <= 2) {
        for (long g : generators)
            if (level == 2 && g % 2 == 0)
                throw std::invalid_argument("closure: generator " + std::to_string(g) +
                                            " not coprime to 2");
        d.residues = {1};
        return d;
    }
    std::vector<std::uint8_t> seen(level, 0);
    std::vector<long> elems;
    const auto add = [&](long r) {
        if (!seen[r]) {
            seen[r] = 1;
            elems.push_back(r);
        }
    };
    add(1);
    add(level - 1);
    for (long g : generators) {
        const long r = ((g % level) + level) % level;
        if (std::gcd(r, level) != 1)
            throw std::invalid_argument("closure: generator " + std::to_string(g) +
                                        " not coprime to " + std::to_string(level));
        add(r);
    }
    // Worklist closure: each appended element is multiplied against
    // everything before it exactly once. Inverses come for free in a finite
    // group.
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) add(elems[i] * elems[j] % level);
    d.residues.assign(elems.begin(), elems.end());
    std::sort(d.residues.begin(), d.residues.end());
    return d;
}

std::vector<SubgroupDelta> enumerate_subgroups(long level, long ceiling) {
    check_level(level, ceiling);
    const UnitGroup units = UnitGroup::of(level, ceiling);
    const SubgroupDelta base = closure(level, {}, ceiling);
    std::set<SubgroupDelta> found = {base};
    std::vector<SubgroupDelta> frontier = {base};
    while (!frontier.empty()) {
        std::vector<SubgroupDelta> next;
        for (const SubgroupDelta& s : frontier) {
            for (long u : units.residues) {
                if (s.contains(u)) continue;
                std::vector<long> gens = s.residues;
                gens.push_back(u);
                SubgroupDelta t = closure(level, gens, ceiling);
                if (found.insert(t).second) next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

PiImage project_pi_d(const SubgroupDelta& delta, long d) {
    if (d < 1 || delta.level % d != 0)
        throw std::invalid_argument("project_pi_d: " + std::to_string(d) +
                                    " does not divide " + std::to_string(delta.level));
    const long q = delta.level / d;
    const long m = d / std::gcd(d, q) * q;  // lcm(d, N/d)
    PiImage img;
    img.modulus = m;
    if (m <= 2) {
        img.residues = {1};
        return img;
    }
    std::set<long> reduced;
    for (long r : delta.residues) reduced.insert(r % m);
    img.residues.assign(reduced.begin(), reduced.end());
    return img;
}

}  // namespace deltacurve

#pragma once

#include <span>
#include <vector>

#include "deltacurve/numbers.hpp"

namespace deltacurve {

// Levels beyond this are rejected rather than optimized for. The CLI honors
// DELTACURVE_MAX_LEVEL as an override.
inline constexpr long kDefaultLevelCeiling = 10000;

long euler_phi(long n);
std::vector<long> divisors(long n);
std::vector<long> prime_divisors(long n);

/// The unit group (Z/NZ)^*. For N <= 2 it is the trivial group {1}.
struct UnitGroup {
    long level = 1;
    std::vector<long> residues;

    long order() const { return static_cast<long>(residues.size()); }
    static UnitGroup of(long level, long ceiling = kDefaultLevelCeiling);
};

/// A subgroup +-1 <= Delta <= (Z/NZ)^*, stored as the full sorted residue
/// list. Canonical representation: equality is element-wise equality.
struct SubgroupDelta {
    long level = 1;
    std::vector<long> residues = {1};

    long order() const { return static_cast<long>(residues.size()); }
    bool contains(long residue) const;
    bool is_trivial() const;  // Delta == closure({}) == {+-1}
    bool is_full() const;     // Delta == (Z/NZ)^*

    // Builds from an explicit residue list and checks every invariant
    // (coprimality, +-1 membership, closure, order | phi(N)).
    static SubgroupDelta from_residues(long level, std::vector<long> residues);
    void validate() const;

    bool operator==(const SubgroupDelta&) const = default;
    bool operator<(const SubgroupDelta& o) const;
};

/// Smallest subgroup containing the generators together with +-1.
/// Non-coprime generators are rejected with the offending residue.
SubgroupDelta closure(long level, std::span<const long> generators,
                      long ceiling = kDefaultLevelCeiling);

/// Every Delta with +-1 <= Delta <= (Z/NZ)^*, deduplicated, sorted by
/// (order, residues). Includes the two trivial extremes.
std::vector<SubgroupDelta> enumerate_subgroups(long level,
                                               long ceiling = kDefaultLevelCeiling);

/// Image of Delta under reduction mod lcm(d, N/d). For lcm <= 2 the image is
/// the trivial group of size 1.
struct PiImage {
    long modulus = 1;
    std::vector<long> residues = {1};
    long size() const { return static_cast<long>(residues.size()); }
};

PiImage project_pi_d(const SubgroupDelta& delta, long d);

}  // namespace deltacurve

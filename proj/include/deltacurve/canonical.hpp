#pragma once

#include <optional>
#include <span>
#include <vector>

#include "deltacurve/modcurve.hpp"
#include "deltacurve/qlinalg.hpp"

namespace deltacurve {

/// certify: precision meets the Sturm-style threshold for the degree being
/// tested, so vanishing to precision proves vanishing. probe: any precision
/// >= 2; results are heuristic (truncation can produce spurious relations).
enum class BasisMode { certify, probe };

/// A basis f_1..f_g of weight-2 cusp forms for (N, Delta), the coordinates of
/// the canonical map P -> (f_1(P) : ... : f_g(P)).
struct CanonicalBasis {
    long level = 1;
    SubgroupDelta delta;
    std::vector<QSeries> forms;
    BasisMode mode = BasisMode::probe;
    Int mu;  // cached index, drives the certify thresholds

    long genus() const { return static_cast<long>(forms.size()); }
    long precision() const;  // min over the forms
};

/// Validates: form count equals the computed genus (>= 3), every a_0 = 0.
CanonicalBasis make_canonical_basis(long level, SubgroupDelta delta,
                                    std::vector<QSeries> forms, BasisMode mode);

/// Least precision that certifies vanishing for products of the given degree
/// (weight 2*degree on a group of index mu): ceil(degree*mu/6) + 1.
long sturm_precision(const Int& mu, int degree);

enum class HyperellipticVerdict { hyperelliptic, not_hyperelliptic, inconsistent };
const char* to_string(HyperellipticVerdict v);

/// Relations among the g(g+1)/2 products f_i f_j (i <= j).
RelationBasis quadratic_relations(const CanonicalBasis& basis);

/// r2 == (g-1)(g-2)/2 -> hyperelliptic; r2 == (g-2)(g-3)/2 -> not; anything
/// else is inconsistent (insufficient precision or an invalid basis).
HyperellipticVerdict hyperelliptic_test(long genus, long r2);

enum class PetriVerdict { not_trigonal, trigonal_or_plane_quintic, indeterminate };
const char* to_string(PetriVerdict v);

struct PetriReport {
    long genus = 0;
    long r2 = 0;
    Int r3_expected;                  // (g-3)(g^2+6g-10)/6
    std::optional<long> r3_observed;  // from f_i f_j f_k products, when computed
    long dim_L_prime = 0;             // rank of span{x_i Q_j}
    Int cubic_generators;             // r3_expected - dim L'
    PetriVerdict verdict = PetriVerdict::indeterminate;
    bool plane_quintic_possible = false;  // only flagged at g == 6
    bool certified = false;
};

/// Requires g >= 5 (smaller genera are settled by the genus rule) and a
/// quadric count consistent with non-hyperelliptic; otherwise the verdict is
/// indeterminate. dim L' is pure polynomial algebra over the quadrics, so it
/// is certify-grade as soon as the quadrics are.
PetriReport petri_test(const CanonicalBasis& basis);

/// Same count starting from an explicit quadric list (coefficient vectors
/// over the degree-2 monomial order).
PetriReport petri_from_quadrics(long genus,
                                const std::vector<std::vector<Rat>>& quadrics,
                                bool certified);

/// True iff substituting the forms into the polynomial gives the zero series
/// to the basis precision.
bool verify_relation(const CanonicalBasis& basis, std::span<const Rat> coefficients,
                     const std::vector<Monomial>& monomial_order);

/// Reference quadric generators bundled for (30, {+-1,+-11}) and
/// (32, {+-1,+-15}); nullopt for any other curve.
std::optional<std::vector<std::vector<Int>>> bundled_quadrics(long level,
                                                              const SubgroupDelta& delta);

}  // namespace deltacurve

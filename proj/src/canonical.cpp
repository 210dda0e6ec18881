#include "deltacurve/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "deltacurve/embedded_data.hpp"

namespace deltacurve {

long CanonicalBasis::precision() const {
    long p = forms.empty() ? 0 : forms[0].precision();
    for (const QSeries& f : forms) p = std::min(p, f.precision());
    return p;
}

CanonicalBasis make_canonical_basis(long level, SubgroupDelta delta,
                                    std::vector<QSeries> forms, BasisMode mode) {
    delta.validate();
    if (delta.level != level)
        throw std::invalid_argument("canonical basis: level/subgroup mismatch");
    const CurveInvariants inv = curve_invariants(level, delta);
    if (Int(static_cast<long>(forms.size())) != inv.genus)
        throw std::invalid_argument("canonical basis: " + std::to_string(forms.size()) +
                                    " forms but genus is " + to_string(inv.genus));
    if (forms.size() < 3)
        throw std::invalid_argument("canonical basis: needs genus >= 3");
    for (const QSeries& f : forms)
        if (f.coeff(0) != 0)
            throw std::invalid_argument("canonical basis: nonzero constant term");
    CanonicalBasis b;
    b.level = level;
    b.delta = std::move(delta);
    b.forms = std::move(forms);
    b.mode = mode;
    b.mu = inv.mu;
    return b;
}

long sturm_precision(const Int& mu, int degree) {
    if (degree != 2 && degree != 3)
        throw std::invalid_argument("sturm_precision: degree must be 2 or 3");
    // A weight-k form on index mu vanishing past k*mu/12 is zero; k = 2*degree.
    Int t;
    mpz_cdiv_q_ui(t.get_mpz_t(), Int(mu * degree).get_mpz_t(), 6);
    return to_long(t) + 1;
}

const char* to_string(HyperellipticVerdict v) {
    switch (v) {
        case HyperellipticVerdict::hyperelliptic: return "hyperelliptic";
        case HyperellipticVerdict::not_hyperelliptic: return "not_hyperelliptic";
        case HyperellipticVerdict::inconsistent: return "inconsistent";
    }
    return "?";
}

const char* to_string(PetriVerdict v) {
    switch (v) {
        case PetriVerdict::not_trigonal: return "not_trigonal";
        case PetriVerdict::trigonal_or_plane_quintic: return "trigonal_or_plane_quintic";
        case PetriVerdict::indeterminate: return "indeterminate";
    }
    return "?";
}

RelationBasis quadratic_relations(const CanonicalBasis& basis) {
    const long p = basis.precision();
    if (p < 2) throw std::invalid_argument("quadratic_relations: precision below 2");
    if (basis.mode == BasisMode::certify) {
        const long need = sturm_precision(basis.mu, 2);
        if (p < need)
            throw std::invalid_argument("quadratic_relations: certify mode needs precision >= " +
                                        std::to_string(need) + ", have " + std::to_string(p));
    }
    const int g = static_cast<int>(basis.genus());
    std::vector<Monomial> order = degree2_monomials(g);
    std::vector<QSeries> products;
    products.reserve(order.size());
    for (const Monomial& m : order) products.push_back(basis.forms[m[0]] * basis.forms[m[1]]);
    return relation_kernel(std::move(products), std::move(order));
}

HyperellipticVerdict hyperelliptic_test(long genus, long r2) {
    if (genus < 3) throw std::invalid_argument("hyperelliptic_test: genus must be >= 3");
    if (r2 < 0) throw std::invalid_argument("hyperelliptic_test: negative dimension");
    if (r2 == (genus - 1) * (genus - 2) / 2) return HyperellipticVerdict::hyperelliptic;
    if (r2 == (genus - 2) * (genus - 3) / 2) return HyperellipticVerdict::not_hyperelliptic;
    return HyperellipticVerdict::inconsistent;
}

namespace {

Int r3_linear_relation_count(long g) {
    // (g-3)(g^2+6g-10)/6 linear relations among the f_i f_j f_k.
    Int n = Int(g - 3) * (Int(g) * g + 6 * g - 10);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), Int(6).get_mpz_t());
    if (r != 0) throw std::logic_error("r3_expected not integral");
    return q;
}

long dim_span_xiQj(long g, const std::vector<std::vector<Rat>>& quadrics) {
    const std::vector<Monomial> m2 = degree2_monomials(static_cast<int>(g));
    const std::vector<Monomial> m3 = degree3_monomials(static_cast<int>(g));
    std::map<Monomial, long> index;
    for (long i = 0; i < static_cast<long>(m3.size()); ++i) index[m3[i]] = i;

    RationalMatrix m(g * static_cast<long>(quadrics.size()), static_cast<long>(m3.size()));
    long row = 0;
    for (const auto& q : quadrics) {
        if (q.size() != m2.size())
            throw std::invalid_argument("quadric vector has wrong length");
        for (int v = 0; v < g; ++v, ++row) {
            for (std::size_t j = 0; j < m2.size(); ++j) {
                if (q[j] == 0) continue;
                Monomial t = {v, m2[j][0], m2[j][1]};
                std::sort(t.begin(), t.end());
                m.at(row, index.at(t)) += q[j];
            }
        }
    }
    return kernel(m).rank;
}

PetriReport petri_counts(long g, const std::vector<std::vector<Rat>>& quadrics,
                         bool certified) {
    PetriReport r;
    r.genus = g;
    r.r2 = static_cast<long>(quadrics.size());
    r.r3_expected = r3_linear_relation_count(g);
    r.dim_L_prime = dim_span_xiQj(g, quadrics);
    r.cubic_generators = r.r3_expected - r.dim_L_prime;
    if (r.cubic_generators < 0)
        throw std::logic_error("negative cubic generator count");
    r.verdict = (r.cubic_generators == 0) ? PetriVerdict::not_trigonal
                                          : PetriVerdict::trigonal_or_plane_quintic;
    r.plane_quintic_possible = (r.cubic_generators > 0 && g == 6);
    r.certified = certified;
    return r;
}

}  // namespace

PetriReport petri_test(const CanonicalBasis& basis) {
    const long g = basis.genus();
    if (g < 5)
        throw std::invalid_argument("petri_test: genus " + std::to_string(g) +
                                    " is settled by the genus rule, needs g >= 5");
    const RelationBasis rb = quadratic_relations(basis);
    const long r2 = rb.dimension();
    if (hyperelliptic_test(g, r2) != HyperellipticVerdict::not_hyperelliptic) {
        // Quadric space does not look like a non-hyperelliptic canonical
        // curve (typically: truncation noise in probe mode). Report it
        // rather than deriving counts from unusable quadrics.
        PetriReport r;
        r.genus = g;
        r.r2 = r2;
        r.r3_expected = r3_linear_relation_count(g);
        r.cubic_generators = 0;
        r.verdict = PetriVerdict::indeterminate;
        r.certified = false;
        return r;
    }
    PetriReport r = petri_counts(g, rb.vectors, basis.mode == BasisMode::certify);

    // Cross-check against the observed degree-3 relation space when the
    // precision supports it (always reported in probe mode, as a heuristic).
    const bool compute_r3 = basis.mode == BasisMode::probe ||
                            basis.precision() >= sturm_precision(basis.mu, 3);
    if (compute_r3) {
        std::vector<Monomial> order = degree3_monomials(static_cast<int>(g));
        std::vector<QSeries> products;
        products.reserve(order.size());
        for (const Monomial& m : order)
            products.push_back(basis.forms[m[0]] * basis.forms[m[1]] * basis.forms[m[2]]);
        r.r3_observed = relation_kernel(std::move(products), std::move(order)).dimension();
        if (basis.mode == BasisMode::certify && Int(*r.r3_observed) != r.r3_expected)
            throw std::logic_error("certified degree-3 relation count disagrees with theory");
    }
    return r;
}

PetriReport petri_from_quadrics(long genus, const std::vector<std::vector<Rat>>& quadrics,
                                bool certified) {
    if (genus < 5) throw std::invalid_argument("petri_from_quadrics: needs g >= 5");
    // Reduce to an independent spanning set first.
    RationalMatrix m(static_cast<long>(quadrics.size()),
                     static_cast<long>(degree2_monomials(static_cast<int>(genus)).size()));
    for (long r = 0; r < m.rows; ++r) {
        if (static_cast<long>(quadrics[r].size()) != m.cols)
            throw std::invalid_argument("petri_from_quadrics: quadric vector length mismatch");
        for (long c = 0; c < m.cols; ++c) m.at(r, c) = quadrics[r][c];
    }
    std::vector<std::vector<Rat>> rows(quadrics.begin(), quadrics.end());
    // rank via the kernel contract: dim + rank = cols
    const long rank = kernel(m).rank;
    if (rank != static_cast<long>(quadrics.size()))
        throw std::invalid_argument("petri_from_quadrics: quadrics are linearly dependent");
    return petri_counts(genus, rows, certified);
}

bool verify_relation(const CanonicalBasis& basis, std::span<const Rat> coefficients,
                     const std::vector<Monomial>& monomial_order) {
    if (coefficients.size() != monomial_order.size())
        throw std::invalid_argument("verify_relation: coefficient/monomial size mismatch");
    QSeries acc = QSeries::zero(basis.precision());
    for (std::size_t i = 0; i < monomial_order.size(); ++i) {
        if (coefficients[i] == 0) continue;
        const Monomial& m = monomial_order[i];
        for (int v : m)
            if (v < 0 || v >= basis.genus())
                throw std::invalid_argument("verify_relation: monomial variable out of range");
        QSeries term = basis.forms[m[0]];
        for (std::size_t j = 1; j < m.size(); ++j) term = term * basis.forms[m[j]];
        acc = acc + term.scaled(coefficients[i]);
    }
    return acc.is_zero();
}

namespace {

struct QuadricFixture {
    long level;
    SubgroupDelta delta;
    std::vector<std::vector<Int>> quadrics;
};

QuadricFixture parse_quadric_fixture(std::string_view text, std::uint64_t checksum,
                                     const char* name) {
    if (fnv1a64(text) != checksum)
        throw std::logic_error(std::string("embedded quadric data corrupted: ") + name);
    long level = 0;
    std::vector<long> residues;
    long genus = 0;
    std::vector<std::vector<Int>> quadrics;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "level") {
            ls >> level;
        } else if (key == "delta") {
            long r;
            while (ls >> r) residues.push_back(r);
        } else if (key == "genus") {
            ls >> genus;
        } else if (key == "quadric") {
            std::vector<Int> q;
            std::string tok;
            while (ls >> tok) q.push_back(parse_integer(tok));
            quadrics.push_back(std::move(q));
        } else {
            throw std::logic_error(std::string("bad quadric fixture line: ") + line);
        }
    }
    QuadricFixture f;
    f.level = level;
    f.delta = SubgroupDelta::from_residues(level, residues);
    const std::size_t want = degree2_monomials(static_cast<int>(genus)).size();
    for (const auto& q : quadrics)
        if (q.size() != want) throw std::logic_error("quadric fixture row length mismatch");
    f.quadrics = std::move(quadrics);
    return f;
}

const std::vector<QuadricFixture>& quadric_fixtures() {
    static const std::vector<QuadricFixture> fixtures = {
        parse_quadric_fixture(embedded::quadrics_30_d1(), 0x661fbe112c8a650aULL, "30-d1"),
        parse_quadric_fixture(embedded::quadrics_32_d1(), 0x9d0d9bfbffba6f9bULL, "32-d1"),
    };
    return fixtures;
}

}  // namespace

std::optional<std::vector<std::vector<Int>>> bundled_quadrics(long level,
                                                              const SubgroupDelta& delta) {
    for (const QuadricFixture& f : quadric_fixtures())
        if (f.level == level && f.delta == delta) return f.quadrics;
    return std::nullopt;
}

}  // namespace deltacurve

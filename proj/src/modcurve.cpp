#include "deltacurve/modcurve.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace deltacurve {

namespace {

void check_match(long level, const SubgroupDelta& delta, const char* where) {
    if (delta.level != level)
        throw std::invalid_argument(std::string(where) + ": level " + std::to_string(level) +
                                    " does not match subgroup level " +
                                    std::to_string(delta.level));
}

Int exact_quotient(const Int& a, const Int& b, const char* what) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error(std::string("non-integral ") + what);
    return q;
}

}  // namespace

Int index_mu(long level, const SubgroupDelta& delta) {
    check_match(level, delta, "index_mu");
    Int mu = level;
    for (long p : prime_divisors(level)) mu = mu / p * (p + 1);
    mu *= euler_phi(level);
    return exact_quotient(mu, Int(delta.order()), "index");
}

Int nu2(long level, const SubgroupDelta& delta) {
    check_match(level, delta, "nu2");
    long count = 0;
    for (long b : delta.residues)
        if ((b * b + 1) % level == 0) ++count;
    return exact_quotient(Int(count) * euler_phi(level), Int(delta.order()), "nu2");
}

Int nu3(long level, const SubgroupDelta& delta) {
    check_match(level, delta, "nu3");
    long count = 0;
    for (long b : delta.residues)
        if ((b * b - b + 1) % level == 0) ++count;
    return exact_quotient(Int(count) * euler_phi(level), Int(delta.order()), "nu3");
}

std::vector<CuspOrbitData> cusp_orbits(long level, const SubgroupDelta& delta) {
    check_match(level, delta, "cusp_orbits");
    std::vector<CuspOrbitData> out;
    for (long d : divisors(level)) {
        const PiImage img = project_pi_d(delta, d);
        CuspOrbitData c;
        c.divisor = d;
        c.orbit_count = exact_quotient(Int(euler_phi(d)) * euler_phi(level / d),
                                       Int(img.size()), "cusp orbit count");
        c.e_total = std::gcd(level / d, d);
        c.e_p1 = exact_quotient(Int(delta.order()), Int(img.size()), "e_p1");
        c.e_p2 = exact_quotient(c.e_total * img.size(), Int(delta.order()), "e_p2");
        if (c.e_p1 * c.e_p2 != c.e_total || c.e_total % c.e_p2 != 0)
            throw std::logic_error("cusp ramification factorization failed");
        out.push_back(std::move(c));
    }
    return out;
}

Int nu_inf(long level, const SubgroupDelta& delta) {
    Int total = 0;
    for (const CuspOrbitData& c : cusp_orbits(level, delta)) total += c.orbit_count;
    return total;
}

CurveInvariants curve_invariants(long level, const SubgroupDelta& delta) {
    check_match(level, delta, "curve_invariants");
    CurveInvariants inv;
    inv.level = level;
    inv.delta = delta;
    inv.mu = index_mu(level, delta);
    inv.nu2 = nu2(level, delta);
    inv.nu3 = nu3(level, delta);
    inv.nu_inf = nu_inf(level, delta);
    // g = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2, evaluated exactly.
    Rat g = 1 + Rat(inv.mu) / 12 - Rat(inv.nu2) / 4 - Rat(inv.nu3) / 3 - Rat(inv.nu_inf) / 2;
    g.canonicalize();
    if (g.get_den() != 1 || g < 0)
        throw std::logic_error("genus formula produced " + to_string(g) + " for level " +
                               std::to_string(level));
    inv.genus = g.get_num();
    return inv;
}

long genus_of(long level, const SubgroupDelta& delta) {
    return to_long(curve_invariants(level, delta).genus);
}

}  // namespace deltacurve

#include "deltacurve/numbers.hpp"

namespace deltacurve {

Int parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer token");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer token: " + std::string(text));
    return v;
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational token");
    Rat v;
    if (mpq_set_str(v.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational token: " + std::string(text));
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    v.canonicalize();
    return v;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace deltacurve

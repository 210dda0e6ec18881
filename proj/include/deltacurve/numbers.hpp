#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deltacurve {

// Exact arithmetic everywhere; no floating point in any computation path.
using Int = mpz_class;
using Rat = mpq_class;

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return v.get_si();
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Canonical "p/q" (or plain "p" when the denominator is 1).
inline std::string to_string(const Rat& v) { return v.get_str(); }

Rat parse_rational(std::string_view text);
Int parse_integer(std::string_view text);

// FNV-1a, used to pin the embedded data files.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace deltacurve

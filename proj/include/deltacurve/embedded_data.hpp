#pragma once

#include <cstddef>
#include <string_view>

// Byte-for-byte copies of the files under data/, generated at build time.
// The loaders pin them with FNV-1a checksums.
namespace deltacurve::embedded {

std::string_view table1_tsv();
std::string_view table2_tsv();
std::string_view table3_tsv();
std::string_view forms_21_d1();
std::string_view forms_30_d1();
std::string_view quadrics_30_d1();
std::string_view quadrics_32_d1();

}  // namespace deltacurve::embedded

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "deltacurve/canonical.hpp"

namespace deltacurve {

enum class FormsErrorKind {
    io,                    // file not readable
    missing_newline,       // file does not end with '\n'
    malformed_line,        // unparseable or misformatted line
    header_order,          // header keys out of the fixed order
    duplicate_header,      // header key repeated
    bad_value,             // token does not parse / residues not a subgroup
    genus_row_mismatch,    // declared genus != number of form rows
    curve_genus_mismatch,  // declared genus != computed genus of (N, Delta)
    non_cusp_form,         // a_0 != 0
    empty_basis,           // no form rows
};

const char* to_string(FormsErrorKind k);

struct FormsError : std::runtime_error {
    FormsErrorKind kind;
    long line;  // 1-based; 0 when not tied to a line
    FormsError(FormsErrorKind kind, long line, const std::string& message);
};

/// One cusp-form basis file. header_comments holds the leading '#' lines
/// verbatim (the convention for recording provenance of imported tables).
struct FormsFile {
    long level = 1;
    SubgroupDelta delta;
    long genus = 0;
    long precision = 0;
    std::vector<QSeries> forms;
    std::vector<std::string> header_comments;

    bool operator==(const FormsFile&) const = default;
};

/// Strict line-oriented format: optional '#' comments, then the headers
/// `level N`, `delta r1 r2 ...`, `genus g`, `precision P` in that order, then
/// exactly g lines `form a0 a1 ... aP` (integers or p/q), single spaces,
/// trailing newline required. The declared genus is cross-checked against the
/// computed genus of (N, Delta).
FormsFile parse_forms(std::string_view text);

/// Canonical bytes; parse(serialize(f)) == f on the data model.
std::string serialize_forms(const FormsFile& file);

FormsFile load_forms_file(const std::string& path);

/// The bundled fixtures: (21, {+-1,+-8}, 3 forms, P=10) and
/// (30, {+-1,+-11}, 5 forms, P=10), truncated where the published expansions
/// stop. Nothing here reaches certify precision.
std::vector<FormsFile> bundled_fixtures();

CanonicalBasis to_canonical_basis(const FormsFile& file, BasisMode mode);

}  // namespace deltacurve

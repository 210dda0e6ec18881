#include "deltacurve/formsio.hpp"

#include <fstream>
#include <sstream>

#include "deltacurve/embedded_data.hpp"

namespace deltacurve {

const char* to_string(FormsErrorKind k) {
    switch (k) {
        case FormsErrorKind::io: return "io";
        case FormsErrorKind::missing_newline: return "missing_newline";
        case FormsErrorKind::malformed_line: return "malformed_line";
        case FormsErrorKind::header_order: return "header_order";
        case FormsErrorKind::duplicate_header: return "duplicate_header";
        case FormsErrorKind::bad_value: return "bad_value";
        case FormsErrorKind::genus_row_mismatch: return "genus_row_mismatch";
        case FormsErrorKind::curve_genus_mismatch: return "curve_genus_mismatch";
        case FormsErrorKind::non_cusp_form: return "non_cusp_form";
        case FormsErrorKind::empty_basis: return "empty_basis";
    }
    return "?";
}

FormsError::FormsError(FormsErrorKind kind, long line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      kind(kind),
      line(line) {}

namespace {

std::vector<std::string> split_tokens(const std::string& line, long lineno) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : line) {
        if (ch == ' ') {
            if (cur.empty())
                throw FormsError(FormsErrorKind::malformed_line, lineno,
                                 "extra space in: " + line);
            toks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cur.empty())
        throw FormsError(FormsErrorKind::malformed_line, lineno, "trailing space in: " + line);
    toks.push_back(cur);
    return toks;
}

long parse_long_token(const std::string& tok, long lineno, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormsError(FormsErrorKind::bad_value, lineno,
                         std::string("bad ") + what + " token: " + tok);
    }
}

}  // namespace

FormsFile parse_forms(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        throw FormsError(FormsErrorKind::missing_newline, 0,
                         "file must end with a newline");

    static const char* kHeaderKeys[] = {"level", "delta", "genus", "precision"};
    FormsFile out;
    int next_header = 0;
    long forms_seen = 0;
    bool before_headers = true;

    long lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;

        if (!line.empty() && line[0] == '#') {
            if (before_headers) out.header_comments.push_back(line);
            continue;
        }
        if (line.empty())
            throw FormsError(FormsErrorKind::malformed_line, lineno, "blank line");
        before_headers = false;

        const std::vector<std::string> toks = split_tokens(line, lineno);
        const std::string& key = toks[0];

        if (key == "form") {
            if (next_header < 4)
                throw FormsError(FormsErrorKind::header_order, lineno,
                                 "form row before headers are complete");
            if (forms_seen == out.genus)
                throw FormsError(FormsErrorKind::genus_row_mismatch, lineno,
                                 "more form rows than the declared genus " +
                                     std::to_string(out.genus));
            if (static_cast<long>(toks.size()) != out.precision + 2)
                throw FormsError(FormsErrorKind::malformed_line, lineno,
                                 "expected " + std::to_string(out.precision + 1) +
                                     " coefficients");
            std::vector<Rat> coeffs;
            coeffs.reserve(out.precision + 1);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                try {
                    coeffs.push_back(parse_rational(toks[i]));
                } catch (const std::invalid_argument& e) {
                    throw FormsError(FormsErrorKind::bad_value, lineno, e.what());
                }
            }
            if (coeffs[0] != 0)
                throw FormsError(FormsErrorKind::non_cusp_form, lineno,
                                 "constant term must be 0");
            out.forms.emplace_back(std::move(coeffs));
            ++forms_seen;
            continue;
        }

        // Header line.
        int key_index = -1;
        for (int i = 0; i < 4; ++i)
            if (key == kHeaderKeys[i]) key_index = i;
        if (key_index < 0)
            throw FormsError(FormsErrorKind::malformed_line, lineno, "unknown key: " + key);
        if (key_index < next_header)
            throw FormsError(FormsErrorKind::duplicate_header, lineno,
                             "header repeated: " + key);
        if (key_index > next_header)
            throw FormsError(FormsErrorKind::header_order, lineno,
                             std::string("expected header '") + kHeaderKeys[next_header] +
                                 "' before '" + key + "'");
        if (forms_seen > 0)
            throw FormsError(FormsErrorKind::header_order, lineno,
                             "header after form rows: " + key);

        switch (key_index) {
            case 0:
                if (toks.size() != 2)
                    throw FormsError(FormsErrorKind::malformed_line, lineno,
                                     "level takes one value");
                out.level = parse_long_token(toks[1], lineno, "level");
                break;
            case 1: {
                std::vector<long> residues;
                for (std::size_t i = 1; i < toks.size(); ++i)
                    residues.push_back(parse_long_token(toks[i], lineno, "residue"));
                try {
                    out.delta = SubgroupDelta::from_residues(out.level, residues);
                } catch (const std::invalid_argument& e) {
                    throw FormsError(FormsErrorKind::bad_value, lineno, e.what());
                }
                break;
            }
            case 2:
                if (toks.size() != 2)
                    throw FormsError(FormsErrorKind::malformed_line, lineno,
                                     "genus takes one value");
                out.genus = parse_long_token(toks[1], lineno, "genus");
                break;
            case 3:
                if (toks.size() != 2)
                    throw FormsError(FormsErrorKind::malformed_line, lineno,
                                     "precision takes one value");
                out.precision = parse_long_token(toks[1], lineno, "precision");
                if (out.precision < 0)
                    throw FormsError(FormsErrorKind::bad_value, lineno, "negative precision");
                break;
        }
        ++next_header;
    }

    if (next_header < 4)
        throw FormsError(FormsErrorKind::header_order, lineno,
                         std::string("missing header: ") + kHeaderKeys[next_header]);
    if (out.genus <= 0 || out.forms.empty())
        throw FormsError(FormsErrorKind::empty_basis, lineno, "no cusp forms");
    if (forms_seen != out.genus)
        throw FormsError(FormsErrorKind::genus_row_mismatch, lineno,
                         std::to_string(forms_seen) + " form rows but declared genus " +
                             std::to_string(out.genus));
    const long computed = genus_of(out.level, out.delta);
    if (computed != out.genus)
        throw FormsError(FormsErrorKind::curve_genus_mismatch, 0,
                         "declared genus " + std::to_string(out.genus) +
                             " but the curve has genus " + std::to_string(computed));
    return out;
}

std::string serialize_forms(const FormsFile& file) {
    if (file.forms.empty())
        throw FormsError(FormsErrorKind::empty_basis, 0, "refusing to emit an empty basis");
    if (static_cast<long>(file.forms.size()) != file.genus)
        throw FormsError(FormsErrorKind::genus_row_mismatch, 0,
                         "form count does not match declared genus");
    std::string out;
    for (const std::string& c : file.header_comments) {
        if (c.empty() || c[0] != '#')
            throw FormsError(FormsErrorKind::malformed_line, 0,
                             "comment line must start with '#'");
        out += c;
        out += '\n';
    }
    out += "level " + std::to_string(file.level) + "\n";
    out += "delta";
    for (long r : file.delta.residues) out += " " + std::to_string(r);
    out += "\n";
    out += "genus " + std::to_string(file.genus) + "\n";
    out += "precision " + std::to_string(file.precision) + "\n";
    for (const QSeries& f : file.forms) {
        if (f.precision() != file.precision)
            throw FormsError(FormsErrorKind::malformed_line, 0,
                             "form precision differs from the declared precision");
        if (f.coeff(0) != 0)
            throw FormsError(FormsErrorKind::non_cusp_form, 0, "constant term must be 0");
        out += "form";
        for (const Rat& c : f.coeffs()) out += " " + to_string(c);
        out += "\n";
    }
    return out;
}

FormsFile load_forms_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormsError(FormsErrorKind::io, 0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_forms(buf.str());
}

std::vector<FormsFile> bundled_fixtures() {
    struct Blob {
        std::string_view text;
        std::uint64_t checksum;
        const char* name;
    };
    const Blob blobs[] = {
        {embedded::forms_21_d1(), 0xaee72f1ee5431d36ULL, "21-d1"},
        {embedded::forms_30_d1(), 0x2820b1ddfa90d8f5ULL, "30-d1"},
    };
    std::vector<FormsFile> out;
    for (const Blob& b : blobs) {
        if (fnv1a64(b.text) != b.checksum)
            throw std::logic_error(std::string("embedded forms fixture corrupted: ") + b.name);
        out.push_back(parse_forms(b.text));
    }
    return out;
}

CanonicalBasis to_canonical_basis(const FormsFile& file, BasisMode mode) {
    return make_canonical_basis(file.level, file.delta, file.forms, mode);
}

}  // namespace deltacurve

#include "deltacurve/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace deltacurve {

QSeries::QSeries(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("QSeries: needs at least a_0");
}

QSeries QSeries::zero(long precision) {
    if (precision < 0) throw std::invalid_argument("QSeries: negative precision");
    return QSeries(std::vector<Rat>(precision + 1));
}

const Rat& QSeries::coeff(long k) const {
    if (k < 0 || k > precision())
        throw std::out_of_range("QSeries: coefficient " + std::to_string(k) +
                                " beyond precision " + std::to_string(precision()));
    return coeffs_[k];
}

long QSeries::valuation() const {
    for (long k = 0; k <= precision(); ++k)
        if (coeffs_[k] != 0) return k;
    return precision() + 1;
}

bool QSeries::is_zero() const { return valuation() > precision(); }

QSeries QSeries::truncated(long precision) const {
    if (precision < 0 || precision > this->precision())
        throw std::invalid_argument("QSeries: cannot truncate to precision " +
                                    std::to_string(precision));
    return QSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

QSeries QSeries::scaled(const Rat& c) const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
    return QSeries(std::move(out));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const long p = std::min(a.precision(), b.precision());
    std::vector<Rat> out(p + 1);
    for (long k = 0; k <= p; ++k) out[k] = a.coeffs_[k] + b.coeffs_[k];
    return QSeries(std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const long p = std::min(a.precision(), b.precision());
    std::vector<Rat> out(p + 1);
    for (long k = 0; k <= p; ++k) out[k] = a.coeffs_[k] - b.coeffs_[k];
    return QSeries(std::move(out));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const long p = std::min(a.precision(), b.precision());
    std::vector<Rat> out(p + 1);
    for (long i = 0; i <= p; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; i + j <= p; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(std::move(out));
}

std::vector<Monomial> degree2_monomials(int variable_count) {
    std::vector<Monomial> out;
    for (int i = 0; i < variable_count; ++i)
        for (int j = i; j < variable_count; ++j) out.push_back({i, j});
    return out;
}

std::vector<Monomial> degree3_monomials(int variable_count) {
    std::vector<Monomial> out;
    for (int i = 0; i < variable_count; ++i)
        for (int j = i; j < variable_count; ++j)
            for (int k = j; k < variable_count; ++k) out.push_back({i, j, k});
    return out;
}

std::string monomial_name(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(m[i] + 1);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

namespace {

// Plain Gauss-Jordan over the rationals; used for the final normalization
// step and for canonicalizing kernel bases. Returns pivot columns.
std::vector<long> rational_rref(std::vector<std::vector<Rat>>& m) {
    std::vector<long> pivots;
    if (m.empty()) return pivots;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long sel = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[r]);
        const Rat pivot = m[r][c];
        for (long j = c; j < cols; ++j) m[r][j] /= pivot;
        for (long i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (long j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(pivots.size());
    return pivots;
}

}  // namespace

KernelBasis kernel(const RationalMatrix& m) {
    KernelBasis out;
    out.columns = m.cols;
    if (m.cols == 0) return out;

    // Row-wise denominator clearing, then fraction-free (Bareiss) forward
    // elimination: after step k every entry is a (k+1)-minor of the scaled
    // matrix, so the division by the previous pivot is exact.
    std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols));
    {
        std::vector<Rat> row(m.cols);
        for (long r = 0; r < m.rows; ++r) {
            Int den = 1;
            for (long c = 0; c < m.cols; ++c) {
                row[c] = m.at(r, c);
                row[c].canonicalize();  // two-argument mpq construction may skip this
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row[c].get_den().get_mpz_t());
            }
            for (long c = 0; c < m.cols; ++c)
                a[r][c] = row[c].get_num() * (den / row[c].get_den());
        }
    }

    std::vector<long> pivot_cols;
    Int prev = 1;
    long rank = 0;
    for (long c = 0; c < m.cols && rank < m.rows; ++c) {
        long sel = -1;
        for (long i = rank; i < m.rows; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        for (long i = rank + 1; i < m.rows; ++i) {
            for (long j = c + 1; j < m.cols; ++j) {
                Int t = a[i][j] * a[rank][c] - a[i][c] * a[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        pivot_cols.push_back(c);
        ++rank;
    }
    out.rank = rank;

    // Final normalization of the echelon rows.
    std::vector<std::vector<Rat>> rr(rank, std::vector<Rat>(m.cols));
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < m.cols; ++j) rr[i][j] = Rat(a[i][j]);
    rational_rref(rr);

    // Kernel basis from the free columns, then canonicalized to reduced
    // echelon form so the result is independent of construction order.
    std::vector<bool> is_pivot(m.cols, false);
    for (long c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (long f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols);
        v[f] = 1;
        for (long i = 0; i < rank; ++i) v[pivot_cols[i]] = -rr[i][f];
        basis.push_back(std::move(v));
    }
    rational_rref(basis);
    out.vectors = std::move(basis);
    return out;
}

std::vector<Int> cleared_vector(const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> out(v.size());
    Int content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content == 0) return out;  // zero vector
    int lead_sign = 0;
    for (const Int& x : out)
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    if (lead_sign < 0) content = -content;
    for (Int& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    return out;
}

std::vector<std::vector<Int>> RelationBasis::cleared() const {
    std::vector<std::vector<Int>> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(cleared_vector(v));
    return out;
}

RelationBasis relation_kernel(const std::vector<QSeries>& products,
                              std::vector<Monomial> monomial_order) {
    if (products.empty()) throw std::invalid_argument("relation_kernel: no products");
    if (products.size() != monomial_order.size())
        throw std::invalid_argument("relation_kernel: products/monomials size mismatch");
    long p = products[0].precision();
    for (const QSeries& s : products) p = std::min(p, s.precision());
    if (p < 1) throw std::invalid_argument("relation_kernel: common precision below 1");

    RationalMatrix m(p + 1, static_cast<long>(products.size()));
    for (long c = 0; c < m.cols; ++c)
        for (long r = 0; r <= p; ++r) m.at(r, c) = products[c].coeff(r);
    KernelBasis k = kernel(m);

    RelationBasis rb;
    rb.monomial_order = std::move(monomial_order);
    rb.vectors = std::move(k.vectors);
    rb.rank = k.rank;
    return rb;
}

}  // namespace deltacurve

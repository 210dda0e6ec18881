#pragma once

#include <vector>

#include "deltacurve/numbers.hpp"

namespace deltacurve {

/// Truncated q-expansion with exact rational coefficients a_0..a_P; the
/// series is known modulo q^{P+1}. Arithmetic never silently extends
/// precision: results carry the min of the operand precisions (the one-term
/// valuation slack available for cusp-form products is deliberately unused).
class QSeries {
  public:
    explicit QSeries(std::vector<Rat> coefficients);
    static QSeries zero(long precision);

    long precision() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // First exponent with a nonzero coefficient; precision()+1 if none seen.
    long valuation() const;
    bool is_zero() const;

    QSeries truncated(long precision) const;
    QSeries scaled(const Rat& c) const;

    friend QSeries operator+(const QSeries&, const QSeries&);
    friend QSeries operator-(const QSeries&, const QSeries&);
    friend QSeries operator*(const QSeries&, const QSeries&);  // Cauchy product

    bool operator==(const QSeries&) const = default;

  private:
    std::vector<Rat> coeffs_;
};

/// A monomial as the sorted list of variable indices (0-based), e.g.
/// {0,1} = x1*x2. Lists of monomials of one degree are in graded
/// lexicographic order with x1 > x2 > ...
using Monomial = std::vector<int>;

std::vector<Monomial> degree2_monomials(int variable_count);
std::vector<Monomial> degree3_monomials(int variable_count);
std::string monomial_name(const Monomial&);

struct RationalMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Rat> data;

    RationalMatrix() = default;
    RationalMatrix(long r, long c) : rows(r), cols(c), data(r * c) {}
    Rat& at(long r, long c) { return data[r * cols + c]; }
    const Rat& at(long r, long c) const { return data[r * cols + c]; }
};

/// Reduced-echelon basis of the right null space. dim + rank = cols, exactly.
struct KernelBasis {
    long columns = 0;
    long rank = 0;
    std::vector<std::vector<Rat>> vectors;  // reduced echelon rows, pivots 1

    long dimension() const { return static_cast<long>(vectors.size()); }
};

KernelBasis kernel(const RationalMatrix& m);

/// Kernel of the (P+1) x (#monomials) coefficient matrix whose columns are
/// the given series in monomial order; P is the common (minimum) precision.
struct RelationBasis {
    std::vector<Monomial> monomial_order;
    std::vector<std::vector<Rat>> vectors;  // reduced echelon rows, pivots 1
    long rank = 0;

    long dimension() const { return static_cast<long>(vectors.size()); }
    // Denominator-cleared, content 1, positive leading coefficient.
    std::vector<std::vector<Int>> cleared() const;
};

RelationBasis relation_kernel(const std::vector<QSeries>& products,
                              std::vector<Monomial> monomial_order);

// Denominator-clear one rational vector (content 1, positive lead).
std::vector<Int> cleared_vector(const std::vector<Rat>& v);

}  // namespace deltacurve

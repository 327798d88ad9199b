#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "meixner/meixner_poly.hpp"
#include "meixner/report.hpp"

namespace meixner {

// W(x) = (beta)_{|x|} prod_j c_j^{x_j} / x_j!
Rational weight(const MeixnerSpec& spec, const MultiIndex& x);

struct InnerProductResult {
    Rational value;          // exact partial sum over |x| <= truncation
    int truncation = 0;
    Rational tail_estimate;  // certified bound on the omitted tail, >= 0
    bool converged = false;  // tail_estimate < the requested tolerance
};

// sum_{x in N0^d} W(x) a(x) b(x), summed exactly over |x| <= X with X grown
// until a geometric majorant certifies the omitted tail below tolerance.
// The only approximation is the truncation, and it is certified: the true
// sum lies within tail_estimate of value. Requires beta > 0 and all c_i > 0
// with |c| < 1 (throws PreconditionViolated otherwise); throws NoConvergence
// when X reaches truncation_cap without certification.
InnerProductResult inner_product_polys(const MeixnerSpec& spec, const SparsePolynomial& a,
                                       const SparsePolynomial& b, const Rational& tolerance,
                                       int truncation_cap = 512);

InnerProductResult inner_product(const MeixnerSpec& spec, const MultiIndex& n,
                                 const MultiIndex& m, const Rational& tolerance,
                                 int truncation_cap = 512);

// Diagonal value c0^{-beta} n! / ((beta)_{|n|} c~^n), split into the rational
// factor and the power c0^{-beta}; exact is set when the power is rational
// (integer beta, or c0 a perfect power of the right order).
struct NormClosedForm {
    Rational rational_factor;
    Rational base;      // c0
    Rational exponent;  // -beta
    std::optional<Rational> exact;
};

NormClosedForm norm_closed_form(const MeixnerSpec& spec, const MultiIndex& n);

// base^exponent when it is exactly rational, nullopt otherwise.
std::optional<Rational> try_rational_power(const Rational& base, const Rational& exponent);

// Orthogonality of an explicitly supplied family {(n, Q_n)} under the weight:
// off-diagonal inner products certified below tolerance (scaled by the norm
// product when it is exactly representable), diagonals matched against the
// closed form to the given relative tolerance. Pairs run concurrently.
VerificationReport verify_orthogonality_polys(
    const MeixnerSpec& spec, const std::vector<std::pair<MultiIndex, SparsePolynomial>>& family,
    const Rational& tolerance, int truncation_cap = 512,
    const Rational& relative_tolerance = Rational(1, 100000000));

// Same, over the polynomials P_n for all |n| <= maxdeg.
VerificationReport verify_orthogonality(const MeixnerSpec& spec, int maxdeg,
                                        const Rational& tolerance, int truncation_cap = 512,
                                        const Rational& relative_tolerance = Rational(
                                            1, 100000000));

}  // namespace meixner

#pragma once

#include <string>
#include <vector>

#include "meixner/matrix.hpp"
#include "meixner/rational.hpp"

namespace meixner {

// A validated parameter point (c0, C, C~, U). C = diag(1, -c_1, ..., -c_d)
// and C~ = diag(1, -c~_1, ..., -c~_d) are stored through the vectors c and
// c_tilde; U is the full (d+1)x(d+1) matrix with first row and column of ones.
//
// Membership conditions, all exact:
//   * c0, every c_i, and every c~_i are nonzero;
//   * u_{0,j} = u_{j,0} = 1 for all j;
//   * U^t C U C~ = c0 I;
//   * c0 = 1 - |c| = 1 - |c~|, and the cross identities
//     sum_k c_k u_{k,i} = 1 - c0 delta_{i,0} and
//     sum_k c_k u_{k,i} u_{k,j} = 1 + (c0/c~_j) delta_{i,j}.
class MeixnerPoint {
public:
    // Throws ZeroParameter / NotInParameterSet when the conditions fail.
    static MeixnerPoint validated(int d, Rational c0, std::vector<Rational> c,
                                  std::vector<Rational> c_tilde, RationalMatrix U);
    // No validation; for negative-control experiments only.
    static MeixnerPoint unchecked(int d, Rational c0, std::vector<Rational> c,
                                  std::vector<Rational> c_tilde, RationalMatrix U);

    int dimension() const { return d_; }
    const Rational& c0() const { return c0_; }
    const std::vector<Rational>& c() const { return c_; }
    const std::vector<Rational>& c_tilde() const { return c_tilde_; }
    const RationalMatrix& U() const { return u_; }
    // 0-based over the full (d+1)x(d+1) matrix
    const Rational& u(int row, int col) const;

    RationalMatrix C() const;
    RationalMatrix C_tilde() const;

    bool operator==(const MeixnerPoint&) const = default;

private:
    MeixnerPoint(int d, Rational c0, std::vector<Rational> c, std::vector<Rational> c_tilde,
                 RationalMatrix U);

    int d_;
    Rational c0_;
    std::vector<Rational> c_;
    std::vector<Rational> c_tilde_;
    RationalMatrix u_;
};

// One membership condition with every violating instance spelled out.
struct ParameterCheck {
    std::string condition;
    bool pass = false;
    std::vector<std::string> details;
};

// Full membership report: shape, nonzero parameters, border of ones, the
// matrix identity, the weight sums, and the two cross identities.
std::vector<ParameterCheck> parameter_check_report(int d, const Rational& c0,
                                                   const std::vector<Rational>& c,
                                                   const std::vector<Rational>& c_tilde,
                                                   const RationalMatrix& U);

// Every violated membership condition, one message each; empty means valid.
std::vector<std::string> check_parameter_point(int d, const Rational& c0,
                                               const std::vector<Rational>& c,
                                               const std::vector<Rational>& c_tilde,
                                               const RationalMatrix& U);

// (c0, C, C~, U) -> (c0, C~, C, U^t). Applying it twice is the identity.
MeixnerPoint involution(const MeixnerPoint& point);

// Same swap without re-validating the result; verification suites use this
// so that negative controls on corrupted points can still run.
MeixnerPoint involution_unchecked(const MeixnerPoint& point);

// Builds a point from weights c_1, ..., c_d by Gram-Schmidt orthogonalization
// of start vectors under the bilinear form <w1, w2> = w1^t C w2. The start
// vector for column j is e_j with the mixing parameters (a flat list of
// d(d-1)/2 values, default all zero) spread over coordinates j+1, ..., d.
// Each orthogonalized vector is rescaled so its 0-th coordinate is 1, and
// c~_j = -c0 / <v_j, v_j>. Throws DegenerateStep when a step degenerates.
MeixnerPoint from_weights(const std::vector<Rational>& c,
                          const std::vector<Rational>& mixing = {});

// Explicit family with lower-triangular-plus-border U:
//   c~_k = c_k c0 / ((1 - sum_{j>k} c_j)(1 - sum_{j>=k} c_j)),
//   u_{i,j} = 0 above the diagonal (rows i >= 1), 1 below it,
//   u_{i,i} = (1 - sum_{k>i} c_k)/c_i.
// The diagonal sign is pinned by the linear cross identity: at d = 1 it
// forces u_{1,1} = 1/c_1.
// Throws ZeroDenominator when a denominator above vanishes.
MeixnerPoint family_triangular(const std::vector<Rational>& c);

// One-parameter family c_k = c~_k = (1-q) q^{k-1}, c0 = q^d, with
// u_{i,j} = 1 for i+j <= d, 1/(1-q) for i+j = d+1, and 0 past that
// anti-diagonal. Requires q not in {0, 1}.
MeixnerPoint family_geometric(const Rational& q, int d);

}  // namespace meixner

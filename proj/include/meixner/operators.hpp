#pragma once

#include <map>
#include <span>
#include <vector>

#include "meixner/meixner_poly.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/report.hpp"

namespace meixner {

// One summand of a partial difference operator: polynomial coefficient in
// the acting variables times a lattice shift with entries in {-1, 0, +1}
// (at most one +1 and one -1).
struct OperatorTerm {
    SparsePolynomial coefficient;
    std::vector<int> shift;

    bool operator==(const OperatorTerm&) const = default;
};

// Finite sum of (coefficient x shift) terms. Applying to f gives
// sum_terms coefficient(v) f(v + shift). Term lists are kept unmerged, one
// pair of entries (shifted part, identity part) per constructed summand.
class DifferenceOperator {
public:
    DifferenceOperator(int dimension, std::vector<OperatorTerm> terms);

    int dimension() const { return dimension_; }
    const std::vector<OperatorTerm>& terms() const { return terms_; }
    // number of terms with a nonzero shift
    int shifted_term_count() const;

    bool operator==(const DifferenceOperator&) const = default;

private:
    int dimension_;
    std::vector<OperatorTerm> terms_;
};

// The operator acting on the variables x, for direction i in 1..d:
//   (c~_i/c0) sum_{k != l} c_k u_{k,i} u_{l,i} x_l (E_k E_l^{-1} - Id)
//   - (c~_i/c0) sum_l u_{l,i} x_l (E_l^{-1} - Id)
//   - (c~_i/c0) sum_k c_k u_{k,i} (beta + |x|) (E_k - Id).
// Its eigenvalue on P_n is n_i.
DifferenceOperator build_variable_operator(const MeixnerSpec& spec, int i);

// The operator acting on the degree indices n; equals the variable operator
// of the involuted spec with the variables renamed. Its eigenvalue on P_n,
// as a function of n, is x_i.
DifferenceOperator build_degree_operator(const MeixnerSpec& spec, int i);

// sum_terms coefficient * p(. + shift), exact.
SparsePolynomial apply_symbolic(const DifferenceOperator& op, const SparsePolynomial& p);

// sum_terms coefficient(at) * table[at + shift]; terms whose coefficient
// evaluates to zero are skipped without touching the table. Throws
// MissingGridPoint when a needed value with nonzero coefficient is absent.
Rational apply_on_grid(const DifferenceOperator& op,
                       const std::map<MultiIndex, Rational>& table, const MultiIndex& at);

// Eigenvalue identities for every direction i:
//   (a) symbolically, the variable operator applied to P_n minus n_i P_n is
//       the zero polynomial for all |n| <= maxdeg;
//   (b) on the lattice, the degree operator applied to n -> P_n(x) equals
//       x_i P_n(x) for all n, x in {0..grid}^d; and the same values arise
//       from the variable operator of the involuted spec acting on the
//       tables of the involuted family (the duality route).
VerificationReport verify_bispectrality(const MeixnerSpec& spec, int maxdeg, int grid);

// [L_i, L_j] p = 0 for all i < j and each sample polynomial, for both the
// variable and the degree family.
VerificationReport verify_commutativity(const MeixnerSpec& spec,
                                        std::span<const SparsePolynomial> samples);

}  // namespace meixner

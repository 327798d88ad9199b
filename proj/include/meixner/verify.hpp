#pragma once

#include "meixner/meixner_poly.hpp"
#include "meixner/report.hpp"

namespace meixner {

// The two routes to the same numbers: the coefficient of z^n in the
// generating function, rescaled by n!/(beta)_{|n|}, must equal the
// hypergeometric evaluation, for every |n| <= maxdeg and x in {0..grid}^d.
VerificationReport verify_cross_representation(const MeixnerSpec& spec, int maxdeg, int grid);

// P_n(x) at the spec equals P_x(n) at the involuted spec, exactly, for all
// n, x in {0..box}^d.
VerificationReport verify_duality(const MeixnerSpec& spec, int box);

// d = 1 only: the family reduces to the terminating Gauss sum
// 2F1(-n, -x; beta; 1 - u_{1,1}); checked for n <= max_n, x <= max_x.
VerificationReport verify_classical_reduction(const MeixnerSpec& spec, int max_n, int max_x);

}  // namespace meixner

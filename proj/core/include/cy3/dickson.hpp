#pragma once

#include <vector>

#include "cy3/poly.hpp"

namespace cy3 {

/// Determinant of the n x n matrix with rows (x_1^{p^e}, ..., x_n^{p^e}) for
/// e running over {0, ..., n} with p^i omitted, rows in decreasing e.
/// i = n omits the top exponent and gives the classical Moore determinant
/// over {p^0, ..., p^{n-1}}.
SparsePoly moore_det(int n, int i, int p);

/// The derivation D = sum_i x_i^p d/dx_i, partials taken mod p.
SparsePoly apply_D(const SparsePoly& f);

struct DicksonReport {
    int n, p;
    std::vector<int> zero_indices;  ///< i != 1 with D(moore_det(n,i)) = 0
    bool all_zero_for_i_ne_1;
    int sign;                       ///< epsilon with D(moore_det(n,1)) = epsilon * top^p
    bool top_power_match;           ///< the i = 1 identity held for some sign
    bool quotients_divisible;       ///< every moore_det(n,i) is a multiple of the
                                    ///< Moore determinant (multiply-back checked)
};

/// Verifies D(moore_det(n,i)) = 0 for i != 1 and
/// D(moore_det(n,1)) = +-(moore_det(n,n))^p, recording the sign.
///
/// Exponent-set convention: square n x n determinants over {p^0..p^n} minus
/// one exponent (the displayed matrix with n+2 exponent rows against n
/// columns is not square; this is the unique square reading under which the
/// e=0 row maps into the e=1 row).  The report records the convention.
DicksonReport dickson_report(int n, int p);

}  // namespace cy3

#pragma once

#include <array>
#include <vector>

#include "cy3/fields.hpp"
#include "cy3/gamma.hpp"
#include "cy3/matfp.hpp"
#include "cy3/poly.hpp"

namespace cy3 {

/// Normalized homogeneous 6-tuple on the Plücker quadric, representing a
/// line of P^3(F_q).  Coordinate order is the minor labels
/// (p01, p02, p03, p12, p13, p23); the quadric reads
/// p01*p23 - p02*p13 + p03*p12 = 0.  In the classical coordinates
/// (q1,...,q6) = (p01, p23, p02, p13, p03, p12) it is q1q2 - q3q4 + q5q6.
struct PluckerPoint {
    std::array<int, 6> c{};
    bool operator==(const PluckerPoint& o) const { return c == o.c; }
    bool operator<(const PluckerPoint& o) const { return c < o.c; }
};

int eval_quadric(const Field& F, const std::array<int, 6>& x);
int eval_bilinear(const Field& F, const std::array<int, 6>& x, const std::array<int, 6>& y);
/// The degree p+1 form b(x, x^p) cutting the Deligne-Lusztig locus with the
/// quadric.
int eval_dl_form(const Field& F, const std::array<int, 6>& x);

/// Scale so the first nonzero coordinate is 1.
PluckerPoint normalize_point(const Field& F, std::array<int, 6> x);

/// The Plücker quadric as a polynomial over F_p in the 6 minor coordinates.
SparsePoly plucker_quadric(int p);

/// All points of the Plücker quadric in P^5(F_q), ascending tuple order.
/// The count is the Gaussian binomial [4 choose 2]_q.
std::vector<PluckerPoint> enum_plucker_points(const Field& F);

struct Line {
    PluckerPoint pl;
    std::array<std::array<int, 4>, 2> basis;  // canonical RREF rows
    std::vector<std::array<int, 4>> points;   // q+1 normalized points
};

/// Lines of P^3(F_q) as 2-subspaces, sorted by Plücker tuple; bijective with
/// enum_plucker_points.
std::vector<Line> enum_lines(const Field& F);

/// Plücker data of span(x, x^p): the 2x2 minors of the matrix with rows x^p
/// and x.  Throws std::domain_error when x is fixed by Frobenius up to scale
/// (the F_p-rational points, where the matrix has rank 1).
PluckerPoint gauss_map(const Field& F, const std::array<int, 4>& x);

/// Does y satisfy both the quadric and b(y, y^p) = 0?
bool on_dl_locus(const Field& F, const PluckerPoint& y);

/// The kernel certificate: rows gamma_{2p-2}(l) and gamma_{p-1}(l) over the
/// lines l of P^3(F_p), the left kernel and its reduction to the high block.
struct D2Certificate {
    int p;
    std::vector<Line> lines;
    MatFp gamma_high;  ///< lines x Gamma^{2p-2}(F_p^6): 130 x 126 at p = 3
    MatFp gamma_low;   ///< lines x Gamma^{p-1}(F_p^6):  130 x 21 at p = 3
    MatFp kernel;      ///< canonical rows c with c*gamma_high = c*gamma_low = 0
    int kernel_dim;
    int rank_high;
    bool kernel_reduction_holds;  ///< left kernel of gamma_high alone is the same
};

D2Certificate d2_certificate(int p = 3, int threads = 1);

/// The full matrix of l -> (gamma_{2p-2}(l), -gamma_{p-1}(l)).  The kernel
/// does not depend on the nonzero unit in front of either block.
MatFp d2_matrix(const D2Certificate& cert);

struct IncidenceReport {
    MatFp incidence;  ///< points x lines, entry 1 iff the point lies on the line
    int num_points;
    bool row_sums_uniform, col_sums_uniform;
    int row_sum, col_sum, total;
    bool all_annihilated;  ///< every row killed by gamma_high and gamma_low
    int rank;              ///< reported, not pinned by theory
};

IncidenceReport incidence_check(const D2Certificate& cert);

/// Hodge numbers h[i][j] = dim H^j(Omega^i) of the resolved threefold,
/// assembled from the kernel dimension, the cohomology constants
/// (0, 1, 89, 0) of Omega^1 on the singular (2,4) model, and duality.
struct HodgeDiamond {
    std::array<std::array<int, 4>, 4> h{};
    std::array<int, 4> ambient_omega1_h;  ///< the consumed constants
    long long chi_omega1_recomputed;      ///< ci_chi(5, {2,4}, 1)
    bool chi_consistent;
    int operator()(int i, int j) const { return h[i][j]; }
};

HodgeDiamond hodge_diamond(const D2Certificate& cert);  // p = 3 only

/// chi(Omega^j_{P^n}(k)) by the Bott weight count and by the Euler-sequence
/// recursion; the two routes agree and are cross-checked in the tests.
long long chi_omega_bott(int n, int j, int k);
long long chi_omega_euler(int n, int j, int k);

/// Euler characteristic of Omega^j on a smooth complete intersection of the
/// given multidegree in P^n, via the Koszul resolution and the conormal
/// sequence in K-theory.  Valid for j < dim Y = n - |degrees|; j at or above
/// the dimension is rejected (std::invalid_argument).
long long ci_chi(int n, const std::vector<int>& degrees, int j);

}  // namespace cy3

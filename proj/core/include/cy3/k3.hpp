#pragma once

#include <array>
#include <vector>

#include "cy3/fields.hpp"

namespace cy3 {

/// The semilinear involution on Lambda^2 F_{p^2}^4 defined by
/// u ^ v = <bar u, v> w, w = e1^e2^e3^e4, for the hermitian form with
/// orthonormal standard basis.  On the lex pair basis e12<e13<e14<e23<e24<e34
/// it sends e_I to sign(I) e_comp(I) and conjugates coordinates.
struct BarInvolution {
    std::array<int, 6> perm;   ///< complement position
    std::array<int, 6> sign;   ///< +1 or -1
};

BarInvolution bar_involution();

/// bar applied to a coordinate vector over F_{p^2}.
std::array<int, 6> bar_apply(const Field& fq2, const BarInvolution& bar,
                             const std::array<int, 6>& x);

/// The F_p-form W = fixed points of bar, with the quadratic form psi given
/// by the divided square gamma_2(u) = psi(u) w on Lambda^+.
///
/// The basis is e_I + e_comp(I) and zeta e_I + zeta^{-1} e_comp(I) for
/// I in {12, 13, 14}, zeta the residue of t mod t^2+t+1.  Only p = 2 is
/// wired up.
class WForm {
public:
    explicit WForm(int p = 2);

    int p() const { return p_; }
    const Field& field() const { return f_; }
    const std::array<std::array<int, 6>, 6>& basis() const { return basis_; }

    /// Lambda^2 coordinates of sum c_i b_i (c_i in F_{p^2}).
    std::array<int, 6> lambda_of(const std::array<int, 6>& c) const;
    /// Inverse coordinate change.
    std::array<int, 6> w_coords(const std::array<int, 6>& x) const;

    /// psi on Lambda^2 coordinates: the coefficient of w in the divided
    /// square, i.e. c12 c34 - c13 c24 + c14 c23.
    int psi_lambda(const std::array<int, 6>& x) const;
    /// psi on W coordinates (extends to F_{p^2}-combinations).
    int psi(const std::array<int, 6>& c) const;
    /// psi(u+v) - psi(u) - psi(v); equals the wedge pairing on W.
    int polarization(const std::array<int, 6>& u, const std::array<int, 6>& v) const;
    /// Pairing through the wedge product: u ^ v = b(u, v) w.
    int wedge_pairing(const std::array<int, 6>& u, const std::array<int, 6>& v) const;

private:
    int p_;
    Field f_;
    BarInvolution bar_;
    std::array<std::array<int, 6>, 6> basis_;
    std::array<std::array<int, 6>, 6> inv_;
};

WForm w_basis_and_psi(int p = 2);

struct IsotropicCensus {
    int nonzero_isotropic;    ///< 27 for the W form
    int witt_index;           ///< 2: no totally isotropic 3-space over F_2
    int split_nonzero_isotropic;  ///< 35 for y1y2+y3y4+y5y6
};

IsotropicCensus isotropic_census(const WForm& w);

struct FermatLine {
    std::array<std::array<int, 4>, 2> basis;  ///< canonical rows over F_{p^2}
    std::vector<std::array<int, 4>> points;
    std::array<int, 6> w_point;  ///< psi-isotropic F_p point of W (W coords)
};

struct FermatSurface {
    int p;
    std::vector<std::array<int, 4>> points;  ///< X_p(F_{p^2}), normalized
    std::vector<FermatLine> lines;           ///< totally isotropic hermitian 2-spaces
    bool lines_on_surface;
    bool bijection_ok;  ///< line w_points = the 27 isotropic vectors, bijectively
};

/// Points and lines of x^{p+1} + y^{p+1} + z^{p+1} + w^{p+1} = 0 over
/// F_{p^2}, with the Plücker transfer into W.
FermatSurface fermat_lines(int p = 2);

struct TritangentStats {
    bool each_meets_ten;
    bool five_coplanar_pairs_each;
    int total_meeting_pairs;  ///< 135
};

TritangentStats tritangent_stats(const FermatSurface& fs);

/// A maximal totally isotropic subspace K of T_0 (x) F_q with
/// dim(K cap F*K) = sigma0 - 1, where F* raises coordinates to the p-th
/// power in the rational basis.  basis is the canonical RREF representative.
struct PeriodPoint {
    std::vector<std::vector<int>> basis;  ///< sigma0 x 2*sigma0 field elements
    bool operator==(const PeriodPoint& o) const { return basis == o.basis; }
    bool operator<(const PeriodPoint& o) const { return basis < o.basis; }
};

/// All period points for the fixed non-split form: T_0 = W for sigma0 = 3,
/// hyperbolic planes plus one anisotropic plane for sigma0 < 3.
/// q must be p or p^2; over F_p the enumeration is empty (the Witt index of
/// a non-split form is below sigma0).
std::vector<PeriodPoint> period_points(int sigma0, int q, int p = 2);

struct PeriodCompareReport {
    int total;          ///< |period_points(3, 4)|
    int fermat_points;  ///< |X_2(F_4)|
    bool twice_fermat;  ///< total == 2 * fermat_points
    bool construction_a_valid;  ///< L -> L ^ (V/L) lands in the period set
    bool construction_b_valid;  ///< L -> Lambda^2(annihilator of L)
    bool injective_a, injective_b;
    bool disjoint;
    bool jointly_exhaustive;
    bool none_frobenius_stable;  ///< no K with K = F*K
};

/// Matches the sigma0 = 3 period enumeration against the two tautological
/// constructions from the Fermat surface.
PeriodCompareReport period_fermat_compare();

}  // namespace cy3

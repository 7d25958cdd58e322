#pragma once

#include <functional>
#include <vector>

#include "cy3/gamma.hpp"
#include "cy3/matfp.hpp"

namespace cy3 {

/// Invertible matrices generating a subgroup of GL_n(F_p).  flag_dim = m
/// means every generator maps span(e_1..e_m) into itself; m = n is all of GL.
struct GeneratorSet {
    int n, p, flag_dim;
    std::vector<MatFp> mats;
};

/// Generators of GL_n(F_p): the adjacent transvections I + E_{i,i+1},
/// I + E_{i+1,i} (they generate SL_n) together with the single-slot diagonal
/// matrices diag(1,..,g,..,1), g a primitive root.
GeneratorSet gl_generators(int n, int p);

/// Generators of the stabilizer of span(e_1..e_m): block generators of GL_m
/// and GL_{n-m} plus the elementary matrix I + E_{1,m+1}.
GeneratorSet parabolic_generators(int n, int p, int m);

long long gl_order(int n, int p);
long long parabolic_order(int n, int p, int m);

/// Order of the generated group, via a stabilizer chain (Schreier-Sims) for
/// the permutation action on F_p^n.
long long group_order(const std::vector<MatFp>& gens);

/// Action of g on Lambda^2: e_i ^ e_j -> ge_i ^ ge_j in the lex pair basis;
/// entries are the 2x2 minors of g.  Throws std::domain_error if g is
/// singular.
MatFp induced_lambda2(const MatFp& g);

/// Apply Gamma^k(h) to x: gamma_alpha maps to prod_i gamma_{alpha_i}(h e_i),
/// expanded through dp_mul.
GammaElem gamma_action(const MatFp& h, const GammaElem& x);

/// Full matrix of Gamma^k(h) on the monomial basis.
MatFp induced_gamma(const MatFp& h, int k);

/// RREF-canonical basis of the common fixed space of rep(g) over all
/// generators, via the kernel of the vertical stack of rep(g) - I.
MatFp invariant_subspace(const GeneratorSet& gens,
                         const std::function<MatFp(const MatFp&)>& rep);

/// Invariants of Gamma^k(Lambda^2 F_p^n) under the generator set.  The
/// system is eliminated generator by generator with intermediate kernel
/// substitution; diagonal generators go first, where the fixed space is a
/// coordinate subspace, so no full representation matrix is ever built.
/// Result agrees with invariant_subspace on induced_gamma . induced_lambda2.
MatFp lambda2_gamma_invariants(const GeneratorSet& gens, int k);

struct InvariantsReport {
    int p;
    int dim_low;   ///< invariants of Gamma^{p-1}(Lambda^2 F_p^4)
    int dim_high;  ///< invariants of Gamma^{2(p-1)}(Lambda^2 F_p^4)
    bool v1_member_low, v1_member_high, copair_member;
    MatFp basis_low, basis_high;
};

/// The invariant-subspace certificate for the flag-dim-2 parabolic of
/// GL_4(F_p), p in {3,5,7}.
InvariantsReport prop_invariants_report(int p);

/// (I + N + pP)^p over Z/p^2, N and P given mod p and lifted verbatim.
/// Requires p >= 3 (std::invalid_argument) and N^2 = 0 mod p
/// (std::domain_error).  The returned matrix has modulus p^2.
MatFp lift_obstruction(const MatFp& n_mat, const MatFp& p_mat, int p);

}  // namespace cy3

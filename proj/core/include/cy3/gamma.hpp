#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cy3/matfp.hpp"
#include "cy3/poly.hpp"

namespace cy3 {

/// C(n, k) mod p by Lucas's theorem.
int binom_mod(long long n, long long k, int p);

/// The monomial basis of Gamma^k(V) for dim V = dim: all exponent vectors of
/// total degree k, listed in descending graded reverse lexicographic order,
/// so rank 0 is (k, 0, ..., 0) and the last rank is (0, ..., 0, k).
///
/// Registries are built once per (dim, k) and shared read-only.
class GammaBasis {
public:
    static const GammaBasis& get(int dim, int k);

    int dim() const { return dim_; }
    int degree() const { return k_; }
    int size() const { return (int)index_.size(); }

    const std::vector<uint8_t>& index(int r) const { return index_[r]; }

    /// Inverse of index(): position of an exponent vector, computed
    /// arithmetically (no hashing).
    int rank(std::span<const uint8_t> alpha) const;
    int rank(const std::vector<int>& alpha) const;

    /// Number of exponent vectors of degree k in d variables.
    static long long count(int dim, int k);

private:
    GammaBasis(int dim, int k);
    int dim_, k_;
    std::vector<std::vector<uint8_t>> index_;
};

/// Element of Gamma^k(F_p^dim), dense coefficients in basis order.
struct GammaElem {
    int dim = 0, k = 0, p = 2;
    std::vector<uint8_t> c;

    GammaElem() = default;
    GammaElem(int dim, int k, int p);

    const GammaBasis& basis() const { return GammaBasis::get(dim, k); }
    bool is_zero() const;
    bool operator==(const GammaElem& o) const;
    bool operator!=(const GammaElem& o) const { return !(*this == o); }

    GammaElem operator+(const GammaElem& o) const;
    GammaElem operator-(const GammaElem& o) const;
    GammaElem scaled(int s) const;

    /// One line "a1 ... ad : c" per nonzero coefficient.
    std::string str() const;
};

GammaElem gamma_unit(int dim, int k, int p, const std::vector<int>& alpha, int coeff = 1);

/// gamma_k(v): the coefficient at alpha is prod_i v_i^{alpha_i} (plain
/// monomials, no multinomial factors).
GammaElem divided_power_eval(std::span<const int> v, int k, int p);

/// Product in the divided power algebra: gamma_alpha * gamma_beta =
/// prod_i C(alpha_i + beta_i, alpha_i) * gamma_{alpha+beta}, binomials mod p.
GammaElem dp_mul(const GammaElem& x, const GammaElem& y);

/// Matrix of the contraction operator Gamma^k -> Gamma^{k-n} dual to
/// multiplication by the degree-n form q; terms with a negative exponent
/// drop.  Throws std::invalid_argument if k < deg q.
MatFp contract_matrix(const SparsePoly& q, int k);

/// Matrix of the coproduct component Gamma^{i+j} -> Gamma^i (x) Gamma^j; the
/// target basis is ordered by (Gamma^i rank, Gamma^j rank) pairs.
MatFp split_matrix(int dim, int i, int j, int p);

/// Matrix of Gamma^{pn} -> Gamma^n: gamma_alpha maps to gamma_{alpha/p} when
/// p divides every exponent, else to 0.
MatFp frobenius_matrix(int dim, int n, int p);

/// gamma_k applied to the canonical element of Gamma^2(Lambda^2 U), dim U=4:
/// the image of gamma_k(e1^e2^e3^e4) in Gamma^{2k}(Lambda^2 U).  In the basis
/// e12<e13<e14<e23<e24<e34 it equals
///   sum_{a+b+c=k} (-1)^b a! b! c! gamma_{(a,b,c,c,b,a)}
/// (gamma_i of a product of two degree-one elements with disjoint support is
/// i! times the product of their i-th divided powers).
GammaElem copair_vector(int k, int p);

/// gamma_k of the wedge of the rows of basis (m x n over F_p): the divided
/// power of the vector of maximal minors, taken in lexicographic order of
/// column subsets.  Requires (p-1) | k so the result only depends on the row
/// space; throws std::domain_error if the rows are dependent.
GammaElem plucker_gamma(const MatFp& basis, int k);

}  // namespace cy3

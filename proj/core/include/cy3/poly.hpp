#pragma once

#include <map>
#include <string>
#include <vector>

namespace cy3 {

using Exponents = std::vector<int>;

/// true if a precedes b in the canonical print order: higher total degree
/// first, ties broken by graded reverse lexicographic comparison.
bool grevlex_before(const Exponents& a, const Exponents& b);

struct GrevlexBefore {
    bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_before(a, b); }
};

/// Sparse multivariate polynomial over F_p.  Terms are kept in grevlex order
/// and zero coefficients are never stored.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, int, GrevlexBefore>;

    SparsePoly(int nvars, int p);
    static SparsePoly monomial(int nvars, int p, Exponents e, int c = 1);
    static SparsePoly variable(int nvars, int p, int i, int power = 1);

    int nvars() const { return nvars_; }
    int modulus() const { return p_; }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, int c);
    int coeff(const Exponents& e) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(int c) const;
    SparsePoly pow(int e) const;

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    /// Total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    /// Entry-wise p-th power: exponents scale by p (coefficients are fixed
    /// by Frobenius over the prime field).
    SparsePoly frobenius() const;

    int eval(const std::vector<int>& point) const;

    std::string str() const;

private:
    int nvars_, p_;
    TermMap terms_;
};

/// Quotient f/g for a single divisor; throws std::domain_error if g does not
/// divide f exactly.
SparsePoly divide_exact(const SparsePoly& f, const SparsePoly& g);

}  // namespace cy3

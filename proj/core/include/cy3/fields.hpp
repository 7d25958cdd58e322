#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cy3 {

bool is_prime(int n);

/// Table-driven arithmetic for F_q, q = p^k with k in {1,2,3}.
///
/// Elements are integers in [0, q) encoding base-p digit vectors with
/// respect to the power basis {1, t, t^2, ...} of F_p[t]/(f).  The modulus
/// f is fixed per (p, k) so that every element has one canonical set of
/// coordinates across runs:
///   k = 2, p = 2:   t^2 = t + 1
///   k = 2, p odd:   t^2 = n, n the least quadratic non-residue mod p
///   k = 3:          t^3 = a*t + b, (a, b) lexicographically least making
///                   t^3 - a*t - b irreducible
///
/// All tables are computed at construction; every operation afterwards is a
/// pure lookup, so a Field may be shared freely between threads.
class Field {
public:
    static Field prime(int p);
    static Field extension(int p, int k);

    int p() const { return p_; }
    int degree() const { return k_; }
    int q() const { return q_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("Field::inv: division by zero");
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

    /// The arithmetic Frobenius a -> a^p.  Fixes exactly the prime subfield.
    int frobenius(int a) const { return frob_[a]; }

    bool in_prime_field(int a) const { return a < p_; }

    /// Digit i of the coordinate vector (coefficient of t^i).
    int coord(int a, int i) const;

    /// Build an element from its coordinates (low degree first).
    int from_coords(const std::vector<int>& c) const;

    /// Reduction of t^k, i.e. the low k coefficients of f's negation.
    const std::vector<int>& modulus_reduction() const { return tpow_; }

    /// "a" for prime fields, "a+b*t" (+"c*t^2") for extensions.
    std::string to_string(int a) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(int p, int k);

    int p_, k_, q_;
    std::vector<int> tpow_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_, inv_, frob_;
};

/// Least primitive root mod p (p prime).
int primitive_root(int p);

}  // namespace cy3

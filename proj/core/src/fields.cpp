#include "cy3/fields.hpp"

#include <algorithm>

namespace cy3 {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int primitive_root(int p) {
    // factor p-1, then test candidates
    std::vector<int> fac;
    int m = p - 1;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fac.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fac.push_back(m);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (int f : fac) {
            long long e = (p - 1) / f, r = 1, b = g;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            if (r == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    return 1;  // p = 2
}

namespace {

constexpr int kMaxQ = 2048;

// t^2 = n with n the least non-residue (p odd)
int least_nonresidue(int p) {
    std::vector<bool> sq(p, false);
    for (int x = 1; x < p; ++x) sq[x * x % p] = true;
    for (int n = 2; n < p; ++n)
        if (!sq[n]) return n;
    throw std::logic_error("no quadratic non-residue found");
}

bool cubic_has_root(int p, int a, int b) {
    // x^3 - a*x - b
    for (int x = 0; x < p; ++x) {
        long long v = ((long long)x * x % p) * x % p;
        v = ((v - (long long)a * x - b) % p + p) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

Field Field::prime(int p) { return Field(p, 1); }

Field Field::extension(int p, int k) { return Field(p, k); }

Field::Field(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("Field: characteristic must be prime");
    if (k < 1 || k > 3) throw std::invalid_argument("Field: extension degree must be 1, 2 or 3");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > kMaxQ) throw std::invalid_argument("Field: q too large for table arithmetic");
    q_ = (int)q;

    // reduction of t^k as coordinates (constant term first)
    tpow_.assign(k_, 0);
    if (k_ == 2) {
        if (p_ == 2) { tpow_ = {1, 1}; }            // t^2 = t + 1
        else         { tpow_ = {least_nonresidue(p_), 0}; }
    } else if (k_ == 3) {
        bool found = false;
        for (int a = 0; a < p_ && !found; ++a)
            for (int b = 0; b < p_ && !found; ++b)
                if (!cubic_has_root(p_, a, b)) {    // cubic with no root is irreducible
                    tpow_ = {b, a, 0};
                    found = true;
                }
        if (!found) throw std::logic_error("no irreducible cubic found");
    }

    auto digits = [&](int a) {
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
        return a;
    };

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);

    for (int a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<int> nd(k_);
        for (int i = 0; i < k_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = (uint16_t)encode(nd);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<int> s(k_);
            for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[(size_t)a * q_ + b] = (uint16_t)encode(s);

            // polynomial product, then reduce t^d for d >= k via tpow_
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int d = 2 * k_ - 2; d >= k_; --d) {
                int c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int i = 0; i < k_; ++i)
                    prod[d - k_ + i] = (prod[d - k_ + i] + c * tpow_[i]) % p_;
            }
            prod.resize(k_);
            mul_[(size_t)a * q_ + b] = (uint16_t)encode(prod);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) { inv_[a] = (uint16_t)b; break; }
    for (int a = 0; a < q_; ++a) {
        int r = a;
        for (int i = 1; i < p_; ++i) r = mul_[(size_t)r * q_ + a];
        frob_[a] = (uint16_t)r;
    }
}

int Field::pow(int a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::coord(int a, int i) const {
    for (int j = 0; j < i; ++j) a /= p_;
    return a % p_;
}

int Field::from_coords(const std::vector<int>& c) const {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i)
        a = a * p_ + ((c.size() > (size_t)i ? c[i] : 0) % p_ + p_) % p_;
    return a;
}

std::string Field::to_string(int a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s = std::to_string(coord(a, 0));
    s += "+" + std::to_string(coord(a, 1)) + "*t";
    if (k_ >= 3) s += "+" + std::to_string(coord(a, 2)) + "*t^2";
    return s;
}

}  // namespace cy3

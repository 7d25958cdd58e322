#include "cy3/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cy3 {

bool grevlex_before(const Exponents& a, const Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    // a > b in grevlex iff the last nonzero entry of a-b is negative
    for (int i = (int)a.size() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

SparsePoly::SparsePoly(int nvars, int p) : nvars_(nvars), p_(p) {
    if (nvars < 1) throw std::invalid_argument("SparsePoly: need at least one variable");
    if (p < 2) throw std::invalid_argument("SparsePoly: bad modulus");
}

SparsePoly SparsePoly::monomial(int nvars, int p, Exponents e, int c) {
    SparsePoly f(nvars, p);
    f.add_term(e, c);
    return f;
}

SparsePoly SparsePoly::variable(int nvars, int p, int i, int power) {
    Exponents e(nvars, 0);
    e[i] = power;
    return monomial(nvars, p, e, 1);
}

void SparsePoly::add_term(const Exponents& e, int c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("SparsePoly: exponent arity mismatch");
    c = ((c % p_) + p_) % p_;
    if (!c) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = (it->second + c) % p_;
        if (!it->second) terms_.erase(it);
    }
}

int SparsePoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("SparsePoly::+: mismatch");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("SparsePoly::-: mismatch");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, p_ - c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_) throw std::invalid_argument("SparsePoly::*: mismatch");
    SparsePoly r(nvars_, p_);
    Exponents e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SparsePoly SparsePoly::scaled(int c) const {
    SparsePoly r(nvars_, p_);
    for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
    return r;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("SparsePoly::pow: negative exponent");
    SparsePoly r = monomial(nvars_, p_, Exponents(nvars_, 0), 1);
    SparsePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
}

int SparsePoly::degree() const {
    if (terms_.empty()) return -1;
    // first term has maximal total degree
    const Exponents& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool SparsePoly::is_homogeneous() const {
    int d = degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

SparsePoly SparsePoly::frobenius() const {
    SparsePoly r(nvars_, p_);
    Exponents e(nvars_);
    for (const auto& [e0, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = e0[i] * p_;
        r.add_term(e, c);
    }
    return r;
}

int SparsePoly::eval(const std::vector<int>& point) const {
    if ((int)point.size() != nvars_) throw std::invalid_argument("SparsePoly::eval: arity mismatch");
    long long s = 0;
    for (const auto& [e, c] : terms_) {
        long long t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j) t = t * (((point[i] % p_) + p_) % p_) % p_;
        s = (s + t) % p_;
    }
    return (int)s;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || std::accumulate(e.begin(), e.end(), 0) == 0) {
            os << c;
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

SparsePoly divide_exact(const SparsePoly& f, const SparsePoly& g) {
    if (f.nvars() != g.nvars() || f.modulus() != g.modulus())
        throw std::invalid_argument("divide_exact: mismatch");
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
    const int p = f.modulus(), n = f.nvars();
    SparsePoly q(n, p), r = f;
    const Exponents& lg = g.terms().begin()->first;
    int cg = g.terms().begin()->second;
    int cg_inv = 1;
    {
        long long b = cg, e = p - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        cg_inv = (int)acc;
    }
    while (!r.is_zero()) {
        const Exponents& lr = r.terms().begin()->first;
        Exponents d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = lr[i] - lg[i];
            if (d[i] < 0) throw std::domain_error("divide_exact: not divisible");
        }
        int c = r.terms().begin()->second * cg_inv % p;
        SparsePoly t = SparsePoly::monomial(n, p, d, c);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

}  // namespace cy3

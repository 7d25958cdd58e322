#include "cy3/gamma.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cy3/fields.hpp"

namespace cy3 {

int binom_mod(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    while (n || k) {
        int a = (int)(n % p), b = (int)(k % p);
        if (b > a) return 0;
        // C(a, b) for a, b < p
        long long num = 1, den = 1;
        for (int i = 0; i < b; ++i) {
            num = num * ((a - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        long long dinv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) dinv = dinv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        r = r * (num * dinv % p) % p;
        n /= p;
        k /= p;
    }
    return (int)r;
}

long long GammaBasis::count(int dim, int k) {
    // C(dim + k - 1, k)
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (dim - 1 + i) / i;
    return r;
}

GammaBasis::GammaBasis(int dim, int k) : dim_(dim), k_(k) {
    if (dim < 1 || k < 0) throw std::invalid_argument("GammaBasis: bad dimension or degree");
    // last coordinate slowest-ascending, prefixes recursively; this is
    // descending grevlex with x1 > x2 > ... > xd
    std::vector<uint8_t> cur(dim, 0);
    auto gen = [&](auto&& self, int len, int rem) -> void {
        if (len == 1) {
            cur[0] = (uint8_t)rem;
            index_.push_back(cur);
            return;
        }
        for (int last = 0; last <= rem; ++last) {
            cur[len - 1] = (uint8_t)last;
            self(self, len - 1, rem - last);
        }
    };
    gen(gen, dim, k);
}

const GammaBasis& GammaBasis::get(int dim, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, const GammaBasis*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dim, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, new GammaBasis(dim, k)).first;
    return *it->second;
}

int GammaBasis::rank(std::span<const uint8_t> alpha) const {
    int r = 0, rem = k_;
    for (int pos = dim_ - 1; pos >= 1; --pos) {
        int a = alpha[pos];
        for (int j = 0; j < a; ++j) r += (int)count(pos, rem - j);
        rem -= a;
    }
    return r;
}

int GammaBasis::rank(const std::vector<int>& alpha) const {
    int r = 0, rem = k_;
    for (int pos = dim_ - 1; pos >= 1; --pos) {
        int a = alpha[pos];
        for (int j = 0; j < a; ++j) r += (int)count(pos, rem - j);
        rem -= a;
    }
    return r;
}

GammaElem::GammaElem(int dim, int k, int p) : dim(dim), k(k), p(p) {
    c.assign(GammaBasis::get(dim, k).size(), 0);
}

bool GammaElem::is_zero() const {
    for (uint8_t v : c)
        if (v) return false;
    return true;
}

bool GammaElem::operator==(const GammaElem& o) const {
    return dim == o.dim && k == o.k && p == o.p && c == o.c;
}

GammaElem GammaElem::operator+(const GammaElem& o) const {
    if (dim != o.dim || k != o.k || p != o.p) throw std::invalid_argument("GammaElem::+: mismatch");
    GammaElem r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = (uint8_t)((r.c[i] + o.c[i]) % p);
    return r;
}

GammaElem GammaElem::operator-(const GammaElem& o) const {
    if (dim != o.dim || k != o.k || p != o.p) throw std::invalid_argument("GammaElem::-: mismatch");
    GammaElem r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = (uint8_t)((r.c[i] + p - o.c[i]) % p);
    return r;
}

GammaElem GammaElem::scaled(int s) const {
    s = ((s % p) + p) % p;
    GammaElem r = *this;
    for (auto& v : r.c) v = (uint8_t)(v * s % p);
    return r;
}

std::string GammaElem::str() const {
    std::ostringstream os;
    const GammaBasis& b = basis();
    for (int r = 0; r < b.size(); ++r) {
        if (!c[r]) continue;
        const auto& al = b.index(r);
        for (int i = 0; i < dim; ++i) {
            if (i) os << ' ';
            os << (int)al[i];
        }
        os << " : " << (int)c[r] << '\n';
    }
    return os.str();
}

GammaElem gamma_unit(int dim, int k, int p, const std::vector<int>& alpha, int coeff) {
    GammaElem e(dim, k, p);
    if ((int)alpha.size() != dim || std::accumulate(alpha.begin(), alpha.end(), 0) != k)
        throw std::invalid_argument("gamma_unit: exponent vector has wrong arity or degree");
    e.c[e.basis().rank(alpha)] = (uint8_t)(((coeff % p) + p) % p);
    return e;
}

GammaElem divided_power_eval(std::span<const int> v, int k, int p) {
    const int dim = (int)v.size();
    GammaElem out(dim, k, p);
    const GammaBasis& b = out.basis();
    // powers v_i^a for a <= k
    std::vector<std::vector<int>> pw(dim, std::vector<int>(k + 1, 1));
    for (int i = 0; i < dim; ++i) {
        int vi = ((v[i] % p) + p) % p;
        for (int a = 1; a <= k; ++a) pw[i][a] = pw[i][a - 1] * vi % p;
    }
    for (int r = 0; r < b.size(); ++r) {
        const auto& al = b.index(r);
        int c = 1;
        for (int i = 0; i < dim && c; ++i) c = c * pw[i][al[i]] % p;
        out.c[r] = (uint8_t)c;
    }
    return out;
}

GammaElem dp_mul(const GammaElem& x, const GammaElem& y) {
    if (x.dim != y.dim || x.p != y.p) throw std::invalid_argument("dp_mul: mismatch");
    const int dim = x.dim, p = x.p;
    GammaElem out(dim, x.k + y.k, p);
    const GammaBasis& bx = x.basis();
    const GammaBasis& by = y.basis();
    const GammaBasis& bo = out.basis();
    std::vector<uint8_t> sum(dim);
    for (int i = 0; i < bx.size(); ++i) {
        int ci = x.c[i];
        if (!ci) continue;
        const auto& al = bx.index(i);
        for (int j = 0; j < by.size(); ++j) {
            int cj = y.c[j];
            if (!cj) continue;
            const auto& be = by.index(j);
            int coef = ci * cj % p;
            for (int t = 0; t < dim && coef; ++t) {
                sum[t] = (uint8_t)(al[t] + be[t]);
                if (al[t] && be[t]) coef = coef * binom_mod(al[t] + be[t], al[t], p) % p;
            }
            if (!coef) continue;
            int r = bo.rank(std::span<const uint8_t>(sum.data(), dim));
            out.c[r] = (uint8_t)((out.c[r] + coef) % p);
        }
    }
    return out;
}

MatFp contract_matrix(const SparsePoly& q, int k) {
    if (!q.is_homogeneous() || q.is_zero())
        throw std::invalid_argument("contract_matrix: q must be nonzero homogeneous");
    const int n = q.degree(), dim = q.nvars(), p = q.modulus();
    if (k < n) throw std::invalid_argument("contract_matrix: degree k below deg q");
    const GammaBasis& src = GammaBasis::get(dim, k);
    const GammaBasis& dst = GammaBasis::get(dim, k - n);
    MatFp m(dst.size(), src.size(), p);
    std::vector<uint8_t> diff(dim);
    for (int c = 0; c < src.size(); ++c) {
        const auto& al = src.index(c);
        for (const auto& [be, qc] : q.terms()) {
            bool ok = true;
            for (int i = 0; i < dim; ++i) {
                int d = al[i] - be[i];
                if (d < 0) { ok = false; break; }
                diff[i] = (uint8_t)d;
            }
            if (!ok) continue;
            int r = dst.rank(std::span<const uint8_t>(diff.data(), dim));
            m.set(r, c, m.at(r, c) + qc);
        }
    }
    return m;
}

MatFp split_matrix(int dim, int i, int j, int p) {
    if (i < 0 || j < 0) throw std::invalid_argument("split_matrix: negative degree");
    const GammaBasis& src = GammaBasis::get(dim, i + j);
    const GammaBasis& bi = GammaBasis::get(dim, i);
    const GammaBasis& bj = GammaBasis::get(dim, j);
    MatFp m(bi.size() * bj.size(), src.size(), p);
    // enumerate beta <= alpha with |beta| = i; gamma = alpha - beta
    std::vector<uint8_t> beta(dim), gamma(dim);
    for (int c = 0; c < src.size(); ++c) {
        const auto& al = src.index(c);
        std::fill(beta.begin(), beta.end(), 0);
        // all sub-exponents beta <= alpha with |beta| = i
        auto rec = [&](auto&& self, int t, int need) -> void {
            if (t == dim) {
                if (need) return;
                for (int u = 0; u < dim; ++u) gamma[u] = (uint8_t)(al[u] - beta[u]);
                int ri = bi.rank(std::span<const uint8_t>(beta.data(), dim));
                int rj = bj.rank(std::span<const uint8_t>(gamma.data(), dim));
                int row = ri * bj.size() + rj;
                m.set(row, c, m.at(row, c) + 1);
                return;
            }
            int hi = std::min<int>(al[t], need);
            for (int v = 0; v <= hi; ++v) {
                beta[t] = (uint8_t)v;
                self(self, t + 1, need - v);
            }
            beta[t] = 0;
        };
        rec(rec, 0, i);
    }
    return m;
}

MatFp frobenius_matrix(int dim, int n, int p) {
    if (n < 0) throw std::invalid_argument("frobenius_matrix: negative degree");
    const GammaBasis& src = GammaBasis::get(dim, p * n);
    const GammaBasis& dst = GammaBasis::get(dim, n);
    MatFp m(dst.size(), src.size(), p);
    std::vector<uint8_t> q(dim);
    for (int c = 0; c < src.size(); ++c) {
        const auto& al = src.index(c);
        bool ok = true;
        for (int i = 0; i < dim; ++i) {
            if (al[i] % p) { ok = false; break; }
            q[i] = (uint8_t)(al[i] / p);
        }
        if (!ok) continue;
        m.set(dst.rank(std::span<const uint8_t>(q.data(), dim)), c, 1);
    }
    return m;
}

GammaElem copair_vector(int k, int p) {
    if (k < 1) throw std::invalid_argument("copair_vector: k must be >= 1");
    GammaElem out(6, 2 * k, p);
    const GammaBasis& b = out.basis();
    std::vector<int> fact(k + 1, 1);
    for (int i = 1; i <= k; ++i) fact[i] = fact[i - 1] * i % p;
    std::vector<int> al(6);
    for (int a = 0; a <= k; ++a)
        for (int bb = 0; a + bb <= k; ++bb) {
            int cc = k - a - bb;
            int coef = fact[a] * fact[bb] % p * fact[cc] % p;
            if (bb % 2) coef = (p - coef) % p;
            if (!coef) continue;
            al = {a, bb, cc, cc, bb, a};
            out.c[b.rank(al)] = (uint8_t)coef;
        }
    return out;
}

GammaElem plucker_gamma(const MatFp& basis, int k) {
    const int m = basis.rows(), n = basis.cols(), p = basis.modulus();
    if (!is_prime(p)) throw std::invalid_argument("plucker_gamma: prime modulus required");
    if (k % (p - 1) != 0) throw std::invalid_argument("plucker_gamma: (q-1) must divide k");
    if (m < 1 || m > n) throw std::invalid_argument("plucker_gamma: bad subspace dimension");
    // maximal minors over column subsets in lexicographic order
    std::vector<int> cols(m);
    for (int i = 0; i < m; ++i) cols[i] = i;
    std::vector<int> minors;
    bool any = false;
    while (true) {
        // determinant of the m x m submatrix by elimination
        MatFp s(m, m, p);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s.set(i, j, basis.at(i, cols[j]));
        // Gaussian determinant
        int det = 1;
        {
            MatFp w = s;
            for (int c = 0, r = 0; c < m && r < m; ++c) {
                int piv = -1;
                for (int i = r; i < m; ++i)
                    if (w.at(i, c)) { piv = i; break; }
                if (piv < 0) { det = 0; break; }
                if (piv != r) {
                    det = (p - det) % p;
                    for (int j = 0; j < m; ++j) {
                        uint8_t t = w.at(r, j);
                        w.set(r, j, w.at(piv, j));
                        w.set(piv, j, t);
                    }
                }
                det = det * w.at(r, c) % p;
                int inv = 1;
                {
                    long long bse = w.at(r, c), e = p - 2, acc = 1;
                    while (e) {
                        if (e & 1) acc = acc * bse % p;
                        bse = bse * bse % p;
                        e >>= 1;
                    }
                    inv = (int)acc;
                }
                for (int i = r + 1; i < m; ++i) {
                    int f = w.at(i, c) * inv % p;
                    if (!f) continue;
                    for (int j = c; j < m; ++j) w.set(i, j, w.at(i, j) + (p - f) * w.at(r, j));
                }
                ++r;
            }
        }
        minors.push_back(det);
        if (det) any = true;
        // next lexicographic subset
        int i = m - 1;
        while (i >= 0 && cols[i] == n - m + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (!any) throw std::domain_error("plucker_gamma: basis rows are dependent");
    return divided_power_eval(minors, k, p);
}

}  // namespace cy3

#include "cy3/hirokado.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cy3/fieldla.hpp"

namespace cy3 {

namespace {

// minor label order (01,02,03,12,13,23); complementary pairs for the quadric
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

int eval_quadric(const Field& F, const std::array<int, 6>& x) {
    // p01 p23 - p02 p13 + p03 p12
    int t = F.mul(x[0], x[5]);
    t = F.sub(t, F.mul(x[1], x[4]));
    return F.add(t, F.mul(x[2], x[3]));
}

int eval_bilinear(const Field& F, const std::array<int, 6>& x, const std::array<int, 6>& y) {
    int t = F.add(F.mul(x[0], y[5]), F.mul(x[5], y[0]));
    t = F.sub(t, F.add(F.mul(x[1], y[4]), F.mul(x[4], y[1])));
    return F.add(t, F.add(F.mul(x[2], y[3]), F.mul(x[3], y[2])));
}

int eval_dl_form(const Field& F, const std::array<int, 6>& x) {
    std::array<int, 6> xp;
    for (int i = 0; i < 6; ++i) xp[i] = F.frobenius(x[i]);
    return eval_bilinear(F, x, xp);
}

PluckerPoint normalize_point(const Field& F, std::array<int, 6> x) {
    int lead = 0;
    for (int v : x)
        if (v) { lead = v; break; }
    if (!lead) throw std::domain_error("normalize_point: zero tuple");
    if (lead != 1) {
        int s = F.inv(lead);
        for (int& v : x) v = F.mul(v, s);
    }
    return PluckerPoint{x};
}

SparsePoly plucker_quadric(int p) {
    SparsePoly q(6, p);
    q.add_term({1, 0, 0, 0, 0, 1}, 1);
    q.add_term({0, 1, 0, 0, 1, 0}, p - 1);
    q.add_term({0, 0, 1, 1, 0, 0}, 1);
    return q;
}

std::vector<PluckerPoint> enum_plucker_points(const Field& F) {
    const int q = F.q();
    std::vector<PluckerPoint> out;
    std::array<int, 6> x{};
    // odometer over q^6 tuples, ascending
    while (true) {
        int lead = 0;
        for (int v : x)
            if (v) { lead = v; break; }
        if (lead == 1 && eval_quadric(F, x) == 0) out.push_back(PluckerPoint{x});
        int i = 5;
        while (i >= 0 && x[i] == q - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

namespace {

std::vector<std::array<int, 4>> projective_points(const Field& F) {
    const int q = F.q();
    std::vector<std::array<int, 4>> out;
    std::array<int, 4> x{};
    while (true) {
        int lead = 0;
        for (int v : x)
            if (v) { lead = v; break; }
        if (lead == 1) out.push_back(x);
        int i = 3;
        while (i >= 0 && x[i] == q - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

PluckerPoint plucker_of_rows(const Field& F, const std::array<int, 4>& a,
                             const std::array<int, 4>& b) {
    std::array<int, 6> m;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        m[t] = F.sub(F.mul(a[i], b[j]), F.mul(a[j], b[i]));
    }
    return normalize_point(F, m);
}

}  // namespace

std::vector<Line> enum_lines(const Field& F) {
    const int q = F.q();
    auto pts = projective_points(F);
    std::map<PluckerPoint, Line> seen;
    for (size_t ia = 0; ia < pts.size(); ++ia)
        for (size_t ib = ia + 1; ib < pts.size(); ++ib) {
            std::vector<std::vector<int>> rows = {
                {pts[ia][0], pts[ia][1], pts[ia][2], pts[ia][3]},
                {pts[ib][0], pts[ib][1], pts[ib][2], pts[ib][3]}};
            if (field_rref(F, rows) != 2) continue;
            Line ln;
            ln.basis = {std::array<int, 4>{rows[0][0], rows[0][1], rows[0][2], rows[0][3]},
                        std::array<int, 4>{rows[1][0], rows[1][1], rows[1][2], rows[1][3]}};
            ln.pl = plucker_of_rows(F, ln.basis[0], ln.basis[1]);
            if (seen.count(ln.pl)) continue;
            for (int s = 0; s < q; ++s)
                for (int t = 0; t < q; ++t) {
                    if (!s && !t) continue;
                    std::array<int, 4> v;
                    int lead = 0;
                    for (int i = 0; i < 4; ++i) {
                        v[i] = F.add(F.mul(s, ln.basis[0][i]), F.mul(t, ln.basis[1][i]));
                        if (!lead && v[i]) lead = v[i];
                    }
                    if (lead != 1) continue;  // keep one representative per point
                    ln.points.push_back(v);
                }
            std::sort(ln.points.begin(), ln.points.end());
            seen.emplace(ln.pl, std::move(ln));
        }
    std::vector<Line> out;
    out.reserve(seen.size());
    for (auto& [pl, ln] : seen) out.push_back(std::move(ln));
    return out;
}

PluckerPoint gauss_map(const Field& F, const std::array<int, 4>& x) {
    bool nonzero = false;
    for (int v : x) nonzero |= (v != 0);
    if (!nonzero) throw std::invalid_argument("gauss_map: zero vector");
    std::array<int, 4> xp;
    for (int i = 0; i < 4; ++i) xp[i] = F.frobenius(x[i]);
    std::array<int, 6> m;
    bool any = false;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        m[t] = F.sub(F.mul(xp[i], x[j]), F.mul(xp[j], x[i]));
        any |= (m[t] != 0);
    }
    if (!any)
        throw std::domain_error("gauss_map: point is rational over the prime field (rank 1)");
    return normalize_point(F, m);
}

bool on_dl_locus(const Field& F, const PluckerPoint& y) {
    return eval_quadric(F, y.c) == 0 && eval_dl_form(F, y.c) == 0;
}

D2Certificate d2_certificate(int p, int threads) {
    if (!is_prime(p)) throw std::invalid_argument("d2_certificate: p must be prime");
    Field F = Field::prime(p);
    D2Certificate cert;
    cert.p = p;
    cert.lines = enum_lines(F);
    const int nl = (int)cert.lines.size();
    const int k_high = 2 * p - 2, k_low = p - 1;
    const GammaBasis& bh = GammaBasis::get(6, k_high);  // warm the registries
    const GammaBasis& bl = GammaBasis::get(6, k_low);
    cert.gamma_high = MatFp(nl, bh.size(), p);
    cert.gamma_low = MatFp(nl, bl.size(), p);

    auto fill_rows = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            MatFp basis(2, 4, p);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 4; ++c) basis.set(r, c, cert.lines[i].basis[r][c]);
            GammaElem gh = plucker_gamma(basis, k_high);
            GammaElem gl = plucker_gamma(basis, k_low);
            for (int j = 0; j < (int)gh.c.size(); ++j) cert.gamma_high.set(i, j, gh.c[j]);
            for (int j = 0; j < (int)gl.c.size(); ++j) cert.gamma_low.set(i, j, gl.c[j]);
        }
    };
    threads = std::max(1, std::min(threads, nl));
    if (threads == 1) {
        fill_rows(0, nl);
    } else {
        // rows are independent and land in disjoint slots, so the result is
        // identical for every worker count
        std::vector<std::thread> pool;
        int chunk = (nl + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(fill_rows, t * chunk, std::min(nl, (t + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    MatFp ker_high = row_space_canonical(kernel_basis(cert.gamma_high.transposed()));
    MatFp ker_both = row_space_canonical(kernel_basis(
        MatFp::vstack(cert.gamma_high.transposed(), cert.gamma_low.transposed())));
    cert.kernel = ker_both;
    cert.kernel_dim = ker_both.rows();
    cert.rank_high = nl - ker_high.rows();
    cert.kernel_reduction_holds = (ker_high == ker_both);
    return cert;
}

MatFp d2_matrix(const D2Certificate& cert) {
    return MatFp::hstack(cert.gamma_high, cert.gamma_low.scaled(cert.p - 1));
}

IncidenceReport incidence_check(const D2Certificate& cert) {
    Field F = Field::prime(cert.p);
    auto pts = projective_points(F);
    const int np = (int)pts.size(), nl = (int)cert.lines.size();
    IncidenceReport rep;
    rep.num_points = np;
    rep.incidence = MatFp(np, nl, cert.p);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nl; ++j) {
            const auto& lp = cert.lines[j].points;
            if (std::find(lp.begin(), lp.end(), pts[i]) != lp.end()) rep.incidence.set(i, j, 1);
        }
    rep.row_sums_uniform = rep.col_sums_uniform = true;
    rep.row_sum = rep.col_sum = 0;
    rep.total = 0;
    for (int i = 0; i < np; ++i) {
        int s = 0;
        for (int j = 0; j < nl; ++j) s += rep.incidence.at(i, j);
        if (i == 0) rep.row_sum = s;
        rep.row_sums_uniform &= (s == rep.row_sum);
        rep.total += s;
    }
    for (int j = 0; j < nl; ++j) {
        int s = 0;
        for (int i = 0; i < np; ++i) s += rep.incidence.at(i, j);
        if (j == 0) rep.col_sum = s;
        rep.col_sums_uniform &= (s == rep.col_sum);
    }
    rep.all_annihilated = (rep.incidence * cert.gamma_high).is_zero() &&
                          (rep.incidence * cert.gamma_low).is_zero();
    rep.rank = rank_of(rep.incidence);
    return rep;
}

HodgeDiamond hodge_diamond(const D2Certificate& cert) {
    if (cert.p != 3)
        throw std::invalid_argument("hodge_diamond: the certificate is pinned at p = 3");
    HodgeDiamond d;
    d.ambient_omega1_h = {0, 1, 89, 0};
    d.chi_omega1_recomputed = ci_chi(5, {2, 4}, 1);
    long long chi = 0;
    for (int j = 0; j < 4; ++j) chi += (j % 2 ? -1 : 1) * d.ambient_omega1_h[j];
    d.chi_consistent = (chi == d.chi_omega1_recomputed);

    d.h[0] = {1, 0, 0, 1};
    d.h[1][0] = d.ambient_omega1_h[0];
    d.h[1][1] = d.ambient_omega1_h[1] + cert.kernel_dim;
    d.h[1][2] = d.ambient_omega1_h[2] - cert.rank_high;
    d.h[1][3] = d.ambient_omega1_h[3];
    for (int j = 0; j < 4; ++j) {
        d.h[2][j] = d.h[1][3 - j];
        d.h[3][j] = d.h[0][3 - j];
    }
    return d;
}

namespace {

// product (a)(a-1)...(a-b+1)/b! for integer a, exact
long long binom_ll(long long a, long long b) {
    if (b < 0) return 0;
    long long num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    return num / den;
}

long long chi_structure_sheaf(int n, int k) { return binom_ll(n + k, n); }

}  // namespace

long long chi_omega_euler(int n, int j, int k) {
    long long s = 0;
    for (int i = 0; i <= j; ++i) {
        long long term = binom_ll(n + 1, j - i) * chi_structure_sheaf(n, k - (j - i));
        s += (i % 2 ? -term : term);
    }
    return s;
}

long long chi_omega_bott(int n, int j, int k) {
    if (k == 0) return (j >= 0 && j <= n) ? (j % 2 ? -1 : 1) : 0;
    if (k > j) return binom_ll(k + n - j, k) * binom_ll(k - 1, j);
    if (k < j - n) {
        long long v = binom_ll(j - k, -k) * binom_ll(-k - 1, n - j);
        return n % 2 ? -v : v;
    }
    return 0;
}

long long ci_chi(int n, const std::vector<int>& degrees, int j) {
    const int c = (int)degrees.size();
    if (c < 1 || c > n) throw std::invalid_argument("ci_chi: need 1 <= #degrees <= n");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("ci_chi: degrees must be positive");
    if (j < 0 || j >= n - c)
        throw std::invalid_argument(
            "ci_chi: j must be below the dimension of the complete intersection");
    // [Omega^j_Y] = sum_i (-1)^i [Lambda^i(+O(-d)) . Omega^{j-i}|_Y] and
    // chi(F|_Y) = sum_T (-1)^|T| chi(F(-d_T)) over the Koszul subsets
    long long total = 0;
    for (int i = 0; i <= j; ++i) {
        for (unsigned s = 0; s < (1u << c); ++s) {
            if (__builtin_popcount(s) != i) continue;
            int ds = 0;
            for (int t = 0; t < c; ++t)
                if (s >> t & 1) ds += degrees[t];
            for (unsigned u = 0; u < (1u << c); ++u) {
                int dt = 0, r = __builtin_popcount(u);
                for (int t = 0; t < c; ++t)
                    if (u >> t & 1) dt += degrees[t];
                long long term = chi_omega_bott(n, j - i, -ds - dt);
                total += ((i + r) % 2 ? -term : term);
            }
        }
    }
    return total;
}

}  // namespace cy3

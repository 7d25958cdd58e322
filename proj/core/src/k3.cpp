#include "cy3/k3.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "cy3/fieldla.hpp"

namespace cy3 {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
// disjoint pairs of pair-indices and the sign of e_I ^ e_J = sign * w
constexpr int kDisjoint[3][3] = {{0, 5, +1}, {1, 4, -1}, {2, 3, +1}};

std::array<int, 6> wedge2(const Field& f, const std::array<int, 4>& u,
                          const std::array<int, 4>& v) {
    std::array<int, 6> m;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        m[t] = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
    }
    return m;
}

int hermitian(const Field& f, const std::array<int, 4>& u, const std::array<int, 4>& v) {
    int s = 0;
    for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(f.frobenius(u[i]), v[i]));
    return s;
}

std::vector<std::array<int, 4>> projective_points4(const Field& f) {
    const int q = f.q();
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

}  // namespace

BarInvolution bar_involution() {
    BarInvolution b;
    b.perm = {5, 4, 3, 2, 1, 0};
    b.sign = {1, -1, 1, 1, -1, 1};
    return b;
}

std::array<int, 6> bar_apply(const Field& fq2, const BarInvolution& bar,
                             const std::array<int, 6>& x) {
    std::array<int, 6> out{};
    for (int i = 0; i < 6; ++i) {
        int v = fq2.frobenius(x[i]);
        if (bar.sign[i] < 0) v = fq2.neg(v);
        out[bar.perm[i]] = v;
    }
    return out;
}

WForm::WForm(int p) : p_(p), f_(Field::extension(2, 2)), bar_(bar_involution()) {
    if (p != 2) throw std::invalid_argument("WForm: only p = 2 is wired up");
    const int zeta = 2;  // the residue of t; zeta^3 = 1
    const int zeta_inv = f_.inv(zeta);
    int bi = 0;
    for (int t = 0; t < 3; ++t) {
        int i = kDisjoint[t][0], j = kDisjoint[t][1];
        std::array<int, 6> v{};
        v[i] = 1;
        v[j] = 1;
        basis_[bi++] = v;
        std::array<int, 6> w{};
        w[i] = zeta;
        w[j] = zeta_inv;
        basis_[bi++] = w;
    }
    // invert the basis matrix (columns b_i) for w_coords
    std::vector<std::vector<int>> aug(6, std::vector<int>(12, 0));
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) aug[r][c] = basis_[c][r];
        aug[r][6 + r] = 1;
    }
    if (field_rref(f_, aug) != 6) throw std::logic_error("WForm: basis is singular");
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) inv_[r][c] = aug[r][6 + c];
}

WForm w_basis_and_psi(int p) { return WForm(p); }

std::array<int, 6> WForm::lambda_of(const std::array<int, 6>& c) const {
    std::array<int, 6> out{};
    for (int i = 0; i < 6; ++i) {
        if (!c[i]) continue;
        for (int t = 0; t < 6; ++t) out[t] = f_.add(out[t], f_.mul(c[i], basis_[i][t]));
    }
    return out;
}

std::array<int, 6> WForm::w_coords(const std::array<int, 6>& x) const {
    std::array<int, 6> out{};
    for (int r = 0; r < 6; ++r) {
        int s = 0;
        for (int c = 0; c < 6; ++c) s = f_.add(s, f_.mul(inv_[r][c], x[c]));
        out[r] = s;
    }
    return out;
}

int WForm::psi_lambda(const std::array<int, 6>& x) const {
    int s = 0;
    for (const auto& d : kDisjoint) {
        int t = f_.mul(x[d[0]], x[d[1]]);
        s = d[2] > 0 ? f_.add(s, t) : f_.sub(s, t);
    }
    return s;
}

int WForm::psi(const std::array<int, 6>& c) const { return psi_lambda(lambda_of(c)); }

int WForm::polarization(const std::array<int, 6>& u, const std::array<int, 6>& v) const {
    std::array<int, 6> s;
    for (int i = 0; i < 6; ++i) s[i] = f_.add(u[i], v[i]);
    return f_.sub(f_.sub(psi(s), psi(u)), psi(v));
}

int WForm::wedge_pairing(const std::array<int, 6>& u, const std::array<int, 6>& v) const {
    // coefficient of w in lambda(u) ^ lambda(v)
    std::array<int, 6> x = lambda_of(u), y = lambda_of(v);
    int s = 0;
    for (const auto& d : kDisjoint) {
        int t = f_.add(f_.mul(x[d[0]], y[d[1]]), f_.mul(x[d[1]], y[d[0]]));
        s = d[2] > 0 ? f_.add(s, t) : f_.sub(s, t);
    }
    return s;
}

namespace {

// all RREF bases of r-dimensional subspaces of F_q^n, visited in a fixed
// deterministic order
void for_each_subspace(const Field& f, int n, int r,
                       const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    const int q = f.q();
    std::vector<int> piv(r);
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == r) {
            // free positions: (i, c) with c > piv[i], c not a pivot
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < r; ++i)
                for (int c = piv[i] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end())
                        free_pos.emplace_back(i, c);
            std::vector<std::vector<int>> m(r, std::vector<int>(n, 0));
            for (int i = 0; i < r; ++i) m[i][piv[i]] = 1;
            std::vector<int> vals(free_pos.size(), 0);
            while (true) {
                for (size_t t = 0; t < free_pos.size(); ++t)
                    m[free_pos[t].first][free_pos[t].second] = vals[t];
                visit(m);
                int i = (int)vals.size() - 1;
                while (i >= 0 && vals[i] == q - 1) vals[i--] = 0;
                if (i < 0) break;
                ++vals[i];
            }
            return;
        }
        for (int c = from; c <= n - (r - pos); ++c) {
            piv[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    choose(0, 0);
}

}  // namespace

IsotropicCensus isotropic_census(const WForm& w) {
    const Field f2 = Field::prime(2);
    IsotropicCensus cen{0, 0, 0};
    for (int m = 1; m < 64; ++m) {
        std::array<int, 6> c{};
        for (int i = 0; i < 6; ++i) c[i] = (m >> i) & 1;
        if (w.psi(c) == 0) ++cen.nonzero_isotropic;
        int s = (c[0] & c[1]) ^ (c[2] & c[3]) ^ (c[4] & c[5]);
        if (s == 0) ++cen.split_nonzero_isotropic;
    }
    // Witt index: largest r with a totally isotropic r-subspace over F_2
    for (int r = 1; r <= 3; ++r) {
        bool found = false;
        for_each_subspace(f2, 6, r, [&](const std::vector<std::vector<int>>& rows) {
            if (found) return;
            for (const auto& u : rows) {
                std::array<int, 6> a{};
                std::copy(u.begin(), u.end(), a.begin());
                if (w.psi(a) != 0) return;
            }
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = i + 1; j < rows.size(); ++j) {
                    std::array<int, 6> a{}, b{};
                    std::copy(rows[i].begin(), rows[i].end(), a.begin());
                    std::copy(rows[j].begin(), rows[j].end(), b.begin());
                    if (w.polarization(a, b) != 0) return;
                }
            found = true;
        });
        if (found) cen.witt_index = r;
    }
    return cen;
}

FermatSurface fermat_lines(int p) {
    if (p != 2) throw std::invalid_argument("fermat_lines: only p = 2 is wired up");
    WForm w(p);
    const Field& f = w.field();
    FermatSurface fs;
    fs.p = p;
    for (const auto& x : projective_points4(f))
        if (hermitian(f, x, x) == 0) fs.points.push_back(x);

    std::map<std::array<std::array<int, 4>, 2>, FermatLine> seen;
    for (size_t ia = 0; ia < fs.points.size(); ++ia)
        for (size_t ib = ia + 1; ib < fs.points.size(); ++ib) {
            const auto &a = fs.points[ia], &b = fs.points[ib];
            if (hermitian(f, a, b) != 0) continue;
            std::vector<std::vector<int>> rows = {{a[0], a[1], a[2], a[3]},
                                                  {b[0], b[1], b[2], b[3]}};
            if (field_rref(f, rows) != 2) continue;
            std::array<std::array<int, 4>, 2> key = {
                std::array<int, 4>{rows[0][0], rows[0][1], rows[0][2], rows[0][3]},
                std::array<int, 4>{rows[1][0], rows[1][1], rows[1][2], rows[1][3]}};
            if (seen.count(key)) continue;
            FermatLine ln;
            ln.basis = key;
            const int q = f.q();
            for (int s = 0; s < q; ++s)
                for (int t = 0; t < q; ++t) {
                    if (!s && !t) continue;
                    std::array<int, 4> v;
                    int lead = 0;
                    for (int i = 0; i < 4; ++i) {
                        v[i] = f.add(f.mul(s, ln.basis[0][i]), f.mul(t, ln.basis[1][i]));
                        if (!lead && v[i]) lead = v[i];
                    }
                    if (lead != 1) continue;
                    ln.points.push_back(v);
                }
            std::sort(ln.points.begin(), ln.points.end());
            seen.emplace(key, std::move(ln));
        }

    fs.lines_on_surface = true;
    BarInvolution bar = bar_involution();
    std::set<std::array<int, 6>> wpts;
    for (auto& [key, ln] : seen) {
        for (const auto& pt : ln.points)
            if (hermitian(f, pt, pt) != 0) fs.lines_on_surface = false;
        // scale the wedge into W
        std::array<int, 6> x = wedge2(f, ln.basis[0], ln.basis[1]);
        bool placed = false;
        for (int lam = 1; lam < f.q() && !placed; ++lam) {
            std::array<int, 6> y;
            for (int i = 0; i < 6; ++i) y[i] = f.mul(lam, x[i]);
            if (bar_apply(f, bar, y) == y) {
                ln.w_point = w.w_coords(y);
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("fermat_lines: wedge has no rational rescaling");
        wpts.insert(ln.w_point);
        fs.lines.push_back(ln);
    }

    // the 27 w_points must be exactly the psi-isotropic census, one each
    fs.bijection_ok = (wpts.size() == fs.lines.size());
    int iso = 0;
    for (int m = 1; m < 64; ++m) {
        std::array<int, 6> c{};
        for (int i = 0; i < 6; ++i) c[i] = (m >> i) & 1;
        if (w.psi(c) == 0) {
            ++iso;
            if (!wpts.count(c)) fs.bijection_ok = false;
        }
    }
    fs.bijection_ok = fs.bijection_ok && (iso == (int)fs.lines.size());
    for (const auto& ln : fs.lines) {
        for (int v : ln.w_point)
            if (!f.in_prime_field(v)) fs.bijection_ok = false;
        if (w.psi(ln.w_point) != 0) fs.bijection_ok = false;
    }
    return fs;
}

TritangentStats tritangent_stats(const FermatSurface& fs) {
    const Field f = Field::extension(2, 2);
    TritangentStats st{true, true, 0};
    const auto& lines = fs.lines;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::vector<size_t> meets;
        for (size_t j = 0; j < lines.size(); ++j) {
            if (i == j) continue;
            bool share = false;
            for (const auto& pt : lines[i].points)
                if (std::find(lines[j].points.begin(), lines[j].points.end(), pt) !=
                    lines[j].points.end()) {
                    share = true;
                    break;
                }
            if (share) meets.push_back(j);
        }
        if (meets.size() != 10) st.each_meets_ten = false;
        st.total_meeting_pairs += (int)meets.size();
        // group the meeting lines by the plane they span with line i
        std::map<std::vector<std::vector<int>>, int> planes;
        for (size_t j : meets) {
            std::vector<std::vector<int>> rows;
            for (const auto& r : lines[i].basis) rows.push_back({r[0], r[1], r[2], r[3]});
            for (const auto& r : lines[j].basis) rows.push_back({r[0], r[1], r[2], r[3]});
            ++planes[field_canonical(f, rows)];
        }
        if (planes.size() != 5) st.five_coplanar_pairs_each = false;
        for (const auto& [pl, cnt] : planes)
            if (cnt != 2) st.five_coplanar_pairs_each = false;
    }
    st.total_meeting_pairs /= 2;
    return st;
}

namespace {

// quadratic form for the fixed non-split 2*sigma0-dimensional F_2-space
int nonsplit_form(const WForm& w, int sigma0, const Field& f, const std::vector<int>& y) {
    if (sigma0 == 3) {
        std::array<int, 6> c{};
        std::copy(y.begin(), y.end(), c.begin());
        return w.psi(c);
    }
    if (sigma0 == 2)  // hyperbolic plane + anisotropic plane
        return f.add(f.mul(y[0], y[1]),
                     f.add(f.mul(y[2], y[2]), f.add(f.mul(y[2], y[3]), f.mul(y[3], y[3]))));
    // anisotropic plane
    return f.add(f.mul(y[0], y[0]), f.add(f.mul(y[0], y[1]), f.mul(y[1], y[1])));
}

}  // namespace

std::vector<PeriodPoint> period_points(int sigma0, int q, int p) {
    if (p != 2) throw std::invalid_argument("period_points: only p = 2 is wired up");
    if (sigma0 < 1 || sigma0 > 3) throw std::invalid_argument("period_points: sigma0 in {1,2,3}");
    if (q != p && q != p * p) throw std::invalid_argument("period_points: q must be p or p^2");
    WForm w(p);
    Field f = (q == p) ? Field::prime(p) : Field::extension(p, 2);
    const int n = 2 * sigma0;
    auto quad = [&](const std::vector<int>& y) { return nonsplit_form(w, sigma0, w.field(), y); };
    // note: for q = p the coordinates embed in F_{p^2} unchanged, so the
    // sigma0 = 3 evaluation through W is valid for both fields
    auto polar = [&](const std::vector<int>& u, const std::vector<int>& v) {
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) s[i] = f.add(u[i], v[i]);
        int r = quad(s);
        r = w.field().sub(r, quad(u));
        return w.field().sub(r, quad(v));
    };
    std::vector<PeriodPoint> out;
    for_each_subspace(f, n, sigma0, [&](const std::vector<std::vector<int>>& rows) {
        for (const auto& r : rows)
            if (quad(r) != 0) return;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i + 1; j < rows.size(); ++j)
                if (polar(rows[i], rows[j]) != 0) return;
        // dim(K cap F*K) = 2 sigma0 - rank(K + F*K)
        std::vector<std::vector<int>> both = rows;
        for (const auto& r : rows) {
            std::vector<int> fr(n);
            for (int i = 0; i < n; ++i) fr[i] = f.frobenius(r[i]);
            both.push_back(fr);
        }
        int inter = n - field_rank(f, both);
        if (inter == sigma0 - 1) out.push_back(PeriodPoint{rows});
    });
    return out;
}

PeriodCompareReport period_fermat_compare() {
    WForm w(2);
    const Field& f = w.field();
    FermatSurface fs = fermat_lines(2);
    std::vector<PeriodPoint> pps = period_points(3, 4);
    std::set<PeriodPoint> pset(pps.begin(), pps.end());

    PeriodCompareReport rep;
    rep.total = (int)pps.size();
    rep.fermat_points = (int)fs.points.size();
    rep.twice_fermat = (rep.total == 2 * rep.fermat_points);
    rep.none_frobenius_stable = true;
    for (const auto& pp : pps) {
        std::vector<std::vector<int>> fr;
        for (const auto& r : pp.basis) {
            std::vector<int> v(r.size());
            for (size_t i = 0; i < r.size(); ++i) v[i] = f.frobenius(r[i]);
            fr.push_back(v);
        }
        if (field_canonical(f, fr) == pp.basis) rep.none_frobenius_stable = false;
    }

    auto to_w_rows = [&](const std::vector<std::array<int, 6>>& lambda_rows) {
        std::vector<std::vector<int>> rows;
        for (const auto& x : lambda_rows) {
            std::array<int, 6> c = w.w_coords(x);
            rows.push_back({c[0], c[1], c[2], c[3], c[4], c[5]});
        }
        return field_canonical(f, rows);
    };

    std::set<PeriodPoint> cons_a, cons_b;
    rep.construction_a_valid = rep.construction_b_valid = true;
    for (const auto& l : fs.points) {
        // A: the subspace l ^ V of Lambda^2
        std::vector<std::array<int, 6>> la;
        for (int i = 0; i < 4; ++i) {
            std::array<int, 4> e{};
            e[i] = 1;
            auto wx = wedge2(f, l, e);
            bool nz = false;
            for (int v : wx) nz |= (v != 0);
            if (nz) la.push_back(wx);
        }
        PeriodPoint a{to_w_rows(la)};
        if (!pset.count(a)) rep.construction_a_valid = false;
        cons_a.insert(a);

        // B: Lambda^2 of the annihilator of l for the standard scalar product
        std::vector<std::vector<int>> ann = {{l[0], l[1], l[2], l[3]}};
        // kernel of the 1x4 row: brute small solve
        std::vector<std::vector<int>> hrows;
        {
            std::vector<std::vector<int>> sys = ann;
            field_rref(f, sys);
            // free coordinates of the kernel
            int pivc = -1;
            for (int c = 0; c < 4; ++c)
                if (sys[0][c]) { pivc = c; break; }
            for (int c = 0; c < 4; ++c) {
                if (c == pivc) continue;
                std::vector<int> v(4, 0);
                v[c] = 1;
                v[pivc] = f.neg(sys[0][c]);
                hrows.push_back(v);
            }
        }
        std::vector<std::array<int, 6>> lb;
        for (size_t i = 0; i < hrows.size(); ++i)
            for (size_t j = i + 1; j < hrows.size(); ++j) {
                std::array<int, 4> u{}, v{};
                std::copy(hrows[i].begin(), hrows[i].end(), u.begin());
                std::copy(hrows[j].begin(), hrows[j].end(), v.begin());
                lb.push_back(wedge2(f, u, v));
            }
        PeriodPoint b{to_w_rows(lb)};
        if (!pset.count(b)) rep.construction_b_valid = false;
        cons_b.insert(b);
    }
    rep.injective_a = ((int)cons_a.size() == rep.fermat_points);
    rep.injective_b = ((int)cons_b.size() == rep.fermat_points);
    rep.disjoint = true;
    for (const auto& a : cons_a)
        if (cons_b.count(a)) rep.disjoint = false;
    std::set<PeriodPoint> un = cons_a;
    un.insert(cons_b.begin(), cons_b.end());
    rep.jointly_exhaustive = (un == pset);
    return rep;
}

}  // namespace cy3

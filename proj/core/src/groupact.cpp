#include "cy3/groupact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cy3/fields.hpp"

namespace cy3 {

namespace {

MatFp elementary(int n, int p, int i, int j) {
    MatFp m = MatFp::identity(n, p);
    m.set(i, j, 1);
    return m;
}

void append_block_generators(GeneratorSet& gs, int lo, int hi) {
    const int n = gs.n, p = gs.p;
    int g = primitive_root(p);
    for (int i = lo; i + 1 < hi; ++i) {
        gs.mats.push_back(elementary(n, p, i, i + 1));
        gs.mats.push_back(elementary(n, p, i + 1, i));
    }
    for (int i = lo; i < hi; ++i) {
        MatFp d = MatFp::identity(n, p);
        d.set(i, i, g);
        gs.mats.push_back(d);
    }
}

}  // namespace

GeneratorSet gl_generators(int n, int p) { return parabolic_generators(n, p, n); }

GeneratorSet parabolic_generators(int n, int p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("parabolic_generators: p must be prime");
    if (m < 1 || m > n) throw std::invalid_argument("parabolic_generators: bad flag dimension");
    GeneratorSet gs{n, p, m, {}};
    append_block_generators(gs, 0, m);
    if (m < n) {
        append_block_generators(gs, m, n);
        gs.mats.push_back(elementary(n, p, 0, m));
    }
    return gs;
}

long long gl_order(int n, int p) {
    long long pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    long long r = 1, pi = 1;
    for (int i = 0; i < n; ++i) {
        r *= pn - pi;
        pi *= p;
    }
    return r;
}

long long parabolic_order(int n, int p, int m) {
    long long r = gl_order(m, p) * gl_order(n - m, p);
    for (int i = 0; i < m * (n - m); ++i) r *= p;
    return r;
}

// ---------------------------------------------------------------------------
// Schreier-Sims on the permutation action on F_p^n
// ---------------------------------------------------------------------------

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& g, const Perm& h) {  // x -> g(h(x))
    Perm r(g.size());
    for (size_t x = 0; x < r.size(); ++x) r[x] = g[h[x]];
    return r;
}

Perm inverse(const Perm& g) {
    Perm r(g.size());
    for (size_t x = 0; x < g.size(); ++x) r[g[x]] = x;
    return r;
}

bool is_identity(const Perm& g) {
    for (size_t x = 0; x < g.size(); ++x)
        if (g[x] != (int)x) return false;
    return true;
}

struct StabChain {
    int domain;
    std::vector<int> base;
    std::vector<std::vector<Perm>> gens;
    std::vector<std::vector<int>> orbit;          // points, BFS order
    std::vector<std::vector<Perm>> transversal;   // indexed by point, empty if outside orbit

    void recompute_orbit(int l) {
        orbit[l].clear();
        transversal[l].assign(domain, Perm());
        Perm id(domain);
        for (int x = 0; x < domain; ++x) id[x] = x;
        orbit[l].push_back(base[l]);
        transversal[l][base[l]] = id;
        for (size_t q = 0; q < orbit[l].size(); ++q) {
            int x = orbit[l][q];
            for (const Perm& g : gens[l]) {
                int y = g[x];
                if (transversal[l][y].empty()) {
                    transversal[l][y] = compose(g, transversal[l][x]);
                    orbit[l].push_back(y);
                }
            }
        }
    }

    // strip g through levels >= from; returns level where it got stuck
    std::pair<Perm, int> sift(Perm g, int from) const {
        for (int l = from; l < (int)base.size(); ++l) {
            int y = g[base[l]];
            if (transversal[l][y].empty()) return {std::move(g), l};
            g = compose(inverse(transversal[l][y]), g);
        }
        return {std::move(g), (int)base.size()};
    }

    void add_level(const Perm& g) {
        int b = -1;
        for (int x = 0; x < domain; ++x)
            if (g[x] != x) { b = x; break; }
        base.push_back(b);
        gens.emplace_back();
        orbit.emplace_back();
        transversal.emplace_back();
    }
};

}  // namespace

long long group_order(const std::vector<MatFp>& gen_mats) {
    if (gen_mats.empty()) return 1;
    const int n = gen_mats[0].rows(), p = gen_mats[0].modulus();
    int domain = 1;
    for (int i = 0; i < n; ++i) {
        domain *= p;
        if (domain > 1 << 20) throw std::invalid_argument("group_order: domain too large");
    }
    auto to_perm = [&](const MatFp& g) {
        Perm perm(domain);
        std::vector<int> v(n), w(n);
        for (int x = 0; x < domain; ++x) {
            int t = x;
            for (int i = 0; i < n; ++i) { v[i] = t % p; t /= p; }
            for (int i = 0; i < n; ++i) {
                int s = 0;
                for (int j = 0; j < n; ++j) s += g.at(i, j) * v[j];
                w[i] = s % p;
            }
            int y = 0;
            for (int i = n - 1; i >= 0; --i) y = y * p + w[i];
            perm[x] = y;
        }
        return perm;
    };

    StabChain ch;
    ch.domain = domain;
    std::vector<Perm> pending;
    for (const MatFp& g : gen_mats) {
        if (g.rows() != n || g.cols() != n || g.modulus() != p)
            throw std::invalid_argument("group_order: mixed generator shapes");
        pending.push_back(to_perm(g));
    }

    while (true) {
        while (!pending.empty()) {
            Perm g = std::move(pending.back());
            pending.pop_back();
            auto [res, l] = ch.sift(std::move(g), 0);
            if (is_identity(res)) continue;
            if (l == (int)ch.base.size()) ch.add_level(res);
            ch.gens[l].push_back(res);
            ch.recompute_orbit(l);
        }
        // the chain is complete once every Schreier generator of every level
        // sifts to the identity through the deeper levels
        bool complete = true;
        for (int lev = 0; lev < (int)ch.base.size() && complete; ++lev)
            for (int x : ch.orbit[lev]) {
                if (!complete) break;
                for (const Perm& h : ch.gens[lev]) {
                    Perm s = compose(inverse(ch.transversal[lev][h[x]]),
                                     compose(h, ch.transversal[lev][x]));
                    if (is_identity(s)) continue;
                    auto [r2, l2] = ch.sift(std::move(s), lev + 1);
                    (void)l2;
                    if (!is_identity(r2)) {
                        pending.push_back(std::move(r2));
                        complete = false;
                        break;
                    }
                }
            }
        if (complete) break;
    }
    long long order = 1;
    for (const auto& orb : ch.orbit) order *= (long long)orb.size();
    return order;
}

// ---------------------------------------------------------------------------
// induced representations
// ---------------------------------------------------------------------------

MatFp induced_lambda2(const MatFp& g) {
    const int n = g.rows(), p = g.modulus();
    if (g.cols() != n) throw std::invalid_argument("induced_lambda2: square matrix required");
    if (rank_of(g) != n) throw std::domain_error("induced_lambda2: singular matrix");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int d = (int)pairs.size();
    MatFp m(d, d, p);
    for (int c = 0; c < d; ++c) {
        auto [i, j] = pairs[c];
        for (int r = 0; r < d; ++r) {
            auto [k, l] = pairs[r];
            m.set(r, c, g.at(k, i) * g.at(l, j) - g.at(l, i) * g.at(k, j));
        }
    }
    return m;
}

GammaElem gamma_action(const MatFp& h, const GammaElem& x) {
    const int dim = h.rows(), p = h.modulus();
    if (h.cols() != dim || dim != x.dim || p != x.p)
        throw std::invalid_argument("gamma_action: shape mismatch");
    GammaElem out(dim, x.k, p);
    const GammaBasis& b = x.basis();
    std::vector<std::vector<int>> cols(dim, std::vector<int>(dim));
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) cols[c][r] = h.at(r, c);
    std::map<std::pair<int, int>, GammaElem> factor;  // (var, power) -> gamma_power(h e_var)
    for (int r = 0; r < b.size(); ++r) {
        int coef = x.c[r];
        if (!coef) continue;
        const auto& al = b.index(r);
        GammaElem acc(dim, 0, p);
        acc.c[0] = 1;
        for (int i = 0; i < dim; ++i) {
            if (!al[i]) continue;
            auto key = std::make_pair(i, (int)al[i]);
            auto it = factor.find(key);
            if (it == factor.end())
                it = factor.emplace(key, divided_power_eval(cols[i], al[i], p)).first;
            acc = dp_mul(acc, it->second);
        }
        for (size_t t = 0; t < out.c.size(); ++t)
            out.c[t] = (uint8_t)((out.c[t] + coef * acc.c[t]) % p);
    }
    return out;
}

MatFp induced_gamma(const MatFp& h, int k) {
    const int dim = h.rows(), p = h.modulus();
    if (rank_of(h) != dim) throw std::domain_error("induced_gamma: singular matrix");
    const GammaBasis& b = GammaBasis::get(dim, k);
    MatFp m(b.size(), b.size(), p);
    GammaElem unit(dim, k, p);
    for (int c = 0; c < b.size(); ++c) {
        std::fill(unit.c.begin(), unit.c.end(), 0);
        unit.c[c] = 1;
        GammaElem img = gamma_action(h, unit);
        for (int r = 0; r < b.size(); ++r) m.set(r, c, img.c[r]);
    }
    return m;
}

MatFp invariant_subspace(const GeneratorSet& gens,
                         const std::function<MatFp(const MatFp&)>& rep) {
    if (gens.mats.empty()) throw std::invalid_argument("invariant_subspace: no generators");
    MatFp stack;
    bool first = true;
    for (const MatFp& g : gens.mats) {
        MatFp r = rep(g);
        MatFp diff = r - MatFp::identity(r.rows(), r.modulus());
        stack = first ? diff : MatFp::vstack(stack, diff);
        first = false;
    }
    return row_space_canonical(kernel_basis(stack));
}

MatFp lambda2_gamma_invariants(const GeneratorSet& gens, int k) {
    const int p = gens.p;
    const int dim = gens.n * (gens.n - 1) / 2;
    const GammaBasis& b = GammaBasis::get(dim, k);
    const int N = b.size();

    std::vector<MatFp> diag, rest;
    for (const MatFp& g : gens.mats) {
        bool isdiag = true;
        for (int i = 0; i < gens.n && isdiag; ++i)
            for (int j = 0; j < gens.n; ++j)
                if (i != j && g.at(i, j)) { isdiag = false; break; }
        (isdiag ? diag : rest).push_back(induced_lambda2(g));
    }

    // fixed space of the diagonal generators: the monomials of weight one
    std::vector<int> sel;
    for (int r = 0; r < N; ++r) {
        const auto& al = b.index(r);
        bool keep = true;
        for (const MatFp& h : diag) {
            int w = 1;
            for (int i = 0; i < dim; ++i) {
                int hv = h.at(i, i);
                for (int t = 0; t < al[i]; ++t) w = w * hv % p;
            }
            if (w != 1) { keep = false; break; }
        }
        if (keep) sel.push_back(r);
    }

    MatFp K((int)sel.size(), N, p);
    for (int i = 0; i < (int)sel.size(); ++i) K.set(i, sel[i], 1);

    for (const MatFp& h : rest) {
        if (K.rows() == 0) break;
        // images of the surviving coordinate vectors under Gamma^k(h)
        std::vector<GammaElem> img;
        img.reserve(sel.size());
        GammaElem unit(dim, k, p);
        for (int s : sel) {
            std::fill(unit.c.begin(), unit.c.end(), 0);
            unit.c[s] = 1;
            img.push_back(gamma_action(h, unit));
        }
        // rows of K have support inside sel, so (rho(h)-I)K^T comes from img
        MatFp y(K.rows(), N, p);
        for (int r = 0; r < K.rows(); ++r) {
            uint8_t* yr = y.row(r);
            for (int si = 0; si < (int)sel.size(); ++si) {
                int c = K.at(r, sel[si]);
                if (!c) continue;
                const auto& im = img[si].c;
                for (int t = 0; t < N; ++t) yr[t] = (uint8_t)((yr[t] + c * im[t]) % p);
            }
            for (int t = 0; t < N; ++t) yr[t] = (uint8_t)((yr[t] + p - K.at(r, t)) % p);
        }
        MatFp coeffs = kernel_basis(y.transposed());
        K = coeffs * K;
    }
    return row_space_canonical(K);
}

InvariantsReport prop_invariants_report(int p) {
    if (p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("prop_invariants_report: p must be 3, 5 or 7");
    GeneratorSet gens = parabolic_generators(4, p, 2);
    InvariantsReport rep;
    rep.p = p;
    rep.basis_low = lambda2_gamma_invariants(gens, p - 1);
    rep.basis_high = lambda2_gamma_invariants(gens, 2 * (p - 1));
    rep.dim_low = rep.basis_low.rows();
    rep.dim_high = rep.basis_high.rows();

    auto unit_row = [&](int k) {
        std::vector<int> al(6, 0);
        al[0] = k;
        GammaElem e = gamma_unit(6, k, p, al);
        MatFp v(1, (int)e.c.size(), p);
        for (size_t i = 0; i < e.c.size(); ++i) v.set(0, (int)i, e.c[i]);
        return v;
    };
    GammaElem cp = copair_vector(p - 1, p);
    MatFp cpv(1, (int)cp.c.size(), p);
    for (size_t i = 0; i < cp.c.size(); ++i) cpv.set(0, (int)i, cp.c[i]);

    rep.v1_member_low = in_row_space(rep.basis_low, unit_row(p - 1));
    rep.v1_member_high = in_row_space(rep.basis_high, unit_row(2 * (p - 1)));
    rep.copair_member = in_row_space(rep.basis_high, cpv);
    return rep;
}

MatFp lift_obstruction(const MatFp& n_mat, const MatFp& p_mat, int p) {
    if (p < 3) throw std::invalid_argument("lift_obstruction: requires p >= 3");
    const int n = n_mat.rows();
    if (n_mat.cols() != n || p_mat.rows() != n || p_mat.cols() != n)
        throw std::invalid_argument("lift_obstruction: square matrices of equal size required");
    if (n_mat.modulus() != p || p_mat.modulus() != p)
        throw std::invalid_argument("lift_obstruction: inputs must be given mod p");
    if (!(n_mat * n_mat).is_zero()) throw std::domain_error("lift_obstruction: N^2 != 0 mod p");
    const int m = p * p;
    MatFp a(n, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.set(i, j, (i == j ? 1 : 0) + n_mat.at(i, j) + p * p_mat.at(i, j));
    MatFp r = MatFp::identity(n, m);
    for (int e = 0; e < p; ++e) r = r * a;
    return r;
}

}  // namespace cy3

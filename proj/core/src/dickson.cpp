#include "cy3/dickson.hpp"

#include <stdexcept>

namespace cy3 {

namespace {

// Laplace expansion along the first row; entries are sparse polynomials
SparsePoly det_recursive(const std::vector<std::vector<SparsePoly>>& m,
                         std::vector<int> cols, int row, int nvars, int p) {
    if (cols.empty()) return SparsePoly::monomial(nvars, p, Exponents(nvars, 0), 1);
    SparsePoly acc(nvars, p);
    for (size_t t = 0; t < cols.size(); ++t) {
        std::vector<int> sub;
        for (size_t u = 0; u < cols.size(); ++u)
            if (u != t) sub.push_back(cols[u]);
        SparsePoly minor = det_recursive(m, sub, row + 1, nvars, p);
        SparsePoly term = m[row][cols[t]] * minor;
        acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

SparsePoly moore_det(int n, int i, int p) {
    if (n < 2) throw std::invalid_argument("moore_det: need n >= 2");
    if (i < 0 || i > n) throw std::invalid_argument("moore_det: omitted exponent out of range");
    std::vector<int> exps;
    for (int e = n; e >= 0; --e)
        if (e != i) exps.push_back(e);
    std::vector<std::vector<SparsePoly>> m;
    for (int e : exps) {
        long long pe = 1;
        for (int t = 0; t < e; ++t) pe *= p;
        std::vector<SparsePoly> row;
        for (int j = 0; j < n; ++j) row.push_back(SparsePoly::variable(n, p, j, (int)pe));
        m.push_back(std::move(row));
    }
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    return det_recursive(m, cols, 0, n, p);
}

SparsePoly apply_D(const SparsePoly& f) {
    const int n = f.nvars(), p = f.modulus();
    SparsePoly out(n, p);
    Exponents e(n);
    for (const auto& [e0, c] : f.terms()) {
        for (int i = 0; i < n; ++i) {
            int d = e0[i] % p;
            if (!d) continue;
            e = e0;
            e[i] += p - 1;  // d/dx_i then multiply by x_i^p
            out.add_term(e, c * d);
        }
    }
    return out;
}

DicksonReport dickson_report(int n, int p) {
    DicksonReport rep;
    rep.n = n;
    rep.p = p;
    rep.all_zero_for_i_ne_1 = true;
    SparsePoly top = moore_det(n, n, p);
    SparsePoly top_p = top.pow(p);
    for (int i = 0; i <= n; ++i) {
        SparsePoly d = apply_D(moore_det(n, i, p));
        if (i == 1) {
            if (d == top_p) {
                rep.sign = 1;
                rep.top_power_match = true;
            } else if (d == top_p.scaled(p - 1)) {
                rep.sign = -1;
                rep.top_power_match = true;
            } else {
                rep.sign = 0;
                rep.top_power_match = false;
            }
        } else {
            if (d.is_zero())
                rep.zero_indices.push_back(i);
            else
                rep.all_zero_for_i_ne_1 = false;
        }
    }
    rep.quotients_divisible = true;
    for (int i = 0; i <= n; ++i) {
        try {
            SparsePoly q = divide_exact(moore_det(n, i, p), top);
            if (q * top != moore_det(n, i, p)) rep.quotients_divisible = false;
        } catch (const std::domain_error&) {
            rep.quotients_divisible = false;
        }
    }
    return rep;
}

}  // namespace cy3

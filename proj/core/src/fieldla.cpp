#include "cy3/fieldla.hpp"

namespace cy3 {

int field_rref(const Field& F, std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return 0;
    const int n = (int)rows[0].size();
    int cur = 0;
    for (int col = 0; col < n && cur < (int)rows.size(); ++col) {
        int piv = -1;
        for (int i = cur; i < (int)rows.size(); ++i)
            if (rows[i][col]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[cur], rows[piv]);
        int inv = F.inv(rows[cur][col]);
        for (int j = 0; j < n; ++j) rows[cur][j] = F.mul(rows[cur][j], inv);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == cur || !rows[i][col]) continue;
            int f = rows[i][col];
            for (int j = 0; j < n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[cur][j]));
        }
        ++cur;
    }
    return cur;
}

std::vector<std::vector<int>> field_canonical(const Field& F,
                                              std::vector<std::vector<int>> rows) {
    int r = field_rref(F, rows);
    rows.resize(r);
    return rows;
}

int field_rank(const Field& F, std::vector<std::vector<int>> rows) {
    return field_rref(F, rows);
}

}  // namespace cy3

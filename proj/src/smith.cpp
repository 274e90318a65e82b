#include <algorithm>
#include <sstream>

#include "gtop/fpgroup.hpp"

namespace gtop {

namespace {

IntMatrix identity(int n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Reducer {
    IntMatrix& a;
    IntMatrix* u;
    IntMatrix* v;
    int m, n;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (v)
            for (auto& row : *v) std::swap(row[i], row[j]);
    }
    // row_i += q * row_j
    void add_row(int i, int j, const BigInt& q) {
        for (int c = 0; c < n; ++c)
            if (a[j][c] != 0) a[i][c] += q * a[j][c];
        if (u)
            for (std::size_t c = 0; c < (*u)[i].size(); ++c)
                if ((*u)[j][c] != 0) (*u)[i][c] += q * (*u)[j][c];
    }
    void add_col(int i, int j, const BigInt& q) {
        for (int r = 0; r < m; ++r)
            if (a[r][j] != 0) a[r][i] += q * a[r][j];
        if (v)
            for (auto& row : *v)
                if (row[j] != 0) row[i] += q * row[j];
    }
    void negate_row(int i) {
        for (auto& x : a[i]) x = -x;
        if (u)
            for (auto& x : (*u)[i]) x = -x;
    }

    bool move_min_to(int t) {
        int bi = -1, bj = -1;
        BigInt best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0) {
                    BigInt x = babs(a[i][j]);
                    if (bi < 0 || x < best) {
                        best = x;
                        bi = i;
                        bj = j;
                        if (best == 1) goto found;
                    }
                }
    found:
        if (bi < 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void run(std::vector<BigInt>& diag) {
        int t = 0;
        while (t < std::min(m, n)) {
            if (!move_min_to(t)) break;
            while (true) {
                bool clean = true;
                for (int i = t + 1; i < m; ++i)
                    if (a[i][t] != 0) {
                        BigInt q = a[i][t] / a[t][t];
                        add_row(i, t, -q);
                        if (a[i][t] != 0) clean = false;
                    }
                for (int j = t + 1; j < n; ++j)
                    if (a[t][j] != 0) {
                        BigInt q = a[t][j] / a[t][t];
                        add_col(j, t, -q);
                        if (a[t][j] != 0) clean = false;
                    }
                if (!clean) {
                    // a smaller remainder exists in row/column t; bring it to the pivot
                    int bi = t, bj = t;
                    BigInt best = babs(a[t][t]);
                    for (int i = t + 1; i < m; ++i)
                        if (a[i][t] != 0 && babs(a[i][t]) < best) best = babs(a[i][t]), bi = i, bj = t;
                    for (int j = t + 1; j < n; ++j)
                        if (a[t][j] != 0 && babs(a[t][j]) < best) best = babs(a[t][j]), bi = t, bj = j;
                    swap_rows(t, bi);
                    swap_cols(t, bj);
                    continue;
                }
                // divisibility of the remaining block
                int bad = -1;
                for (int i = t + 1; i < m && bad < 0; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            bad = i;
                            break;
                        }
                if (bad < 0) break;
                add_row(t, bad, 1);
            }
            if (a[t][t] < 0) negate_row(t);
            diag.push_back(a[t][t]);
            ++t;
        }
    }
};

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    const std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IntMatrix c(m, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    if (b[l][j] != 0) c[i][j] += a[i][l] * b[l][j];
    return c;
}

SmithForm smith_normal_form(IntMatrix a, bool transforms) {
    SmithForm s;
    s.rows = static_cast<int>(a.size());
    s.cols = s.rows ? static_cast<int>(a[0].size()) : 0;
    if (transforms) {
        s.U = identity(s.rows);
        s.V = identity(s.cols);
    }
    Reducer r{a, transforms ? &s.U : nullptr, transforms ? &s.V : nullptr, s.rows, s.cols};
    r.run(s.diagonal);
    return s;
}

bool verify_smith(const IntMatrix& a, const SmithForm& s) {
    if (s.U.size() != a.size()) return false;
    IntMatrix d = multiply(multiply(s.U, a), s.V);
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j) {
            BigInt expect = (i == j && i < static_cast<int>(s.diagonal.size())) ? s.diagonal[i] : BigInt(0);
            if (d[i][j] != expect) return false;
        }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
        if (s.diagonal[i + 1] % s.diagonal[i] != 0) return false;
    return true;
}

IntMatrix relation_matrix(const Presentation& p) {
    IntMatrix m;
    for (const auto& r : p.relators) {
        auto e = exponent_sums(r, p.ngens());
        std::vector<BigInt> row(e.begin(), e.end());
        if (std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; })) m.push_back(std::move(row));
    }
    return m;
}

AbelianInvariants abelianize(const Presentation& p) {
    AbelianInvariants ab;
    IntMatrix m = relation_matrix(p);
    if (m.empty()) {
        ab.rank = p.ngens();
        return ab;
    }
    SmithForm s = smith_normal_form(std::move(m));
    ab.rank = p.ngens() - static_cast<int>(s.diagonal.size());
    for (const auto& d : s.diagonal)
        if (d > 1) ab.torsion.push_back(d);
    return ab;
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
        os << (first ? "" : " x ") << "Z/" << t;
        first = false;
    }
    if (rank > 0) {
        os << (first ? "" : " x ") << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace gtop

#include "tropdimer/mutation.hpp"

namespace tropdimer {

namespace {

using Mat = std::vector<std::vector<Int>>;

Mat identity(std::size_t n) {
    Mat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Int absval(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const Mat& input) {
    SmithForm s;
    Mat a = input;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    s.u = identity(rows);
    s.v = identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : s.v) std::swap(r[i], r[j]);
    };
    // row i -= q * row j
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
        for (std::size_t c = 0; c < rows; ++c) s.u[i][c] -= q * s.u[j][c];
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
        for (std::size_t r = 0; r < cols; ++r) s.v[r][i] -= q * s.v[r][j];
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry of the remaining block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || absval(a[i][j]) < absval(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                row_sub(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                col_sub(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
                        for (std::size_t c = 0; c < rows; ++c) s.u[t][c] += s.u[i][c];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a[t][t] < 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
            for (std::size_t c = 0; c < rows; ++c) s.u[t][c] = -s.u[t][c];
        }
    }
    s.diag = a;
    return s;
}

}  // namespace tropdimer

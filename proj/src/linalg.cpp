#include "qrs/linalg.hpp"

#include <algorithm>

namespace qrs {

namespace {

struct Echelon {
    Mat m;
    std::vector<size_t> pivot_col;  // per pivot row, ascending
};

// Fraction-free elimination: the Bareiss single-step identity keeps every
// intermediate entry an exact quotient, so coefficient swell stays
// polynomial instead of doubly exponential.
Echelon bareiss(Mat m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    Laurent prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m.at(pr, col).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != row)
            for (size_t j = col; j < cols; ++j) std::swap(m.at(row, j), m.at(pr, j));
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m.at(i, j) = exact_divide(
                    m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j), prev);
            m.at(i, col) = Laurent();
        }
        prev = m.at(row, col);
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

size_t rank(Mat m) {
    return bareiss(std::move(m)).pivot_col.size();
}

std::vector<std::vector<Laurent>> nullspace(Mat m) {
    const size_t cols = m.cols();
    Echelon e = bareiss(std::move(m));
    const size_t nr = e.pivot_col.size();

    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Laurent>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> x(cols);
        x[f] = RatFunc(Laurent(1));
        for (size_t k = nr; k-- > 0;) {
            size_t pc = e.pivot_col[k];
            if (pc > f) continue;
            RatFunc acc;
            for (size_t j = pc + 1; j < cols; ++j) {
                if (e.m.at(k, j).is_zero() || x[j].is_zero()) continue;
                acc = acc + RatFunc(e.m.at(k, j)) * x[j];
            }
            x[pc] = -acc / RatFunc(e.m.at(k, pc));
        }
        // Clear denominators and strip content.
        Laurent common(1);
        for (const auto& xi : x)
            if (!xi.den().is_one()) common = common * xi.den();
        std::vector<Laurent> v(cols);
        for (size_t j = 0; j < cols; ++j)
            v[j] = exact_divide(x[j].num() * common, x[j].den());

        Rational rat_content(0);
        Exp mono{0, 0, 0, 0};
        bool first = true;
        for (const auto& vj : v) {
            for (const auto& [ee, cc] : vj.terms()) {
                Rational a = abs(cc);
                rat_content = rat_content == 0 ? a : Rational(
                    gcd(rat_content.get_num(), a.get_num()),
                    lcm(rat_content.get_den(), a.get_den()));
                rat_content.canonicalize();
                if (first) { mono = ee; first = false; }
                for (size_t t = 0; t < mono.size(); ++t) mono[t] = std::min(mono[t], ee[t]);
            }
        }
        if (rat_content != 0) {
            Laurent scale = Laurent::monomial(rat_content, mono).monomial_invert();
            for (auto& vj : v) vj = vj * scale;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qrs

#include "ppalg/linalg.hpp"

#include "ppalg/errors.hpp"

namespace ppalg {

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pr = -1;
        for (int r = row; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < cols_; ++c) std::swap(at(pr, c), at(row, c));
        const Rational inv = at(row, col).inverse();
        for (int c = col; c < cols_; ++c) at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            const Rational f = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QMatrix a) {
    return static_cast<int>(a.rref().size());
}

LinearSolution solve(const QMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw validation_error("right-hand side length does not match matrix");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    const std::vector<int> pivots = aug.rref();
    LinearSolution sol;
    sol.consistent = pivots.empty() || pivots.back() != a.cols();
    if (!sol.consistent) return sol;
    sol.x.assign(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol.x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
    sol.nullity = a.cols() - static_cast<int>(pivots.size());
    return sol;
}

std::vector<std::vector<Rational>> nullspace(QMatrix a) {
    const std::vector<int> pivots = a.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ppalg

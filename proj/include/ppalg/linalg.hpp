#pragma once

#include <vector>

#include "ppalg/rational.hpp"

namespace ppalg {

// Dense matrix over the rationals; just enough exact linear algebra for
// rank, solving, and nullspaces on the small systems that arise here.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

    // In-place Gauss-Jordan reduction; returns the pivot columns in order.
    std::vector<int> rref();

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

int rank(QMatrix a);

struct LinearSolution {
    bool consistent = false;
    std::vector<Rational> x; // one solution, free variables set to zero
    int nullity = 0;
};

// Solves a x = b.
LinearSolution solve(const QMatrix& a, const std::vector<Rational>& b);

// Basis of the right nullspace.
std::vector<std::vector<Rational>> nullspace(QMatrix a);

} // namespace ppalg

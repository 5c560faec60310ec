#pragma once

#include <vector>

#include "qrs/laurent.hpp"
#include "qrs/ratfunc.hpp"

namespace qrs {

// Dense matrix over Q[r^{±1}, s^{±1}], row-major.
class Mat {
  public:
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Laurent& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Laurent& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  private:
    size_t rows_, cols_;
    std::vector<Laurent> a_;
};

size_t rank(Mat m);

// Basis of the right nullspace over Q(r,s), computed by fraction-free
// (Bareiss) elimination. Vectors are cleared to Laurent entries with
// rational and monomial content removed. Empty for full column rank.
std::vector<std::vector<Laurent>> nullspace(Mat m);

}  // namespace qrs

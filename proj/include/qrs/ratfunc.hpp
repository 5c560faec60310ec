#pragma once

#include "qrs/laurent.hpp"

namespace qrs {

// Element of the fraction field Q(r,s). Equality is decided by
// cross-multiplication, which is exact regardless of common factors left
// in the representation; normalization keeps the denominator's leading
// term at 1 and strips it entirely whenever it divides the numerator.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Laurent n) : num_(std::move(n)), den_(1) {}
    RatFunc(Laurent n, Laurent d);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
    Laurent num_, den_;
};

}  // namespace qrs

#include "qrs/ratfunc.hpp"

namespace qrs {

RatFunc::RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    if (auto q = num_.try_divide(den_)) {
        num_ = std::move(*q);
        den_ = Laurent(1);
        return;
    }
    // Scale so the denominator's lex-leading term becomes 1.
    const auto& lead = *den_.terms().rbegin();
    Laurent u = Laurent::monomial(lead.second, lead.first).monomial_invert();
    num_ = num_ * u;
    den_ = den_ * u;
}

RatFunc RatFunc::operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qrs

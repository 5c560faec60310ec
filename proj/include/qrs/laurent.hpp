#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qrs/rational.hpp"

namespace qrs {

// Exponent vector of a Laurent monomial. Slots 0,1 are the deformation
// parameters r, s; slots 2,3 are the torus eigenvalue symbols A1, A2 used
// by the automorphism verifier and stay zero everywhere else.
using Exp = std::array<int, 4>;

constexpr Exp kExpOne{0, 0, 0, 0};

struct NotAMonomial : std::runtime_error {
    NotAMonomial() : std::runtime_error("monomial expected, got 0 or >=2 terms") {}
};

// Sparse Laurent polynomial in Q[r^{±1}, s^{±1}] (and A1, A2 when the
// torus symbols are in play). The empty term map is the unique zero.
class Laurent {
  public:
    using TermMap = std::map<Exp, Rational>;

    Laurent() = default;
    Laurent(long n) { if (n != 0) terms_[kExpOne] = Rational(n); }
    Laurent(const Rational& c) { if (c != 0) terms_[kExpOne] = c; }
    static Laurent monomial(const Rational& c, const Exp& e) {
        Laurent x;
        if (c != 0) x.terms_[e] = c;
        return x;
    }
    // r^m s^n
    static Laurent rs(int m, int n, const Rational& c = Rational(1)) {
        return monomial(c, Exp{m, n, 0, 0});
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    // Inverse of a single-term element. Throws NotAMonomial otherwise.
    Laurent monomial_invert() const;

    // Exponent pair (m, n) of a monomial in r, s only.
    std::pair<int, int> monomial_rs_exponents() const;

    // Exact quotient *this / d, or nullopt if d does not divide exactly.
    std::optional<Laurent> try_divide(const Laurent& d) const;

    // Canonical text: terms sorted lexicographically by exponent vector,
    // e.g. "-r^-1*s + 1".
    std::string str() const;

  private:
    void add_term(const Exp& e, const Rational& c);
    TermMap terms_;
};

Laurent exact_divide(const Laurent& a, const Laurent& b);

}  // namespace qrs

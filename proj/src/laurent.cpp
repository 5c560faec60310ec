#include "qrs/laurent.hpp"

#include <sstream>

namespace qrs {

namespace {

Exp exp_add(const Exp& a, const Exp& b) {
    Exp out;
    for (size_t i = 0; i < out.size(); ++i) {
        if (__builtin_add_overflow(a[i], b[i], &out[i]))
            throw std::overflow_error("Laurent exponent overflow");
    }
    return out;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp out;
    for (size_t i = 0; i < out.size(); ++i) {
        if (__builtin_sub_overflow(a[i], b[i], &out[i]))
            throw std::overflow_error("Laurent exponent overflow");
    }
    return out;
}

constexpr const char* kVarNames[4] = {"r", "s", "A1", "A2"};

}  // namespace

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == kExpOne &&
           terms_.begin()->second == 1;
}

void Laurent::add_term(const Exp& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(exp_add(ea, eb), ca * cb);
    return out;
}

Laurent Laurent::monomial_invert() const {
    if (terms_.size() != 1) throw NotAMonomial();
    const auto& [e, c] = *terms_.begin();
    Exp inv;
    for (size_t i = 0; i < inv.size(); ++i) inv[i] = -e[i];
    return monomial(Rational(1) / c, inv);
}

std::pair<int, int> Laurent::monomial_rs_exponents() const {
    if (terms_.size() != 1) throw NotAMonomial();
    const Exp& e = terms_.begin()->first;
    return {e[0], e[1]};
}

std::optional<Laurent> Laurent::try_divide(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return Laurent();
    // Shift both operands into the polynomial ring first; Laurent monomials
    // are units, so long division only terminates on the shifted copies.
    auto min_exp = [](const Laurent& x) {
        Exp m = x.terms_.begin()->first;
        for (const auto& [e, c] : x.terms_)
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        return m;
    };
    Exp sa = min_exp(*this), sd = min_exp(d);
    Laurent rem, dp;
    for (const auto& [e, c] : terms_) rem.terms_.emplace(exp_sub(e, sa), c);
    for (const auto& [e, c] : d.terms_) dp.terms_.emplace(exp_sub(e, sd), c);

    Laurent quot;
    const auto& dl = *dp.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        for (size_t i = 0; i < rl.first.size(); ++i)
            if (rl.first[i] < dl.first[i]) return std::nullopt;
        Laurent t = monomial(rl.second / dl.second, exp_sub(rl.first, dl.first));
        quot += t;
        rem -= t * dp;
    }
    Laurent out;
    Exp shift = exp_sub(sa, sd);
    for (const auto& [e, c] : quot.terms_) out.terms_.emplace(exp_add(e, shift), c);
    return out;
}

Laurent exact_divide(const Laurent& a, const Laurent& b) {
    auto q = a.try_divide(b);
    if (!q) throw std::domain_error("inexact Laurent division");
    return *q;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string factors;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += kVarNames[i];
            if (e[i] != 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << factors;
        }
    }
    return os.str();
}

}  // namespace qrs

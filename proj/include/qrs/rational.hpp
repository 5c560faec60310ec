#pragma once

#include <gmpxx.h>
#include <string>

namespace qrs {

// Arbitrary-precision exact rational. All coefficient arithmetic in the
// kernel goes through this type; no floating point anywhere.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace qrs

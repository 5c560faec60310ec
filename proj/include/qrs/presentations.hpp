#pragma once

#include <optional>

#include "qrs/algebra.hpp"

namespace qrs {

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& n)
        : std::runtime_error("unknown named element: " + n) {}
};

enum class Algebra { U, V };

Algebra algebra_from_string(const std::string& s);

// Built-in presentations. U = U+_{r,s}(sl3) on X1 < X3 < X2 with e1 = X1,
// e2 = X2; V = U+_{r,s}(B2) on X1 < X2 < X3 < X4 with e1 = X1, e2 = X4.
const Presentation& build_presentation(Algebra which);

struct NamedElement {
    std::string name;
    PBWElement value;
    Weight weight;
};

// Derived elements: Z, Zp, W, e3, e3bar for V; X3p for U. Chevalley
// generators e1, e2 resolve in both.
NamedElement derived_element(const std::string& name, const Presentation& p);
std::vector<std::string> named_element_names(const Presentation& p);

enum class CheckStatus { verified, corrected, failed };
std::string to_string(CheckStatus s);

struct CheckEntry {
    std::string check;
    std::string citation;
    CheckStatus status;
    std::string residual_text;
    std::string correction_text;  // empty unless status == corrected
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool any_failed() const;
};

// The defining Serre relations as free-algebra elements in the Chevalley
// generators (U: degrees (2,1) and (1,2); V: degrees (2,1) and (1,3)).
std::vector<std::pair<std::string, FreeElement>> defining_relations(const Presentation& p);

// Normalizes each defining Serre relation through the rewriting engine.
// For U this also evaluates the published middle term of the (1,2)
// relation, which does not vanish.
CheckReport serre_check(const Presentation& p);

// Diagonal automorphism / derivation data of one level of the skew tower.
struct TowerLevel {
    int level;                       // generator index being adjoined
    std::vector<Laurent> tau;        // tau(X_i) = tau[i] * X_i, i < level
    std::vector<PBWElement> delta;   // delta(X_i), i < level
    std::optional<Laurent> q;        // claimed sigma delta = q delta sigma scalar
};

struct SkewTowerData {
    std::vector<TowerLevel> levels;
};

// The published tau/delta values (with the case typo in tau_4(X_2)
// read as s^-2). These deliberately carry the printed discrepancies; the
// checker recomputes the true values from the straightening rules.
SkewTowerData published_tower(Algebra which);

// Verifies X_j X_i = tau_j(X_i) X_j + delta_j(X_i), the sigma-delta
// commutation scalar, and local nilpotency of each delta_j. Printed values
// that fail are corrected from the rules and re-verified.
CheckReport skew_tower_check(const Presentation& p, const SkewTowerData& t,
                             int nilpotency_bound);

}  // namespace qrs

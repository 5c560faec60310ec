#pragma once

#include "qrs/normality.hpp"
#include "qrs/presentations.hpp"

namespace qrs {

struct NotStrictlyQCommuting : std::runtime_error {
    explicit NotStrictlyQCommuting(const std::string& g)
        : std::runtime_error("generator " + g +
                             " does not strictly q-commute with the others") {}
};

// One catalogued identity: lhs against a linear combination of skeleton
// terms. Terms may carry the printed scalar or be left open (to be solved,
// e.g. the degree-3 factor u in the Z' factorization chain).
struct IdentityTerm {
    FreeElement term;
    std::optional<Laurent> printed;
    std::string label;
};

struct Identity {
    std::string id;
    std::string citation;
    FreeElement lhs;
    std::vector<IdentityTerm> rhs;
};

struct IdentityRecord {
    std::string id;
    std::string citation;
    CheckStatus status;
    PBWElement residual;
    std::string residual_text;
    std::string correction_text;
};

// All displayed identities catalogued for p, including the Z'
// factorization chain for V. Corrections re-solve the scalars inside the
// printed monomial skeleton via nullspace; nothing is hard-coded.
std::vector<IdentityRecord> run_identity_audit(const Presentation& p);

// Audits a single identity; exposed for tests.
IdentityRecord audit_identity(const Identity& ident, const Presentation& p);

struct TorusEigen {
    std::string name;
    Laurent eigenvalue;  // monomial in A1, A2
};

struct TorusReport {
    bool relations_preserved = false;
    std::vector<TorusEigen> eigenvalues;
    CheckReport entries;
};

// Checks that e_i -> A_i e_i preserves the defining relations and computes
// the torus eigenvalues of the named elements.
TorusReport verify_torus(const Presentation& p);

struct QuotientClassification {
    bool confluent = false;
    // Parameter pairs (a, b) from {r, s, r^2, s^2, rs} for which both
    // sl3-type Serre relations vanish in the quotient.
    std::vector<std::pair<Laurent, Laurent>> matching_pairs;
};

// Quotient by a PBW generator that strictly q-commutes with the others;
// the ideal is then the span of the PBW monomials containing it.
std::pair<Presentation, QuotientClassification> quotient_by_pbw_generator(
    const Presentation& p, int g);

enum class StratumKind { prime, primitive, both };

struct Stratum {
    std::vector<std::string> h_prime;  // generator names of the H-prime
    std::string members;               // stratum description
    StratumKind kind;
    std::string citation;
};

struct CatalogReport {
    std::vector<Stratum> strata;
    size_t weyl_order = 0;
    CheckReport checks;
};

CatalogReport stratification_catalog(Algebra which);

}  // namespace qrs

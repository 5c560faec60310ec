#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrs/laurent.hpp"

namespace qrs {

// Word in the PBW generators, letters are generator indices.
using Word = std::vector<int>;
// Dense exponent vector of an ordered PBW monomial, one slot per generator.
using ExpVec = std::vector<int>;
// Z^2 multidegree counting e1 and e2.
using Weight = std::array<int, 2>;

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(int g)
        : std::runtime_error("unknown generator index " + std::to_string(g)) {}
};

// Ascending graded-lex: compare total degree first, then lexicographically.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

class Presentation;

// Linear combination of ordered PBW monomials. Equality of PBWElements is
// the algebra's equality (PBW basis freeness).
class PBWElement {
  public:
    using TermMap = std::map<ExpVec, Laurent, GradedLex>;

    PBWElement() = default;
    static PBWElement monomial(const Laurent& c, const ExpVec& e) {
        PBWElement x;
        if (!c.is_zero()) x.terms_.emplace(e, c);
        return x;
    }
    static PBWElement one(size_t ngens) {
        return monomial(Laurent(1), ExpVec(ngens, 0));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add_term(const ExpVec& e, const Laurent& c);

    PBWElement operator-() const;
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    PBWElement scaled(const Laurent& c) const;

    bool operator==(const PBWElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const PBWElement& o) const { return !(*this == o); }

    // Canonical text: graded-lex descending monomials, e.g. "r^-2*X1*X4 - r^-2*X2".
    std::string str(const std::vector<std::string>& names) const;
    std::string str(const Presentation& p) const;

  private:
    TermMap terms_;
};

// Linear combination of free-algebra words, the pre-normal-form shape.
class FreeElement {
  public:
    using TermMap = std::map<Word, Laurent>;

    FreeElement() = default;
    static FreeElement word(const Laurent& c, const Word& w) {
        FreeElement x;
        if (!c.is_zero()) x.terms_.emplace(w, c);
        return x;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, const Laurent& c);

    FreeElement& operator+=(const FreeElement& o);
    FreeElement& operator-=(const FreeElement& o);
    friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
    FreeElement scaled(const Laurent& c) const;
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

  private:
    TermMap terms_;
};

// One straightening rule X_j X_i -> q X_i X_j + correction (j > i in PBW
// order). Corrections have word length < 2 in both built-in presentations.
struct Rule {
    Laurent q;           // single monomial
    PBWElement corr;
};

class Presentation {
  public:
    Presentation(std::string id, std::vector<std::string> names,
                 std::vector<Weight> weights,
                 std::map<std::pair<int, int>, Rule> rules,
                 std::array<int, 2> e_embed);

    const std::string& id() const { return id_; }
    size_t ngens() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Weight& weight(int g) const { return weights_.at(g); }
    const Rule& rule(int j, int i) const { return rules_.at({j, i}); }
    // Generator index realizing the Chevalley generator e_k (k = 0 or 1).
    int chevalley(int k) const { return e_embed_.at(k); }

  private:
    std::string id_;
    std::vector<std::string> names_;
    std::vector<Weight> weights_;
    std::map<std::pair<int, int>, Rule> rules_;
    std::array<int, 2> e_embed_;
};

PBWElement normal_form(const FreeElement& x, const Presentation& p);
PBWElement multiply(const PBWElement& a, const PBWElement& b, const Presentation& p);

Word word_of(const ExpVec& e);
FreeElement to_free(const PBWElement& x);

Weight weight_of(const ExpVec& m, const Presentation& p);
Weight weight_of_word(const Word& w, const Presentation& p);

// All PBW monomials of weight exactly w, in ascending graded-lex order.
std::vector<ExpVec> weight_space_basis(const Weight& w, const Presentation& p);

struct CriticalPair {
    std::array<int, 3> triple;  // k > j > i
    bool resolved;
    PBWElement difference;
};

struct ConfluenceReport {
    std::vector<CriticalPair> pairs;
    bool all_resolved() const;
};

// Reduces every overlap X_k X_j X_i two ways and compares the results.
ConfluenceReport confluence_check(const Presentation& p);

}  // namespace qrs

#pragma once

#include "qrs/presentations.hpp"

namespace qrs {

struct ZeroElement : std::runtime_error {
    ZeroElement() : std::runtime_error("zero element has no normality certificate") {}
};

// Grid default from the observed exponent range: twice (|w| + 1).
int default_grid_bound(const Weight& w);

// Witness that u is (r,s)-central: per Chevalley generator e_i a pair
// (m_i, n_i) with u e_i = r^m s^n e_i u; or a refutation residual.
struct NormalityCertificate {
    bool central = false;
    std::array<std::pair<int, int>, 2> exponents{};  // valid when central
    bool on_grid_boundary = false;
    int refuting_generator = -1;  // 0 or 1 when !central
    PBWElement residual;
    std::string str() const;  // e.g. "(e1: r^-2 s^-2, e2: r^1 s^1)"
};

NormalityCertificate is_rs_central(const PBWElement& u, const Presentation& p,
                                   int grid_bound);

struct FoundNormal {
    PBWElement element;
    std::array<std::pair<int, int>, 2> exponents;
    bool on_grid_boundary = false;
};

// Weight-space search for (r,s)-central elements. The parallel kernel
// prunes candidate exponent tuples through the leading q-commutation
// scalars of the graded algebra; find_normal_reference scans the whole
// grid with a solve per tuple and is kept as the serial reference.
std::vector<FoundNormal> find_normal(const Weight& w, const Presentation& p,
                                     int grid_bound = -1);
std::vector<FoundNormal> find_normal_reference(const Weight& w, const Presentation& p,
                                               int grid_bound = -1);

std::vector<PBWElement> center_basis(int max_degree, const Presentation& p,
                                     int grid_bound = -1, bool parallel = true);

struct SpanEntry {
    Weight weight;
    size_t dimension_found = 0;
    size_t dimension_predicted = 0;
    bool agree = false;
    bool truncation_flag = false;  // certificate sat on the grid boundary
    std::vector<std::string> basis_texts;
    std::vector<std::array<std::pair<int, int>, 2>> exponent_tuples;
};

struct SpanReport {
    std::vector<SpanEntry> entries;
    bool all_agree() const;
};

// Predicted normal elements at weight w: Z^m Z'^n for V, X3^i X3'^j for U.
std::vector<PBWElement> predicted_normals(const Weight& w, const Presentation& p);

// Weight-by-weight comparison of the search output against the predicted
// span, over all weights of total degree <= max_degree.
SpanReport normal_span_report(int max_degree, const Presentation& p,
                              int grid_bound = -1, bool parallel = true);

}  // namespace qrs

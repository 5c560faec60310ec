#include "qrs/normality.hpp"

#include <algorithm>
#include <set>

#include "qrs/linalg.hpp"

namespace qrs {

int default_grid_bound(const Weight& w) {
    return 2 * (std::abs(w[0]) + std::abs(w[1]) + 1);
}

std::string NormalityCertificate::str() const {
    if (!central) return "not (r,s)-central (generator e" +
                         std::to_string(refuting_generator + 1) + ")";
    std::string out = "(";
    for (int k = 0; k < 2; ++k) {
        if (k) out += ", ";
        out += "e" + std::to_string(k + 1) + ": r^" +
               std::to_string(exponents[k].first) + " s^" +
               std::to_string(exponents[k].second);
    }
    return out + ")";
}

namespace {

PBWElement chevalley_elem(const Presentation& p, int k) {
    ExpVec e(p.ngens(), 0);
    ++e[p.chevalley(k)];
    return PBWElement::monomial(Laurent(1), e);
}

// Scalar lambda with u e_k = lambda e_k u in the associated graded
// (quantum affine space) algebra, for u the monomial X^a. Valid because
// e1 is the first and e2 the last PBW generator in both presentations.
Laurent gr_commutation_scalar(const ExpVec& a, int k, const Presentation& p) {
    Laurent out(1);
    if (k == 0) {
        for (size_t g = 1; g < a.size(); ++g)
            for (int t = 0; t < a[g]; ++t) out = out * p.rule(static_cast<int>(g), 0).q;
    } else {
        const int last = static_cast<int>(p.ngens()) - 1;
        for (int g = 0; g < last; ++g)
            for (int t = 0; t < a[g]; ++t) out = out * p.rule(last, g).q;
        out = out.monomial_invert();
    }
    return out;
}

struct WeightSystem {
    std::vector<ExpVec> basis;
    // Per Chevalley generator: products u*e and e*u of each basis monomial,
    // expressed over the target weight-space basis.
    std::array<std::vector<ExpVec>, 2> target_basis;
    std::array<Mat, 2> ue{Mat(0, 0), Mat(0, 0)};
    std::array<Mat, 2> eu{Mat(0, 0), Mat(0, 0)};
};

WeightSystem build_system(const Weight& w, const Presentation& p) {
    WeightSystem sys;
    sys.basis = weight_space_basis(w, p);
    for (int k = 0; k < 2; ++k) {
        const int g = p.chevalley(k);
        Weight tw{w[0] + p.weight(g)[0], w[1] + p.weight(g)[1]};
        sys.target_basis[k] = weight_space_basis(tw, p);
        std::map<ExpVec, size_t, GradedLex> index;
        for (size_t i = 0; i < sys.target_basis[k].size(); ++i)
            index.emplace(sys.target_basis[k][i], i);
        Mat a(sys.target_basis[k].size(), sys.basis.size());
        Mat b(sys.target_basis[k].size(), sys.basis.size());
        PBWElement ek = chevalley_elem(p, k);
        for (size_t col = 0; col < sys.basis.size(); ++col) {
            PBWElement xa = PBWElement::monomial(Laurent(1), sys.basis[col]);
            PBWElement ue = multiply(xa, ek, p);
            for (const auto& [e, c] : ue.terms()) a.at(index.at(e), col) = c;
            PBWElement eu = multiply(ek, xa, p);
            for (const auto& [e, c] : eu.terms()) b.at(index.at(e), col) = c;
        }
        sys.ue[k] = std::move(a);
        sys.eu[k] = std::move(b);
    }
    return sys;
}

using ExpTuple = std::array<std::pair<int, int>, 2>;

std::vector<FoundNormal> solve_tuple(const WeightSystem& sys, const ExpTuple& t,
                                     const Presentation& p, int grid_bound) {
    const size_t cols = sys.basis.size();
    size_t rows = sys.ue[0].rows() + sys.ue[1].rows();
    Mat m(rows, cols);
    size_t r0 = 0;
    for (int k = 0; k < 2; ++k) {
        Laurent lam = Laurent::rs(t[k].first, t[k].second);
        for (size_t i = 0; i < sys.ue[k].rows(); ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(r0 + i, j) = sys.ue[k].at(i, j) - lam * sys.eu[k].at(i, j);
        r0 += sys.ue[k].rows();
    }
    std::vector<FoundNormal> out;
    for (auto& v : nullspace(std::move(m))) {
        PBWElement el;
        for (size_t j = 0; j < cols; ++j) el.add_term(sys.basis[j], v[j]);
        bool boundary = false;
        for (int k = 0; k < 2; ++k)
            boundary = boundary || std::abs(t[k].first) == grid_bound ||
                       std::abs(t[k].second) == grid_bound;
        out.push_back({std::move(el), t, boundary});
    }
    return out;
}

bool in_grid(const ExpTuple& t, int g) {
    for (const auto& [m, n] : t)
        if (std::abs(m) > g || std::abs(n) > g) return false;
    return true;
}

}  // namespace

NormalityCertificate is_rs_central(const PBWElement& u, const Presentation& p,
                                   int grid_bound) {
    if (u.is_zero()) throw ZeroElement();
    NormalityCertificate cert;
    cert.central = true;
    for (int k = 0; k < 2; ++k) {
        PBWElement ek = chevalley_elem(p, k);
        PBWElement ue = multiply(u, ek, p);
        PBWElement eu = multiply(ek, u, p);
        bool found = false;
        for (int m = -grid_bound; m <= grid_bound && !found; ++m)
            for (int n = -grid_bound; n <= grid_bound && !found; ++n) {
                if (ue.size() != eu.size()) break;
                if (ue == eu.scaled(Laurent::rs(m, n))) {
                    cert.exponents[k] = {m, n};
                    cert.on_grid_boundary = cert.on_grid_boundary ||
                                            std::abs(m) == grid_bound ||
                                            std::abs(n) == grid_bound;
                    found = true;
                }
            }
        if (!found) {
            cert.central = false;
            cert.refuting_generator = k;
            // Residual at the leading-term candidate scalar, if one exists.
            PBWElement res = ue - eu;
            if (!ue.is_zero() && !eu.is_zero()) {
                const auto& lu = *ue.terms().rbegin();
                auto it = eu.terms().find(lu.first);
                if (it != eu.terms().end()) {
                    if (auto q = lu.second.try_divide(it->second); q && q->is_monomial())
                        res = ue - eu.scaled(*q);
                }
            }
            cert.residual = std::move(res);
            return cert;
        }
    }
    return cert;
}

std::vector<FoundNormal> find_normal(const Weight& w, const Presentation& p,
                                     int grid_bound) {
    if (grid_bound < 0) grid_bound = default_grid_bound(w);
    WeightSystem sys = build_system(w, p);
    if (sys.basis.empty()) return {};
    // A nonzero solution forces, on its graded-leading monomial, the exact
    // q-commutation scalars of the quantum affine space; only those tuples
    // can carry solutions, the rest of the grid is skipped.
    std::set<ExpTuple> candidates;
    for (const auto& a : sys.basis) {
        ExpTuple t;
        bool ok = true;
        for (int k = 0; k < 2; ++k) {
            Laurent lam = gr_commutation_scalar(a, k, p);
            try {
                t[k] = lam.monomial_rs_exponents();
            } catch (const NotAMonomial&) {
                ok = false;
            }
        }
        if (ok && in_grid(t, grid_bound)) candidates.insert(t);
    }
    std::vector<FoundNormal> out;
    for (const auto& t : candidates) {
        auto sols = solve_tuple(sys, t, p, grid_bound);
        out.insert(out.end(), std::make_move_iterator(sols.begin()),
                   std::make_move_iterator(sols.end()));
    }
    return out;
}

std::vector<FoundNormal> find_normal_reference(const Weight& w, const Presentation& p,
                                               int grid_bound) {
    if (grid_bound < 0) grid_bound = default_grid_bound(w);
    WeightSystem sys = build_system(w, p);
    if (sys.basis.empty()) return {};
    std::vector<FoundNormal> out;
    for (int m1 = -grid_bound; m1 <= grid_bound; ++m1)
        for (int n1 = -grid_bound; n1 <= grid_bound; ++n1)
            for (int m2 = -grid_bound; m2 <= grid_bound; ++m2)
                for (int n2 = -grid_bound; n2 <= grid_bound; ++n2) {
                    ExpTuple t{{{m1, n1}, {m2, n2}}};
                    auto sols = solve_tuple(sys, t, p, grid_bound);
                    out.insert(out.end(), std::make_move_iterator(sols.begin()),
                               std::make_move_iterator(sols.end()));
                }
    return out;
}

namespace {

std::vector<Weight> weights_up_to(int max_degree) {
    std::vector<Weight> ws;
    for (int d = 0; d <= max_degree; ++d)
        for (int w1 = 0; w1 <= d; ++w1) ws.push_back({w1, d - w1});
    return ws;
}

}  // namespace

std::vector<PBWElement> center_basis(int max_degree, const Presentation& p,
                                     int grid_bound, bool parallel) {
    auto ws = weights_up_to(max_degree);
    std::vector<std::vector<PBWElement>> per(ws.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < ws.size(); ++i) {
        int g = grid_bound < 0 ? default_grid_bound(ws[i]) : grid_bound;
        WeightSystem sys = build_system(ws[i], p);
        if (sys.basis.empty()) continue;
        for (auto& f : solve_tuple(sys, ExpTuple{{{0, 0}, {0, 0}}}, p, g))
            per[i].push_back(std::move(f.element));
    }
    std::vector<PBWElement> out;
    for (auto& v : per)
        for (auto& e : v) out.push_back(std::move(e));
    return out;
}

std::vector<PBWElement> predicted_normals(const Weight& w, const Presentation& p) {
    std::vector<PBWElement> out;
    NamedElement a = derived_element(p.id() == "U" ? "X3p" : "Z", p);
    PBWElement first =
        p.id() == "U" ? PBWElement::monomial(Laurent(1), ExpVec{0, 1, 0}) : a.value;
    PBWElement second = p.id() == "U" ? a.value : derived_element("Zp", p).value;
    Weight wf = p.id() == "U" ? Weight{1, 1} : Weight{1, 2};
    Weight wsnd = p.id() == "U" ? Weight{1, 1} : Weight{2, 2};
    for (int m = 0; m * wf[0] <= w[0] && m * wf[1] <= w[1]; ++m)
        for (int n = 0;; ++n) {
            Weight ww{m * wf[0] + n * wsnd[0], m * wf[1] + n * wsnd[1]};
            if (ww[0] > w[0] || ww[1] > w[1]) break;
            if (ww[0] == w[0] && ww[1] == w[1]) {
                PBWElement x = PBWElement::one(p.ngens());
                for (int t = 0; t < m; ++t) x = multiply(x, first, p);
                for (int t = 0; t < n; ++t) x = multiply(x, second, p);
                out.push_back(std::move(x));
            }
        }
    return out;
}

bool SpanReport::all_agree() const {
    for (const auto& e : entries)
        if (!e.agree) return false;
    return true;
}

SpanReport normal_span_report(int max_degree, const Presentation& p, int grid_bound,
                              bool parallel) {
    auto ws = weights_up_to(max_degree);
    std::vector<SpanEntry> entries(ws.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < ws.size(); ++i) {
        const Weight& w = ws[i];
        SpanEntry e;
        e.weight = w;
        auto found = find_normal(w, p, grid_bound);
        auto predicted = predicted_normals(w, p);
        e.dimension_found = found.size();
        e.dimension_predicted = predicted.size();
        for (const auto& f : found) {
            e.basis_texts.push_back(f.element.str(p));
            e.exponent_tuples.push_back(f.exponents);
            e.truncation_flag = e.truncation_flag || f.on_grid_boundary;
        }
        // Span comparison over the weight-space coordinates.
        auto basis = weight_space_basis(w, p);
        std::map<ExpVec, size_t, GradedLex> index;
        for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], j);
        auto fill = [&](Mat& m, size_t row, const PBWElement& el) {
            for (const auto& [ee, cc] : el.terms()) m.at(row, index.at(ee)) = cc;
        };
        Mat mf(found.size(), basis.size());
        Mat mu(found.size() + predicted.size(), basis.size());
        for (size_t j = 0; j < found.size(); ++j) {
            fill(mf, j, found[j].element);
            fill(mu, j, found[j].element);
        }
        Mat mp(predicted.size(), basis.size());
        for (size_t j = 0; j < predicted.size(); ++j) {
            fill(mp, j, predicted[j]);
            fill(mu, found.size() + j, predicted[j]);
        }
        size_t rf = rank(std::move(mf)), rp = rank(std::move(mp)),
               ru = rank(std::move(mu));
        e.agree = rf == e.dimension_found && rp == e.dimension_predicted &&
                  rf == rp && ru == rf && !e.truncation_flag;
        entries[i] = std::move(e);
    }
    SpanReport rep;
    rep.entries = std::move(entries);
    return rep;
}

}  // namespace qrs

#include "qrs/algebra.hpp"

#include <cassert>
#include <sstream>

namespace qrs {

void PBWElement::add_term(const ExpVec& e, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator-() const {
    PBWElement out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PBWElement PBWElement::scaled(const Laurent& c) const {
    PBWElement out;
    if (c.is_zero()) return out;
    for (const auto& [e, cc] : terms_) out.terms_.emplace(e, cc * c);
    return out;
}

namespace {

std::string monomial_str(const ExpVec& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t g = 0; g < e.size(); ++g) {
        if (e[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[g];
        if (e[g] != 1) out += "^" + std::to_string(e[g]);
    }
    return out;
}

}  // namespace

std::string PBWElement::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Graded-lex descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mon = monomial_str(e, names);
        if (c.is_monomial()) {
            const auto& [ce, cc] = *c.terms().begin();
            if (first) {
                if (cc < 0) os << "-";
            } else {
                os << (cc < 0 ? " - " : " + ");
            }
            std::string cs = Laurent::monomial(abs(cc), ce).str();
            if (mon.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mon;
            } else {
                os << cs << "*" << mon;
            }
        } else {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (!mon.empty()) os << "*" << mon;
        }
        first = false;
    }
    return os.str();
}

std::string PBWElement::str(const Presentation& p) const { return str(p.names()); }

void FreeElement::add_term(const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreeElement FreeElement::scaled(const Laurent& c) const {
    FreeElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, cc] : terms_) out.terms_.emplace(w, cc * c);
    return out;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    FreeElement out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

Presentation::Presentation(std::string id, std::vector<std::string> names,
                           std::vector<Weight> weights,
                           std::map<std::pair<int, int>, Rule> rules,
                           std::array<int, 2> e_embed)
    : id_(std::move(id)), names_(std::move(names)), weights_(std::move(weights)),
      rules_(std::move(rules)), e_embed_(e_embed) {
    const int n = static_cast<int>(names_.size());
    if (weights_.size() != names_.size())
        throw std::invalid_argument("presentation: weights/names size mismatch");
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            auto it = rules_.find({j, i});
            if (it == rules_.end())
                throw std::invalid_argument("presentation: missing rule");
            const Rule& rl = it->second;
            if (!rl.q.is_monomial())
                throw std::invalid_argument("presentation: rule coefficient not a monomial");
            Weight wj{weights_[j][0] + weights_[i][0], weights_[j][1] + weights_[i][1]};
            for (const auto& [e, c] : rl.corr.terms()) {
                if (e.size() != names_.size())
                    throw std::invalid_argument("presentation: correction arity");
                int len = 0, w0 = 0, w1 = 0;
                for (int g = 0; g < n; ++g) {
                    len += e[g];
                    w0 += e[g] * weights_[g][0];
                    w1 += e[g] * weights_[g][1];
                }
                if (len >= 2)
                    throw std::invalid_argument("presentation: correction word too long");
                if (w0 != wj[0] || w1 != wj[1])
                    throw std::invalid_argument("presentation: rule not weight-homogeneous");
            }
        }
}

namespace {

#ifndef NDEBUG
// Termination measure: (word length, inversion count), lexicographic.
std::pair<size_t, size_t> measure(const Word& w) {
    size_t inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return {w.size(), inv};
}
#endif

}  // namespace

PBWElement normal_form(const FreeElement& x, const Presentation& p) {
    const int n = static_cast<int>(p.ngens());
    PBWElement out;
    std::vector<std::pair<Word, Laurent>> work(x.terms().begin(), x.terms().end());
    for (const auto& [w, c] : work)
        for (int g : w)
            if (g < 0 || g >= n) throw UnknownGenerator(g);
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t pos = 0;
        while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
        if (w.size() < 2 || pos + 1 == w.size()) {
            ExpVec e(n, 0);
            for (int g : w) ++e[g];
            out.add_term(e, c);
            continue;
        }
        const Rule& rl = p.rule(w[pos], w[pos + 1]);
#ifndef NDEBUG
        auto m0 = measure(w);
#endif
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        assert(measure(swapped) < m0);
        work.emplace_back(std::move(swapped), c * rl.q);
        for (const auto& [ce, cc] : rl.corr.terms()) {
            Word nw(w.begin(), w.begin() + pos);
            for (int g = 0; g < n; ++g)
                for (int k = 0; k < ce[g]; ++k) nw.push_back(g);
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            assert(measure(nw) < m0);
            work.emplace_back(std::move(nw), c * cc);
        }
    }
    return out;
}

Word word_of(const ExpVec& e) {
    Word w;
    for (size_t g = 0; g < e.size(); ++g)
        for (int k = 0; k < e[g]; ++k) w.push_back(static_cast<int>(g));
    return w;
}

FreeElement to_free(const PBWElement& x) {
    FreeElement out;
    for (const auto& [e, c] : x.terms()) out.add_term(word_of(e), c);
    return out;
}

PBWElement multiply(const PBWElement& a, const PBWElement& b, const Presentation& p) {
    FreeElement f;
    for (const auto& [ea, ca] : a.terms()) {
        Word wa = word_of(ea);
        for (const auto& [eb, cb] : b.terms()) {
            Word w = wa;
            Word wb = word_of(eb);
            w.insert(w.end(), wb.begin(), wb.end());
            f.add_term(w, ca * cb);
        }
    }
    return normal_form(f, p);
}

Weight weight_of(const ExpVec& m, const Presentation& p) {
    Weight w{0, 0};
    for (size_t g = 0; g < m.size(); ++g) {
        w[0] += m[g] * p.weight(static_cast<int>(g))[0];
        w[1] += m[g] * p.weight(static_cast<int>(g))[1];
    }
    return w;
}

Weight weight_of_word(const Word& w, const Presentation& p) {
    Weight out{0, 0};
    for (int g : w) {
        out[0] += p.weight(g)[0];
        out[1] += p.weight(g)[1];
    }
    return out;
}

namespace {

void enumerate_weight(const Presentation& p, int g, Weight rem, ExpVec& cur,
                      std::vector<ExpVec>& out) {
    const int n = static_cast<int>(p.ngens());
    if (g == n) {
        if (rem[0] == 0 && rem[1] == 0) out.push_back(cur);
        return;
    }
    const Weight& wg = p.weight(g);
    for (int k = 0;; ++k) {
        Weight r{rem[0] - k * wg[0], rem[1] - k * wg[1]};
        if (r[0] < 0 || r[1] < 0) break;
        cur[g] = k;
        enumerate_weight(p, g + 1, r, cur, out);
        cur[g] = 0;
        if (wg[0] == 0 && wg[1] == 0) break;  // zero-weight generator guard
    }
}

}  // namespace

std::vector<ExpVec> weight_space_basis(const Weight& w, const Presentation& p) {
    std::vector<ExpVec> out;
    if (w[0] < 0 || w[1] < 0) return out;
    ExpVec cur(p.ngens(), 0);
    enumerate_weight(p, 0, w, cur, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

bool ConfluenceReport::all_resolved() const {
    for (const auto& cp : pairs)
        if (!cp.resolved) return false;
    return true;
}

ConfluenceReport confluence_check(const Presentation& p) {
    ConfluenceReport rep;
    const int n = static_cast<int>(p.ngens());
    for (int k = 2; k < n; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i) {
                // Leftmost-first: rewrite (k,j) first -- that is what
                // normal_form does on the word (k, j, i).
                PBWElement left = normal_form(FreeElement::word(Laurent(1), {k, j, i}), p);
                // Rightmost-first: rewrite the (j,i) overlap once by hand,
                // then normalize.
                const Rule& rl = p.rule(j, i);
                FreeElement f = FreeElement::word(rl.q, {k, i, j});
                for (const auto& [ce, cc] : rl.corr.terms()) {
                    Word w{k};
                    Word tail = word_of(ce);
                    w.insert(w.end(), tail.begin(), tail.end());
                    f.add_term(w, cc);
                }
                PBWElement right = normal_form(f, p);
                PBWElement diff = left - right;
                rep.pairs.push_back({{k, j, i}, diff.is_zero(), std::move(diff)});
            }
    return rep;
}

}  // namespace qrs

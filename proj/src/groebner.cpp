#include "liedual/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace liedual {

int IdealBasis::nvars() const {
    if (generators.empty()) return 0;
    return generators[0].nvars();
}

namespace {

// Reduce f against gb until no term of the remainder is divisible by a
// leading monomial. gb entries must be monic.
MultiPoly full_reduce(MultiPoly f, const std::vector<MultiPoly>& gb) {
    MultiPoly remainder(f.nvars());
    while (!f.is_zero()) {
        bool reduced = false;
        const Monomial& lm = f.leading_monomial();
        for (const auto& g : gb) {
            if (g.leading_monomial().divides(lm)) {
                Monomial q = lm.divide(g.leading_monomial());
                MultiPoly shift(f.nvars());
                shift.add_term(q, f.leading_coeff());
                f = f - shift * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MultiPoly head(f.nvars());
            head.add_term(f.leading_monomial(), f.leading_coeff());
            remainder = remainder + head;
            f = f - head;
        }
    }
    return remainder;
}

std::vector<MultiPoly> interreduce(std::vector<MultiPoly> basis) {
    // drop redundant leading terms, then tail-reduce each element
    std::vector<MultiPoly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial()) &&
                !(basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
        else basis[i] = MultiPoly::zero(basis[i].nvars());
    }
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        MultiPoly r = full_reduce(kept[i], others);
        if (!r.is_zero()) out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return basis;

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.push_back({i, j});

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial &mi = basis[i].leading_monomial(),
                       &mj = basis[j].leading_monomial();
        if (mi.coprime(mj)) continue;  // product criterion
        Monomial l = Monomial::lcm(mi, mj);
        MultiPoly si(basis[i].nvars()), sj(basis[j].nvars());
        si.add_term(l.divide(mi), Rat(1));
        sj.add_term(l.divide(mj), Rat(1));
        MultiPoly s = si * basis[i] - sj * basis[j];
        MultiPoly r = full_reduce(s, basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            for (std::size_t k = 0; k + 1 < basis.size(); ++k)
                pairs.push_back({k, basis.size() - 1});
        }
    }
    return interreduce(basis);
}

const std::vector<MultiPoly>& groebner(IdealBasis& I) {
    if (!I.groebner_cache) I.groebner_cache = groebner_basis(I.generators);
    return *I.groebner_cache;
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& gb) {
    return full_reduce(f, gb);
}

bool ideal_member(const MultiPoly& f, IdealBasis& I) {
    return normal_form(f, groebner(I)).is_zero();
}

bool ideal_equal(IdealBasis& I, IdealBasis& J) {
    return groebner(I) == groebner(J);
}

IdealBasis leading_form_ideal(IdealBasis& I) {
    const auto& gb = groebner(I);
    std::vector<MultiPoly> forms;
    for (const auto& g : gb) forms.push_back(g.leading_form());
    IdealBasis out(forms);
    // degree compatibility of grevlex: the top forms are already a Groebner
    // basis; running Buchberger normalizes to the reduced one
    out.groebner_cache = groebner_basis(forms);
    return out;
}

IdealBasis vanishing_ideal(const std::vector<std::vector<Rat>>& points, int nvars) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != nvars)
            throw std::invalid_argument("vanishing_ideal: point dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("vanishing_ideal: duplicate points");

    const std::size_t npts = points.size();
    // Buchberger-Moller: scan monomials in increasing grevlex order; a
    // monomial whose evaluation vector depends linearly on those of the
    // standard monomials yields a Groebner basis element.
    struct Row {
        std::vector<Rat> vec;        // reduced evaluation vector
        std::size_t pivot;           // first nonzero position
        std::vector<Rat> combo;      // expression in standard monomials
    };
    std::vector<Monomial> standard;
    std::vector<std::vector<Rat>> standard_eval;  // raw evaluation vectors
    std::vector<Row> rows;
    std::vector<MultiPoly> gb;

    auto eval_monomial = [&](const Monomial& m) {
        std::vector<Rat> v(npts, Rat(1));
        for (int var = 0; var < nvars; ++var)
            for (int k = 0; k < m.e[var]; ++k)
                for (std::size_t p = 0; p < npts; ++p) v[p] *= points[p][var];
        return v;
    };

    auto cmp = [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(cmp)> queue(cmp);
    std::set<std::vector<int>> queued;
    Monomial one = Monomial::one(nvars);
    queue.push(one);
    queued.insert(one.e);

    while (!queue.empty()) {
        Monomial m = queue.top();
        queue.pop();
        bool under_staircase = true;
        for (const auto& g : gb)
            if (g.leading_monomial().divides(m)) {
                under_staircase = false;
                break;
            }
        if (!under_staircase) continue;

        std::vector<Rat> v = eval_monomial(m);
        std::vector<Rat> combo(standard.size(), Rat(0));
        for (const auto& row : rows) {
            if (v[row.pivot] == 0) continue;
            Rat c = v[row.pivot];
            for (std::size_t p = 0; p < npts; ++p) v[p] -= c * row.vec[p];
            for (std::size_t k = 0; k < row.combo.size(); ++k)
                combo[k] += c * row.combo[k];
        }
        std::size_t pivot = npts;
        for (std::size_t p = 0; p < npts; ++p)
            if (v[p] != 0) {
                pivot = p;
                break;
            }
        if (pivot == npts) {
            // dependent: m - sum combo_k * standard_k is a GB element
            MultiPoly g(nvars);
            g.add_term(m, Rat(1));
            for (std::size_t k = 0; k < standard.size(); ++k)
                if (combo[k] != 0) g.add_term(standard[k], -combo[k]);
            gb.push_back(g);
        } else {
            // reduced vector = (eval(m) - sum combo_k eval(s_k)) / c, so the
            // stored combination carries -combo_k/c plus 1/c on m itself
            Rat c = v[pivot];
            Row row;
            row.pivot = pivot;
            row.vec.resize(npts);
            for (std::size_t p = 0; p < npts; ++p) row.vec[p] = v[p] / c;
            row.combo.resize(standard.size() + 1, Rat(0));
            for (std::size_t k = 0; k < standard.size(); ++k)
                row.combo[k] = -combo[k] / c;
            row.combo[standard.size()] = Rat(1) / c;
            // previous combos gain a zero slot for the new standard monomial
            for (auto& r : rows) r.combo.push_back(Rat(0));
            rows.push_back(std::move(row));
            standard.push_back(m);
            for (int var = 0; var < nvars; ++var) {
                Monomial next = m;
                next.e[var] += 1;
                if (queued.insert(next.e).second) queue.push(next);
            }
        }
    }
    if (standard.size() != npts)
        throw std::logic_error("vanishing_ideal: standard monomial count mismatch");

    IdealBasis out(gb);
    out.groebner_cache = interreduce(gb);
    return out;
}

IdealBasis parse_ideal(const std::string& text, int nvars) {
    std::vector<MultiPoly> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = semi == std::string::npos
                                ? text.substr(start)
                                : text.substr(start, semi - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            gens.push_back(parse_poly(piece, nvars));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (gens.empty()) throw std::invalid_argument("empty ideal text");
    return IdealBasis(gens);
}

namespace {

// Standard monomials of a zero-dimensional leading-term staircase.
std::vector<Monomial> standard_monomials(const std::vector<MultiPoly>& gb, int nvars) {
    for (const auto& g : gb)
        if (g.leading_monomial().degree() == 0) return {};  // unit ideal
    // finiteness: every variable needs a pure power among the leading terms
    for (int var = 0; var < nvars; ++var) {
        bool pure = false;
        for (const auto& g : gb) {
            const auto& e = g.leading_monomial().e;
            bool only_var = e[var] > 0;
            for (int u = 0; u <= nvars && only_var; ++u)
                if (u != var && e[u] > 0) only_var = false;
            if (only_var) {
                pure = true;
                break;
            }
        }
        if (!pure)
            throw std::invalid_argument(
                "quotient is infinite-dimensional (no pure power of x" +
                std::to_string(var + 1) + " in the leading terms)");
    }
    std::vector<Monomial> out;
    std::vector<Monomial> frontier = {Monomial::one(nvars)};
    std::set<std::vector<int>> seen = {Monomial::one(nvars).e};
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        bool standard = true;
        for (const auto& g : gb)
            if (g.leading_monomial().divides(m)) {
                standard = false;
                break;
            }
        if (!standard) continue;
        out.push_back(m);
        for (int var = 0; var < nvars; ++var) {
            Monomial next = m;
            next.e[var] += 1;
            if (seen.insert(next.e).second) frontier.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

}  // namespace

long quotient_dimension(IdealBasis& I) {
    const auto& gb = groebner(I);
    int nvars = I.nvars();
    for (const auto& g : gb)
        if (g.involves_hbar())
            throw std::invalid_argument("quotient_dimension: hbar in generators");
    return static_cast<long>(standard_monomials(gb, nvars).size());
}

GradedQuotient quotient_analytics(IdealBasis I) {
    const auto& gb = groebner(I);
    int nvars = I.nvars();
    for (const auto& g : gb) {
        if (!g.is_homogeneous())
            throw std::invalid_argument("quotient_analytics: ideal is not homogeneous");
        if (g.involves_hbar())
            throw std::invalid_argument("quotient_analytics: hbar in generators");
    }
    GradedQuotient q;
    q.nvars = nvars;
    q.ideal = I;
    q.monomial_basis = standard_monomials(gb, nvars);
    q.dim = static_cast<long>(q.monomial_basis.size());

    int top = 0;
    for (const auto& m : q.monomial_basis) top = std::max(top, m.degree());
    q.hilbert.assign(top + 1, 0);
    for (const auto& m : q.monomial_basis) ++q.hilbert[m.degree()];

    // socle = intersection of the kernels of multiplication by each variable,
    // computed by exact Gaussian elimination on the stacked matrices
    const long D = q.dim;
    if (D == 0) {
        q.socle_dim = 0;
        return q;
    }
    std::map<std::vector<int>, long> index;
    for (long k = 0; k < D; ++k) index[q.monomial_basis[k].e] = k;

    std::vector<std::vector<Rat>> mat;  // rows of the stacked system
    for (int var = 0; var < nvars; ++var) {
        // columns of M_var: NF(x_var * basis_k)
        std::vector<std::vector<Rat>> col(D, std::vector<Rat>(D, Rat(0)));
        for (long k = 0; k < D; ++k) {
            MultiPoly xm(nvars);
            Monomial m = q.monomial_basis[k];
            m.e[var] += 1;
            xm.add_term(m, Rat(1));
            MultiPoly nf = normal_form(xm, gb);
            for (const auto& [mono, c] : nf.terms()) col[k][index.at(mono.e)] = c;
        }
        for (long r = 0; r < D; ++r) {
            std::vector<Rat> row(D);
            bool nonzero = false;
            for (long k = 0; k < D; ++k) {
                row[k] = col[k][r];
                if (row[k] != 0) nonzero = true;
            }
            if (nonzero) mat.push_back(std::move(row));
        }
    }
    // rank of the stacked matrix
    long rank = 0;
    std::size_t row_used = 0;
    for (long colv = 0; colv < D && row_used < mat.size(); ++colv) {
        std::size_t piv = row_used;
        while (piv < mat.size() && mat[piv][colv] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[row_used], mat[piv]);
        Rat lead = mat[row_used][colv];
        for (std::size_t rr = 0; rr < mat.size(); ++rr) {
            if (rr == row_used || mat[rr][colv] == 0) continue;
            Rat f = mat[rr][colv] / lead;
            for (long cc = colv; cc < D; ++cc) mat[rr][cc] -= f * mat[row_used][cc];
        }
        ++rank;
        ++row_used;
    }
    q.socle_dim = D - rank;
    return q;
}

}  // namespace liedual

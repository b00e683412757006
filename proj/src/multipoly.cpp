#include "liedual/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liedual {

int Monomial::degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
    if (e.size() != other.e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < e.size(); ++i) out.e[i] += other.e[i];
    return out;
}

Monomial Monomial::divide(const Monomial& other) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
        out.e[i] -= other.e[i];
        if (out.e[i] < 0) throw std::invalid_argument("monomial not divisible");
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        out.e[i] = std::max(a.e[i], b.e[i]);
    return out;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && other.e[i] > 0) return false;
    return true;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
}

namespace {
bool grevlex_greater(const Monomial& a, const Monomial& b) {
    return grevlex_less(b, a);
}
}  // namespace

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Monomial m = Monomial::one(nvars);
    m.e[i] = 1;
    p.add_term(m, Rat(1));
    return p;
}

MultiPoly MultiPoly::hbar(int nvars) {
    MultiPoly p(nvars);
    Monomial m = Monomial::one(nvars);
    m.e[nvars] = 1;
    p.add_term(m, Rat(1));
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front().first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front().second;
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const auto& t, const Monomial& mm) { return grevlex_greater(t.first, mm); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(m.e.size()) != nvars_ + 1)
        throw std::invalid_argument("monomial size mismatch");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const auto& t, const Monomial& mm) { return grevlex_greater(t.first, mm); });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly out(nvars_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() ||
            (i < terms_.size() && grevlex_greater(terms_[i].first, other.terms_[j].first))) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() ||
                   grevlex_greater(other.terms_[j].first, terms_[i].first)) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Rat c = terms_[i].second + other.terms_[j].second;
            if (c != 0) out.terms_.push_back({terms_[i].first, c});
            ++i;
            ++j;
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    return *this + (-other);
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    std::map<Monomial, Rat, decltype(&grevlex_greater)> acc(&grevlex_greater);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma * mb;
            auto [it, fresh] = acc.try_emplace(m, 0);
            it->second += ca * cb;
        }
    MultiPoly out(nvars_);
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.push_back({m, c});
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, cc] : out.terms_) cc *= c;
    return out;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rat(1) / leading_coeff());
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MultiPoly out = constant(nvars_, Rat(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

MultiPoly MultiPoly::leading_form() const {
    MultiPoly out(nvars_);
    int d = degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.push_back({m, c});
    return out;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool MultiPoly::involves_hbar() const {
    for (const auto& [m, c] : terms_)
        if (m.e[nvars_] > 0) return true;
    return false;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images,
                                const MultiPoly* hbar_image) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: need one image per variable");
    int out_vars = images.empty() ? (hbar_image ? hbar_image->nvars() : nvars_)
                                  : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != out_vars)
            throw std::invalid_argument("substitute: image variable counts differ");
    MultiPoly h = hbar_image ? *hbar_image : MultiPoly::hbar(out_vars);
    if (h.nvars() != out_vars)
        throw std::invalid_argument("substitute: hbar image variable count differs");

    // power cache per variable
    std::vector<std::vector<MultiPoly>> pows(nvars_ + 1);
    auto power = [&](int var, int k) -> const MultiPoly& {
        auto& tab = pows[var];
        if (tab.empty()) tab.push_back(MultiPoly::constant(out_vars, Rat(1)));
        while (static_cast<int>(tab.size()) <= k)
            tab.push_back(tab.back() * (var == nvars_ ? h : images[var]));
        return tab[k];
    };

    MultiPoly out(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (int v = 0; v <= nvars_; ++v)
            if (m.e[v] > 0) term = term * power(v, m.e[v]);
        out = out + term;
    }
    return out;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        if (m.e[nvars_] > 0)
            throw std::invalid_argument("evaluate: polynomial involves hbar");
        Rat t = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < m.e[v]; ++k) t *= point[v];
        out += t;
    }
    return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int v) -> std::string {
        if (!names.empty()) return names[v];
        if (v == nvars_) return "h";
        return "x" + std::to_string(v + 1);
    };
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string factors;
        for (int v = 0; v <= nvars_; ++v) {
            if (m.e[v] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var_name(v);
            if (m.e[v] > 1) factors += "^" + std::to_string(m.e[v]);
        }
        if (factors.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += to_string(a) + "*" + factors;
        }
    }
    return out;
}

MultiPoly weyl_act_poly(const WeylElement& w, const MultiPoly& f) {
    if (w.rank() != f.nvars())
        throw std::invalid_argument("weyl_act_poly: rank mismatch");
    int n = f.nvars();
    // x_j -> signs[perm(j)] * x_{perm(j)}
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j)
        images.push_back(MultiPoly::variable(n, w.perm[j]) * Rat(w.signs[w.perm[j]]));
    return f.substitute(images);
}

MultiPoly rho_shifted_act(const WeylElement& w, const MultiPoly& f,
                          const LieType& t) {
    if (w.rank() != f.nvars() || t.rank != f.nvars())
        throw std::invalid_argument("rho_shifted_act: rank mismatch");
    int n = f.nvars();
    Weight r = rho(t);
    WeylElement winv = w.inverse();
    MultiPoly h = MultiPoly::hbar(n);
    // x_j -> (w^{-1}(x + h rho))_j - h rho_j
    //      = signs_winv[j] * (x_{perm_winv^{-1}(j)} + h rho_{...}) - h rho_j
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        int src = w.perm[j];  // perm_winv^{-1}(j)
        MultiPoly img =
            (MultiPoly::variable(n, src) + h * r[src]) * Rat(winv.signs[j]);
        img = img - h * r[j];
        images.push_back(img);
    }
    return f.substitute(images);
}

MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k) {
    if (vars.empty()) throw std::invalid_argument("elementary_symmetric: no variables");
    int nv = vars[0].nvars();
    if (k < 0 || k > static_cast<int>(vars.size()))
        throw std::invalid_argument("elementary_symmetric: bad index");
    std::vector<MultiPoly> acc(k + 1, MultiPoly::zero(nv));
    acc[0] = MultiPoly::constant(nv, Rat(1));
    for (const auto& v : vars)
        for (int j = k; j >= 1; --j) acc[j] = acc[j] + acc[j - 1] * v;
    return acc[k];
}

std::vector<MultiPoly> invariant_generators(const LeviSpec& l) {
    int n = l.ambient.rank;
    std::vector<MultiPoly> out;
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        std::vector<MultiPoly> vars;
        for (int i = s; i < e; ++i) vars.push_back(MultiPoly::variable(n, i));
        for (int k = 1; k <= e - s; ++k)
            out.push_back(elementary_symmetric(vars, k));
    }
    if (l.tail > 0) {
        int tb = l.tail_begin();
        std::vector<MultiPoly> squares;
        for (int i = tb; i < n; ++i) {
            MultiPoly x = MultiPoly::variable(n, i);
            squares.push_back(x * x);
        }
        int top = l.tail;
        if (l.ambient.family == LieFamily::D) top = l.tail - 1;
        for (int k = 1; k <= top; ++k)
            out.push_back(elementary_symmetric(squares, k));
        if (l.ambient.family == LieFamily::D) {
            MultiPoly prod = MultiPoly::constant(n, Rat(1));
            for (int i = tb; i < n; ++i) prod = prod * MultiPoly::variable(n, i);
            out.push_back(prod);
        }
    }
    return out;
}

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    MultiPoly parse() {
        MultiPoly out = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("unexpected character at offset " +
                                        std::to_string(pos_) + " in polynomial");
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly parse_expr() {
        MultiPoly out = MultiPoly::zero(nvars_);
        bool neg = eat('-');
        out = out + (neg ? -parse_term() : parse_term());
        for (;;) {
            if (eat('+'))
                out = out + parse_term();
            else if (eat('-'))
                out = out - parse_term();
            else
                break;
        }
        return out;
    }

    MultiPoly parse_term() {
        MultiPoly out = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                out = out * parse_factor();
            } else if (pos_ < s_.size() &&
                       (s_[pos_] == 'x' || s_[pos_] == 'h' || s_[pos_] == '(')) {
                out = out * parse_factor();  // implicit product
            } else {
                break;
            }
        }
        return out;
    }

    MultiPoly parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("truncated polynomial");
        MultiPoly base(nvars_);
        if (s_[pos_] == '(') {
            ++pos_;
            base = parse_expr();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
        } else if (s_[pos_] == 'x') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_) throw std::invalid_argument("variable index expected");
            int idx = std::stoi(s_.substr(start, pos_ - start));
            if (idx < 1 || idx > nvars_)
                throw std::invalid_argument("variable x" + std::to_string(idx) +
                                            " out of range");
            base = MultiPoly::variable(nvars_, idx - 1);
        } else if (s_[pos_] == 'h') {
            ++pos_;
            base = MultiPoly::hbar(nvars_);
        } else if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            base = MultiPoly::constant(nvars_, parse_rat(s_.substr(start, pos_ - start)));
        } else {
            throw std::invalid_argument(std::string("unexpected '") + s_[pos_] +
                                        "' in polynomial");
        }
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_) throw std::invalid_argument("exponent expected");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int nvars_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    return PolyParser(text, nvars).parse();
}

}  // namespace liedual

#include "liedual/root_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liedual {

LieFamily family_from_char(char c) {
    switch (c) {
        case 'A': return LieFamily::A;
        case 'B': return LieFamily::B;
        case 'C': return LieFamily::C;
        case 'D': return LieFamily::D;
        default: throw std::invalid_argument(std::string("unknown family: ") + c);
    }
}

LieFamily dual_family(LieFamily f) {
    switch (f) {
        case LieFamily::B: return LieFamily::C;
        case LieFamily::C: return LieFamily::B;
        default: return f;
    }
}

LieType::LieType(LieFamily f, int n) : family(f), rank(n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (f == LieFamily::D && n < 2)
        throw std::invalid_argument("type D requires rank >= 2");
}

int LieType::partition_size() const {
    switch (family) {
        case LieFamily::A: return rank;
        case LieFamily::B: return 2 * rank + 1;
        case LieFamily::C:
        case LieFamily::D: return 2 * rank;
    }
    throw std::logic_error("unreachable");
}

LieType LieType::langlands_dual() const {
    return LieType(dual_family(family), rank);
}

std::string LieType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

LieType parse_lie_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type: '" + s + "'");
    LieFamily f = family_from_char(s[0]);
    std::size_t pos = 0;
    int n = 0;
    try {
        n = std::stoi(s.substr(1), &pos);
    } catch (...) {
        throw std::invalid_argument("bad rank in type: '" + s + "'");
    }
    if (pos + 1 != s.size()) throw std::invalid_argument("bad type: '" + s + "'");
    return LieType(f, n);
}

unsigned long weyl_order(const LieType& t) {
    if (t.rank > 14)
        throw std::invalid_argument(
            "weyl_order: rank " + std::to_string(t.rank) +
            " exceeds the supported combinatorial range (14)");
    unsigned long fact = 1;
    for (int i = 2; i <= t.rank; ++i) fact *= i;
    switch (t.family) {
        case LieFamily::A: return fact;
        case LieFamily::B:
        case LieFamily::C: return fact << t.rank;
        case LieFamily::D: return fact << (t.rank - 1);
    }
    throw std::logic_error("unreachable");
}

WeylElement::WeylElement(int n) : perm(n), signs(n, 1) {
    std::iota(perm.begin(), perm.end(), 0);
}

WeylElement::WeylElement(std::vector<int> p, std::vector<int> s)
    : perm(std::move(p)), signs(std::move(s)) {
    if (perm.size() != signs.size())
        throw std::invalid_argument("perm/sign size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    for (int s1 : signs)
        if (s1 != 1 && s1 != -1) throw std::invalid_argument("signs must be +-1");
}

bool WeylElement::is_identity() const {
    for (int i = 0; i < rank(); ++i)
        if (perm[i] != i || signs[i] != 1) return false;
    return true;
}

WeylElement WeylElement::inverse() const {
    int n = rank();
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        p[perm[i]] = i;
        s[i] = signs[perm[i]];
    }
    return WeylElement(std::move(p), std::move(s));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
    int n = rank();
    if (other.rank() != n) throw std::invalid_argument("rank mismatch");
    // (u v).x = u.(v.x): perm = perm_u o perm_v, sign_i = su_i * sv_{pu^{-1}(i)}
    std::vector<int> p(n), s(n);
    WeylElement uinv = inverse();
    for (int i = 0; i < n; ++i) {
        p[i] = perm[other.perm[i]];
        s[i] = signs[i] * other.signs[uinv.perm[i]];
    }
    return WeylElement(std::move(p), std::move(s));
}

bool WeylElement::operator<(const WeylElement& other) const {
    int n = rank();
    for (int i = 0; i < n; ++i) {
        int a = signs[i] * (perm[i] + 1);
        int b = other.signs[i] * (other.perm[i] + 1);
        // one-line entries compared as signed integers
        if (a != b) return a < b;
    }
    return false;
}

std::string WeylElement::one_line() const {
    std::string out = "[";
    for (int i = 0; i < rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(signs[i] * (perm[i] + 1));
    }
    return out + "]";
}

Weight act_on_weight(const WeylElement& w, const Weight& v) {
    int n = w.rank();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("act_on_weight: rank mismatch");
    Weight out(n);
    WeylElement winv = w.inverse();
    for (int i = 0; i < n; ++i) out[i] = Rat(w.signs[i]) * v[winv.perm[i]];
    return out;
}

LeviSpec::LeviSpec(LieType amb, std::vector<int> blocks, int tail_rank)
    : ambient(amb), gl_blocks(std::move(blocks)), tail(tail_rank) {
    int sum = std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0);
    for (int b : gl_blocks)
        if (b < 1) throw std::invalid_argument("gl block sizes must be positive");
    if (tail < 0) throw std::invalid_argument("negative tail");
    if (sum + tail != ambient.rank)
        throw std::invalid_argument("levi blocks + tail must sum to ambient rank");
    if (ambient.family == LieFamily::A && tail != 0)
        throw std::invalid_argument("type A levi has no tail");
    if (ambient.family == LieFamily::D && tail == 1)
        throw std::invalid_argument("type D tail of rank 1 is a gl1 block");
}

int LeviSpec::character_dim() const {
    int k = num_blocks();
    return ambient.family == LieFamily::A ? k - 1 : k;
}

unsigned long LeviSpec::weyl_order() const {
    unsigned long o = 1;
    for (int b : gl_blocks)
        for (int i = 2; i <= b; ++i) o *= i;
    if (tail > 0) o *= liedual::weyl_order(LieType(ambient.family, tail));
    return o;
}

std::pair<int, int> LeviSpec::block_range(int b) const {
    int start = 0;
    for (int i = 0; i < b; ++i) start += gl_blocks[i];
    return {start, start + gl_blocks[b]};
}

int LeviSpec::tail_begin() const { return ambient.rank - tail; }

bool LeviSpec::is_full_torus() const {
    return tail == 0 &&
           std::all_of(gl_blocks.begin(), gl_blocks.end(),
                       [](int b) { return b == 1; });
}

std::string LeviSpec::str() const {
    std::string out = ambient.str() + ":";
    if (gl_blocks.empty() && tail == 0) return out + "torus";
    if (is_full_torus()) return out + "torus";
    for (int i = 0; i < num_blocks(); ++i) {
        if (i) out += ',';
        out += "gl" + std::to_string(gl_blocks[i]);
    }
    if (tail > 0) {
        if (!gl_blocks.empty()) out += '|';
        out += (ambient.family == LieFamily::C ? "sp" : "so") +
               std::to_string(tail);
    }
    return out;
}

LeviSpec parse_levi_body(const LieType& ambient, const std::string& body) {
    if (body.empty()) throw std::invalid_argument("empty levi spec");
    if (body == "torus")
        return LeviSpec(ambient, std::vector<int>(ambient.rank, 1), 0);
    std::string blocks_part = body;
    int tail = 0;
    auto bar = body.find('|');
    if (bar != std::string::npos) {
        blocks_part = body.substr(0, bar);
        std::string tail_part = body.substr(bar + 1);
        std::string expect = ambient.family == LieFamily::C ? "sp" : "so";
        if (tail_part.substr(0, 2) != expect)
            throw std::invalid_argument("tail '" + tail_part +
                                        "' does not match ambient family");
        try {
            tail = std::stoi(tail_part.substr(2));
        } catch (...) {
            throw std::invalid_argument("bad tail rank in '" + tail_part + "'");
        }
    }
    std::vector<int> blocks;
    if (!blocks_part.empty()) {
        std::stringstream ss(blocks_part);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.substr(0, 2) != "gl")
                throw std::invalid_argument("bad levi block: '" + item + "'");
            try {
                blocks.push_back(std::stoi(item.substr(2)));
            } catch (...) {
                throw std::invalid_argument("bad levi block: '" + item + "'");
            }
        }
    }
    return LeviSpec(ambient, blocks, tail);
}

LeviSpec parse_levi(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("levi spec needs the form C3:gl3 (got '" + s +
                                    "')");
    LieType amb = parse_lie_type(s.substr(0, colon));
    return parse_levi_body(amb, s.substr(colon + 1));
}

namespace {

Weight unit(int n, int i, int c = 1) {
    Weight w(n, Rat(0));
    w[i] = Rat(c);
    return w;
}

Weight axis_pair(int n, int i, int j, int ci, int cj) {
    Weight w(n, Rat(0));
    w[i] = Rat(ci);
    w[j] = Rat(cj);
    return w;
}

}  // namespace

std::vector<Weight> positive_roots(const LieType& t) {
    int n = t.rank;
    std::vector<Weight> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(axis_pair(n, i, j, 1, -1));
    if (t.family == LieFamily::B || t.family == LieFamily::C ||
        t.family == LieFamily::D) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back(axis_pair(n, i, j, 1, 1));
    }
    if (t.family == LieFamily::B)
        for (int i = 0; i < n; ++i) out.push_back(unit(n, i, 1));
    if (t.family == LieFamily::C)
        for (int i = 0; i < n; ++i) out.push_back(unit(n, i, 2));
    return out;
}

std::vector<Weight> roots(const LieType& t) {
    std::vector<Weight> out = positive_roots(t);
    std::size_t npos = out.size();
    for (std::size_t k = 0; k < npos; ++k) {
        Weight neg = out[k];
        for (auto& c : neg) c = -c;
        out.push_back(neg);
    }
    return out;
}

Weight coroot_of(const Weight& root) {
    Rat norm2(0);
    for (const auto& c : root) norm2 += c * c;
    if (norm2 == 0) throw std::invalid_argument("zero root");
    Weight out = root;
    for (auto& c : out) c = 2 * c / norm2;
    return out;
}

std::vector<Weight> coroots(const LieType& t) {
    std::vector<Weight> out;
    for (const auto& r : roots(t)) out.push_back(coroot_of(r));
    return out;
}

Rat pairing(const Weight& v, const Weight& coroot) {
    if (v.size() != coroot.size())
        throw std::invalid_argument("pairing: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * coroot[i];
    return s;
}

Weight rho(const LieType& t) {
    int n = t.rank;
    Weight out(n);
    switch (t.family) {
        case LieFamily::A:
            for (int i = 0; i < n; ++i) out[i] = rat(n - 1 - 2 * i, 2);
            break;
        case LieFamily::B:
            for (int i = 0; i < n; ++i) out[i] = rat(2 * (n - i) - 1, 2);
            break;
        case LieFamily::C:
            for (int i = 0; i < n; ++i) out[i] = Rat(n - i);
            break;
        case LieFamily::D:
            for (int i = 0; i < n; ++i) out[i] = Rat(n - 1 - i);
            break;
    }
    return out;
}

Weight rho_levi(const LeviSpec& l) {
    int n = l.ambient.rank;
    Weight out(n, Rat(0));
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        int a = e - s;
        for (int i = s; i < e; ++i) out[i] = rat(a - 1 - 2 * (i - s), 2);
    }
    if (l.tail > 0) {
        Weight tail_rho = rho(LieType(l.ambient.family, l.tail));
        int tb = l.tail_begin();
        for (int i = 0; i < l.tail; ++i) out[tb + i] = tail_rho[i];
    }
    return out;
}

std::vector<Weight> levi_roots(const LeviSpec& l) {
    int n = l.ambient.rank;
    std::vector<Weight> out;
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        for (int i = s; i < e; ++i)
            for (int j = s; j < e; ++j)
                if (i != j) out.push_back(axis_pair(n, i, j, 1, -1));
    }
    if (l.tail > 0) {
        int tb = l.tail_begin();
        for (const auto& r : roots(LieType(l.ambient.family, l.tail))) {
            Weight w(n, Rat(0));
            for (int i = 0; i < l.tail; ++i) w[tb + i] = r[i];
            out.push_back(w);
        }
    }
    return out;
}

namespace {

bool is_positive_root(const Weight& r) {
    for (const auto& c : r) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

}  // namespace

bool is_p_antidominant(const Weight& v, const LeviSpec& p) {
    // Delta_p = positive roots plus Levi roots (standard parabolic).
    std::vector<Weight> dp = positive_roots(p.ambient);
    for (const auto& r : levi_roots(p))
        if (!is_positive_root(r)) dp.push_back(r);
    for (const auto& r : dp) {
        Rat x = pairing(v, coroot_of(r));
        if (x > 0 && x.get_den() == 1) return false;
    }
    return true;
}

bool is_l_regular(const Weight& v, const LeviSpec& p) {
    std::set<std::vector<Rat>> levi;
    for (const auto& r : levi_roots(p)) levi.insert(r);
    for (const auto& r : roots(p.ambient)) {
        if (levi.count(r)) continue;
        if (pairing(v, coroot_of(r)) == 0) return false;
    }
    return true;
}

bool is_integral(const Weight& v, const LieType& t) {
    for (const auto& cr : coroots(t))
        if (pairing(v, cr).get_den() != 1) return false;
    return true;
}

WeylGroup::WeylGroup(const LieType& t) : type_(t) {
    if (liedual::weyl_order(t) > 5'000'000ul)
        throw std::invalid_argument("Weyl group of " + t.str() +
                                    " is too large to enumerate");
    int n = t.rank;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool signed_group = t.family != LieFamily::A;
    do {
        if (!signed_group) {
            elements_.emplace_back(perm, std::vector<int>(n, 1));
            continue;
        }
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (t.family == LieFamily::D && __builtin_popcount(mask) % 2 != 0)
                continue;
            std::vector<int> signs(n, 1);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) signs[i] = -1;
            elements_.emplace_back(perm, signs);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(elements_.begin(), elements_.end());
    if (elements_.size() != liedual::weyl_order(t))
        throw std::logic_error("weyl group enumeration size mismatch");

    // length = number of positive roots made negative (small integer vectors)
    std::vector<std::vector<int>> pos;
    for (const auto& r : positive_roots(t)) {
        std::vector<int> ri(n);
        for (int i = 0; i < n; ++i) ri[i] = static_cast<int>(r[i].get_num().get_si());
        pos.push_back(std::move(ri));
    }
    lengths_.reserve(elements_.size());
    for (const auto& w : elements_) {
        WeylElement winv = w.inverse();
        int len = 0;
        for (const auto& r : pos) {
            int lead = 0;
            for (int i = 0; i < n && lead == 0; ++i)
                lead = w.signs[i] * r[winv.perm[i]];
            if (lead < 0) ++len;
        }
        lengths_.push_back(len);
    }
}

int WeylGroup::length(const WeylElement& w) const {
    return lengths_[index_of(w)];
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
    if (it == elements_.end() || !(*it == w))
        throw std::invalid_argument("element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<WeylElement> levi_generators(const LeviSpec& l) {
    int n = l.ambient.rank;
    std::vector<WeylElement> gens;
    auto transposition = [&](int i, int j) {
        WeylElement w(n);
        std::swap(w.perm[i], w.perm[j]);
        return w;
    };
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        for (int i = s; i + 1 < e; ++i) gens.push_back(transposition(i, i + 1));
    }
    if (l.tail > 0) {
        int tb = l.tail_begin();
        for (int i = tb; i + 1 < n; ++i) gens.push_back(transposition(i, i + 1));
        if (l.ambient.family == LieFamily::D) {
            // reflection in e_{n-1} + e_n
            WeylElement w = transposition(n - 2, n - 1);
            w.signs[n - 2] = -1;
            w.signs[n - 1] = -1;
            gens.push_back(w);
        } else {
            WeylElement w(n);
            w.signs[n - 1] = -1;
            gens.push_back(w);
        }
    }
    return gens;
}

bool levi_contains(const LeviSpec& l, const WeylElement& w) {
    int n = l.ambient.rank;
    if (w.rank() != n) return false;
    for (int b = 0; b < l.num_blocks(); ++b) {
        auto [s, e] = l.block_range(b);
        for (int i = s; i < e; ++i) {
            if (w.perm[i] < s || w.perm[i] >= e) return false;
            if (w.signs[w.perm[i]] != 1) return false;
        }
    }
    int tb = l.tail_begin();
    int negs = 0;
    for (int i = tb; i < n; ++i) {
        if (w.perm[i] < tb) return false;
        if (w.signs[w.perm[i]] == -1) ++negs;
    }
    if (l.ambient.family == LieFamily::D && negs % 2 != 0) return false;
    return true;
}

namespace {

// Orbit of w under left multiplication by W_M generators and/or right
// multiplication by W_L generators.
std::vector<std::size_t> coset_orbit(const WeylGroup& W, std::size_t start,
                                     const std::vector<WeylElement>& left_gens,
                                     const std::vector<WeylElement>& right_gens,
                                     std::vector<char>& visited) {
    std::vector<std::size_t> orbit;
    std::queue<std::size_t> work;
    work.push(start);
    visited[start] = 1;
    while (!work.empty()) {
        std::size_t idx = work.front();
        work.pop();
        orbit.push_back(idx);
        const WeylElement& w = W.elements()[idx];
        auto visit = [&](const WeylElement& u) {
            std::size_t i = W.index_of(u);
            if (!visited[i]) {
                visited[i] = 1;
                work.push(i);
            }
        };
        for (const auto& g : left_gens) visit(g * w);
        for (const auto& g : right_gens) visit(w * g);
    }
    return orbit;
}

WeylElement extremal_rep(const WeylGroup& W,
                         const std::vector<std::size_t>& orbit,
                         RepChoice choice, bool* unique = nullptr) {
    int best_len = -1;
    std::size_t best = orbit[0];
    int ties = 0;
    for (std::size_t idx : orbit) {
        int len = W.length(W.elements()[idx]);
        bool better = best_len < 0 ||
                      (choice == RepChoice::Shortest ? len < best_len : len > best_len);
        if (better) {
            best_len = len;
            best = idx;
            ties = 1;
        } else if (len == best_len) {
            ++ties;
            if (W.elements()[idx] < W.elements()[best]) best = idx;
        }
    }
    if (unique) *unique = ties == 1;
    return W.elements()[best];
}

}  // namespace

std::vector<WeylElement> coset_reps(const WeylGroup& W, const LeviSpec& sub,
                                    CosetKind kind, RepChoice choice) {
    if (kind == CosetKind::DoubleCoset)
        throw std::invalid_argument("coset_reps handles one-sided cosets");
    auto gens = levi_generators(sub);
    std::vector<WeylElement> empty;
    std::vector<char> visited(W.size(), 0);
    std::vector<WeylElement> reps;
    for (std::size_t i = 0; i < W.size(); ++i) {
        if (visited[i]) continue;
        auto orbit = kind == CosetKind::LeftQuotient
                         ? coset_orbit(W, i, gens, empty, visited)
                         : coset_orbit(W, i, empty, gens, visited);
        reps.push_back(extremal_rep(W, orbit, choice));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<DoubleCoset> double_cosets(const WeylGroup& W, const LeviSpec& m,
                                       const LeviSpec& l) {
    if (!(m.ambient == l.ambient) || !(m.ambient == W.type()))
        throw std::invalid_argument("double_cosets: ambient mismatch");
    auto mg = levi_generators(m);
    auto lg = levi_generators(l);
    std::size_t free_size = m.weyl_order() * l.weyl_order();
    std::vector<char> visited(W.size(), 0);
    std::vector<DoubleCoset> out;
    for (std::size_t i = 0; i < W.size(); ++i) {
        if (visited[i]) continue;
        auto orbit = coset_orbit(W, i, mg, lg, visited);
        DoubleCoset dc;
        bool unique = false;
        dc.min_rep = extremal_rep(W, orbit, RepChoice::Shortest, &unique);
        if (!unique)
            throw std::logic_error("double coset without unique minimal element");
        dc.size = orbit.size();
        dc.free = orbit.size() == free_size;
        out.push_back(std::move(dc));
    }
    std::sort(out.begin(), out.end(),
              [](const DoubleCoset& a, const DoubleCoset& b) {
                  return a.min_rep < b.min_rep;
              });
    return out;
}

std::vector<WeylElement> free_double_cosets(const WeylGroup& W,
                                            const LeviSpec& m,
                                            const LeviSpec& l) {
    std::vector<WeylElement> out;
    for (const auto& dc : double_cosets(W, m, l))
        if (dc.free) out.push_back(dc.min_rep);
    return out;
}

FreeCosetCensus free_coset_census(const WeylGroup& W, const LeviSpec& m,
                                  const LeviSpec& l) {
    FreeCosetCensus census{0, 0, 0};
    auto dcs = double_cosets(W, m, l);
    for (const auto& dc : dcs)
        if (dc.free) ++census.by_orbit_size;

    // w shortest in W_M w and longest in w W_L
    auto short_left = coset_reps(W, m, CosetKind::LeftQuotient, RepChoice::Shortest);
    auto long_right = coset_reps(W, l, CosetKind::RightQuotient, RepChoice::Longest);
    std::set<WeylElement> shorts(short_left.begin(), short_left.end());
    for (const auto& w : long_right)
        if (shorts.count(w)) ++census.by_sh_lo;

    // double cosets with w^{-1}(Delta_M) cap Delta_L empty
    std::set<std::vector<Rat>> delta_l;
    for (const auto& r : levi_roots(l)) delta_l.insert(r);
    auto delta_m = levi_roots(m);
    for (const auto& dc : dcs) {
        WeylElement winv = dc.min_rep.inverse();
        bool empty_meet = true;
        for (const auto& r : delta_m) {
            if (delta_l.count(act_on_weight(winv, r))) {
                empty_meet = false;
                break;
            }
        }
        if (empty_meet) ++census.by_root_condition;
    }
    return census;
}

}  // namespace liedual

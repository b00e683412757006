#include "liedual/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liedual {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), value));
}

std::vector<int> Partition::distinct_values() const {
    std::vector<int> vals;
    for (int x : parts)
        if (vals.empty() || vals.back() != x) vals.push_back(x);
    return vals;
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (...) {
            throw std::invalid_argument("bad partition part: '" + item + "'");
        }
        if (pos != item.size() || v <= 0)
            throw std::invalid_argument("bad partition part: '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(parts);
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    std::size_t k = std::max(a.parts.size(), b.parts.size());
    for (std::size_t i = 0; i < k; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

Partition transpose(const Partition& p) {
    if (p.empty()) return p;
    std::vector<int> cols(p.parts[0], 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) ++cols[j];
    return Partition(cols);
}

bool is_orbit_partition_family(const Partition& p, LieFamily f) {
    if (f == LieFamily::A) return true;
    for (int v : p.distinct_values()) {
        bool even_part = v % 2 == 0;
        bool constrained = (f == LieFamily::C) ? !even_part : even_part;
        if (constrained && p.multiplicity(v) % 2 != 0) return false;
    }
    return true;
}

bool is_orbit_partition(const Partition& p, const LieType& t) {
    if (p.size() != t.partition_size()) return false;
    return is_orbit_partition_family(p, t.family);
}

namespace {

int required_parity(LieFamily f) {
    switch (f) {
        case LieFamily::B: return 1;
        case LieFamily::C:
        case LieFamily::D: return 0;
        default: throw std::invalid_argument("collapse is for B/C/D only");
    }
}

}  // namespace

// Standard box-moving collapse: while some constrained value has odd
// multiplicity, take the largest such value, remove a box from its last row
// and drop it onto the first later row that keeps the sequence weakly
// decreasing (appending a new row of 1 if none does). Each move strictly
// lowers the partition in dominance order, and the result is the largest
// admissible partition dominated by the input (cross-checked by the
// enumeration oracle in tests).
Partition collapse(const Partition& p, LieFamily f) {
    if (f == LieFamily::A) return p;
    if (p.size() % 2 != required_parity(f))
        throw std::invalid_argument("collapse: size parity does not match family");
    std::vector<int> q = p.parts;
    for (;;) {
        if (is_orbit_partition_family(Partition(q), f)) return Partition(q);
        std::size_t r = q.size();
        for (std::size_t i = 0; i < q.size();) {
            std::size_t j = i;
            while (j < q.size() && q[j] == q[i]) ++j;
            bool even_part = q[i] % 2 == 0;
            bool constrained = (f == LieFamily::C) ? !even_part : even_part;
            if (constrained && (j - i) % 2 != 0) {
                r = j - 1;  // last row of the violating block
                break;
            }
            i = j;
        }
        if (r == q.size())
            throw std::logic_error("collapse: inadmissible but no violating part");
        q[r] -= 1;
        std::size_t target = q.size();
        for (std::size_t j = r + 1; j < q.size(); ++j) {
            if (q[j] + 1 <= q[j - 1]) {
                target = j;
                break;
            }
        }
        if (target == q.size())
            q.push_back(1);
        else
            q[target] += 1;
        q.erase(std::remove(q.begin(), q.end(), 0), q.end());
    }
}

OrbitLabel::OrbitLabel(Partition p, LieType t, std::optional<VeryEvenFlag> flag)
    : partition(std::move(p)), ambient(t), very_even(flag) {
    if (!is_orbit_partition(partition, ambient))
        throw std::invalid_argument("partition " + partition.str() +
                                    " is not a nilpotent orbit in type " + ambient.str());
    bool all_even = ambient.family == LieFamily::D &&
                    std::all_of(partition.parts.begin(), partition.parts.end(),
                                [](int v) { return v % 2 == 0; });
    if (very_even && !all_even)
        throw std::invalid_argument("very-even flag on a non-very-even orbit");
}

std::string OrbitLabel::str() const {
    std::string out = ambient.str() + ":" + partition.str();
    if (very_even) out += *very_even == VeryEvenFlag::I ? " (I)" : " (II)";
    return out;
}

namespace {

Partition remove_one_box_max(const Partition& p) {
    // Removing from the smallest part keeps every leading partial sum, hence
    // dominates all other single-box removals.
    std::vector<int> q = p.parts;
    q.back() -= 1;
    if (q.back() == 0) q.pop_back();
    if (q.empty()) throw std::invalid_argument("cannot remove a box from (1)");
    return Partition(q);
}

}  // namespace

OrbitLabel bvls_dual(const OrbitLabel& o) {
    const LieType dual_type = o.ambient.langlands_dual();
    const Partition& p = o.partition;
    switch (o.ambient.family) {
        case LieFamily::A:
            return OrbitLabel(transpose(p), dual_type);
        case LieFamily::C: {
            std::vector<int> e = p.parts;
            e.push_back(1);
            return OrbitLabel(collapse(transpose(Partition(e)), LieFamily::B),
                              dual_type);
        }
        case LieFamily::B: {
            Partition t = transpose(p);
            return OrbitLabel(collapse(remove_one_box_max(t), LieFamily::C),
                              dual_type);
        }
        case LieFamily::D:
            // very-even labels I/II map to each other; the partition data is
            // label-independent and the flag is dropped here
            return OrbitLabel(collapse(transpose(p), LieFamily::D), dual_type);
    }
    throw std::logic_error("unreachable");
}

OrbitLabel sat_regular_levi(const LeviSpec& l) {
    std::vector<int> parts;
    for (int a : l.gl_blocks) {
        parts.push_back(a);
        parts.push_back(a);
    }
    int m = l.tail;
    switch (l.ambient.family) {
        case LieFamily::A:
            // regular in gl-blocks only; in type A the blocks themselves are
            // the Jordan type (no doubling): partition = blocks
            parts.clear();
            for (int a : l.gl_blocks) parts.push_back(a);
            break;
        case LieFamily::C:
            if (m > 0) parts.push_back(2 * m);
            break;
        case LieFamily::B:
            parts.push_back(2 * m + 1);  // m = 0 contributes the part 1
            break;
        case LieFamily::D:
            if (m > 0) {
                parts.push_back(2 * m - 1);
                parts.push_back(1);
            }
            break;
    }
    int have = std::accumulate(parts.begin(), parts.end(), 0);
    int need = l.ambient.partition_size();
    if (have > need) throw std::logic_error("levi partition exceeds ambient size");
    for (; have < need; ++have) parts.push_back(1);
    Partition p(parts);
    if (l.ambient.family != LieFamily::A) p = collapse(p, l.ambient.family);
    return OrbitLabel(p, l.ambient);
}

OrbitLabel induced_from_zero(const LeviSpec& l) {
    LeviSpec dual_levi(l.ambient.langlands_dual(), l.gl_blocks, l.tail);
    return bvls_dual(sat_regular_levi(dual_levi));
}

bool a_group_trivial(const Partition& p, LieFamily f) {
    std::vector<int> odd_vals, even_vals;
    for (int v : p.distinct_values())
        (v % 2 == 0 ? even_vals : odd_vals).push_back(v);
    switch (f) {
        case LieFamily::A: return true;
        case LieFamily::C:
            if (even_vals.size() > 1) return false;
            return even_vals.empty() || p.multiplicity(even_vals[0]) % 2 == 1;
        case LieFamily::B:
            return odd_vals.size() == 1;
        case LieFamily::D:
            if (odd_vals.size() > 2) return false;
            if (odd_vals.size() == 2)
                return p.multiplicity(odd_vals[0]) % 2 == 1 &&
                       p.multiplicity(odd_vals[1]) % 2 == 1;
            return true;
    }
    throw std::logic_error("unreachable");
}

TriState normal_orbit_image(const Partition& p, LieFamily f) {
    if (!a_group_trivial(p, f)) return TriState::NotApplicable;
    std::vector<int> odd_vals, even_vals;
    for (int v : p.distinct_values())
        (v % 2 == 0 ? even_vals : odd_vals).push_back(v);
    switch (f) {
        case LieFamily::C: {
            // ((2a)^{d0}, odd parts), d0 odd, 2a+1 >= largest odd part
            if (even_vals.size() != 1) return TriState::No;
            int two_a = even_vals[0];
            if (p.multiplicity(two_a) % 2 == 0) return TriState::No;
            if (!odd_vals.empty() && odd_vals[0] > two_a + 1) return TriState::No;
            return TriState::Yes;
        }
        case LieFamily::B: {
            // ((2a+1)^{d0}, even parts), d0 odd, 2a+1 <= smallest even + 1
            if (odd_vals.size() != 1) return TriState::No;
            int odd = odd_vals[0];
            if (p.multiplicity(odd) % 2 == 0) return TriState::No;
            if (!even_vals.empty() && odd > even_vals.back() + 1) return TriState::No;
            return TriState::Yes;
        }
        case LieFamily::D: {
            // (b) all even, at most two distinct values
            if (odd_vals.empty()) {
                return even_vals.size() <= 2 ? TriState::Yes : TriState::No;
            }
            // (a) ((2a+1)^{d0}, even parts, 1^d), d0 and d odd, 2a+2 >= evens
            int v = odd_vals[0];
            if (odd_vals.size() == 2) {
                if (odd_vals[1] != 1) return TriState::No;
                if (p.multiplicity(v) % 2 == 0 || p.multiplicity(1) % 2 == 0)
                    return TriState::No;
            } else {
                // single odd value; needs the (2a+1)- and 1-groups to merge,
                // i.e. v == 1 with d0 + d even and both odd
                if (v != 1 || p.multiplicity(1) % 2 != 0 || p.multiplicity(1) < 2)
                    return TriState::No;
                v = 1;
            }
            if (!even_vals.empty() && even_vals[0] > v + 1) return TriState::No;
            return TriState::Yes;
        }
        default:
            return TriState::NotApplicable;
    }
}

namespace {

bool all_values_in(const Partition& p, const std::vector<int>& allowed) {
    for (int v : p.distinct_values())
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            return false;
    return true;
}

bool mult_even(const Partition& p, int v) { return p.multiplicity(v) % 2 == 0; }
bool mult_odd(const Partition& p, int v) { return p.multiplicity(v) % 2 == 1; }

}  // namespace

bool surjectivity_necessary(const Partition& p, LieFamily f) {
    const auto vals = p.distinct_values();
    const int maxv = p.parts.empty() ? 0 : p.parts[0];
    switch (f) {
        case LieFamily::A:
            return true;
        case LieFamily::C: {
            // ((2a+1)^{2d1}, (2a)^{2d2+1}, (2a-1)^{2d3}, 1^{2d4})
            if (all_values_in(p, {1}) && mult_even(p, 1)) return true;  // a = 0
            for (int a = 1; 2 * a <= maxv + 1; ++a) {
                std::vector<int> allowed = {2 * a + 1, 2 * a, 2 * a - 1};
                if (2 * a - 1 != 1) allowed.push_back(1);
                if (!all_values_in(p, allowed)) continue;
                if (p.multiplicity(2 * a) == 0 || mult_even(p, 2 * a)) continue;
                if (mult_odd(p, 2 * a + 1)) continue;
                if (2 * a - 1 != 1 && mult_odd(p, 2 * a - 1)) continue;
                if (mult_odd(p, 1)) continue;
                return true;
            }
            return false;
        }
        case LieFamily::B: {
            // ((2a+2)^{2d1}, (2a+1)^{2d2+1}, (2a)^{2d3})
            for (int a = 0; 2 * a + 1 <= maxv; ++a) {
                std::vector<int> allowed = {2 * a + 2, 2 * a + 1};
                if (a > 0) allowed.push_back(2 * a);
                if (!all_values_in(p, allowed)) continue;
                if (mult_even(p, 2 * a + 1)) continue;
                if (mult_odd(p, 2 * a + 2)) continue;
                if (a > 0 && mult_odd(p, 2 * a)) continue;
                return true;
            }
            return false;
        }
        case LieFamily::D: {
            auto even_mults = [&](std::vector<int> required_even) {
                for (int v : required_even)
                    if (mult_odd(p, v)) return false;
                return true;
            };
            for (int a = 0; a <= maxv; ++a) {
                // (1) ((2a+2)^{2d1}, (2a+1)^{2d2})
                if (all_values_in(p, {2 * a + 2, 2 * a + 1}) &&
                    even_mults({2 * a + 2, 2 * a + 1}))
                    return true;
                // (2) ((2a+1)^{2d1}, (2a)^{2d2})
                {
                    std::vector<int> allowed = {2 * a + 1};
                    if (a > 0) allowed.push_back(2 * a);
                    if (all_values_in(p, allowed) && mult_even(p, 2 * a + 1) &&
                        (a == 0 || mult_even(p, 2 * a)))
                        return true;
                }
                // (3) ((2a+3)^{2d1+1}, (2a+2)^{2d2}, (2a+1)^{2d3+1})
                if (all_values_in(p, {2 * a + 3, 2 * a + 2, 2 * a + 1}) &&
                    mult_odd(p, 2 * a + 3) && mult_even(p, 2 * a + 2) &&
                    mult_odd(p, 2 * a + 1))
                    return true;
                // (4) ((2a+1)^{2d1+1}, (2b+1)^{2d2+1})
                for (int b = 0; b < a; ++b) {
                    if (all_values_in(p, {2 * a + 1, 2 * b + 1}) &&
                        mult_odd(p, 2 * a + 1) && mult_odd(p, 2 * b + 1))
                        return true;
                }
                // (5) ((2a+1)^{2d1+1}, (2a)^{2d2}, 2^{2d3}, 1^{2d4+1})
                {
                    std::vector<int> allowed = {2 * a + 1, 1, 2};
                    if (a > 0) allowed.push_back(2 * a);
                    bool odd_groups_ok =
                        a == 0 ? p.multiplicity(1) >= 2 && mult_even(p, 1)
                               : mult_odd(p, 2 * a + 1) && mult_odd(p, 1);
                    // for a == 1 the (2a)- and 2-groups merge
                    bool even_groups_ok =
                        (a <= 1 || mult_even(p, 2 * a)) && mult_even(p, 2);
                    if (all_values_in(p, allowed) && odd_groups_ok && even_groups_ok)
                        return true;
                }
            }
            return false;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<long> kim_betti(int k) {
    if (k < 0) throw std::invalid_argument("kim_betti: k must be >= 0");
    auto binom = [](int n, int r) -> long {
        if (r < 0 || r > n) return 0;
        long v = 1;
        for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
        return v;
    };
    std::vector<long> d;
    for (int i = 0; 2 * i <= 2 * k + 3; ++i)
        d.push_back(binom(2 * k + 1, i) + binom(2 * k + 1, i - 2));
    return d;
}

long orbit_dimension(const Partition& p, const LieType& t) {
    if (!is_orbit_partition(p, t))
        throw std::invalid_argument("orbit_dimension: not an orbit partition");
    long sum_sq = 0;
    for (int q : transpose(p).parts) sum_sq += static_cast<long>(q) * q;
    long odd_parts = 0;
    for (int v : p.parts)
        if (v % 2 == 1) ++odd_parts;
    long m = p.size();
    switch (t.family) {
        case LieFamily::A:
            return m * m - sum_sq;
        case LieFamily::C:
            // 2n^2 + n - (sum q_i^2 + #odd)/2
            return (m * m + m) / 2 - (sum_sq + odd_parts) / 2;
        case LieFamily::B:
        case LieFamily::D:
            return (m * m - m) / 2 - (sum_sq - odd_parts) / 2;
    }
    throw std::logic_error("unreachable");
}

long ambient_dimension(const LieType& t) {
    long m = t.partition_size();
    switch (t.family) {
        case LieFamily::A: return m * m;
        case LieFamily::C: return (m * m + m) / 2;
        case LieFamily::B:
        case LieFamily::D: return (m * m - m) / 2;
    }
    throw std::logic_error("unreachable");
}

long levi_dimension(const LeviSpec& l) {
    long dim = 0;
    for (int a : l.gl_blocks) dim += static_cast<long>(a) * a;
    if (l.ambient.family != LieFamily::A && l.tail > 0)
        dim += ambient_dimension(LieType(l.ambient.family, l.tail));
    return dim;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur,
                   LieFamily f, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p(cur);
        if (is_orbit_partition_family(p, f)) out.push_back(p);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        cur.push_back(next);
        enumerate_rec(remaining - next, next, cur, f, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_orbit_partitions(int size, LieFamily f) {
    std::vector<Partition> out;
    if (size <= 0) return out;
    std::vector<int> cur;
    enumerate_rec(size, size, cur, f, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace liedual

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace liedual {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3/2", "-1", "0". Whitespace is not tolerated.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// "3/2,1/2,-1/2" -> vector of rationals
std::vector<Rat> parse_rat_vector(const std::string& s);
std::string format_rat_vector(const std::vector<Rat>& v);

}  // namespace liedual

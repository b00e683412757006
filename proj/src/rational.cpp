#include "liedual/rational.hpp"

#include <sstream>

namespace liedual {

std::vector<Rat> parse_rat_vector(const std::string& s) {
    std::vector<Rat> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    return out;
}

std::string format_rat_vector(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

}  // namespace liedual

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arq {

using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline long long as_integer(const Rat& r) {
    if (r.denominator() != 1) throw std::runtime_error("expected integral value, got " + to_string(r));
    return r.numerator();
}

} // namespace arq

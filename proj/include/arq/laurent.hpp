#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arq/rational.hpp"

namespace arq {

// Sparse exact Laurent polynomial in one variable. Zero coefficients are
// never stored, so operator== is coefficientwise equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) { set(0, c); }

    static LaurentPoly term(int exp, const Rat& c) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }

    const std::map<int, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rat coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void set(int exp, const Rat& c) {
        if (c == Rat(0)) c_.erase(exp);
        else c_[exp] = c;
    }

    void add(int exp, const Rat& c) { set(exp, coeff(exp) + c); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(const Rat& s, const LaurentPoly& p) {
        LaurentPoly r;
        for (const auto& [e, c] : p.c_) r.add(e, s * c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }

    // p(t) -> t^k p(t)
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.set(e + k, c);
        return r;
    }

    // p(t) -> p(1/t)
    LaurentPoly inverted_variable() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.set(-e, c);
        return r;
    }

    LaurentPoly truncated(int min_exp, int max_exp) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_)
            if (e >= min_exp && e <= max_exp) r.set(e, c);
        return r;
    }

    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    bool integral() const {
        for (const auto& [e, c] : c_)
            if (c.denominator() != 1) return false;
        return true;
    }

    // "t^-1 + 2t^3", "0" when empty; exact rationals rendered as a/b.
    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : c_) {
            Rat a = c;
            if (first) {
                if (a < Rat(0)) { os << "-"; a = -a; }
            } else {
                os << (a < Rat(0) ? " - " : " + ");
                if (a < Rat(0)) a = -a;
            }
            first = false;
            const bool unit = (a == Rat(1));
            if (e == 0) os << to_string(a);
            else {
                if (!unit) os << to_string(a) << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

    std::vector<std::pair<int, Rat>> pairs() const {
        return {c_.begin(), c_.end()};
    }

private:
    std::map<int, Rat> c_;
};

} // namespace arq

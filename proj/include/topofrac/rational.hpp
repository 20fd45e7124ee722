// Exact rational scalar used throughout the library.
//
// Every coordinate, breakpoint, metric value and report number is a
// boost cpp_rational; nothing in the core ever rounds.  Strings use the
// "p/q" form (or a plain integer) so reports stay drift-free.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topofrac {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int rat_floor(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

// x mod m, result in [0, m); m > 0.
inline Rat rat_mod(const Rat& x, const Rat& m) {
    Rat r = x - Rat(rat_floor(x / m)) * m;
    if (r < 0) r += m;  // guard against cpp_int division edge cases
    if (r >= m) r -= m;
    return r;
}

inline double rat_double(const Rat& x) { return x.convert_to<double>(); }

inline std::string rat_str(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only.  Anything
// else (floats, names of irrationals) is rejected: the model spaces are
// rational by construction.
inline std::optional<Rat> try_parse_rat(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<Int> {
        if (t.empty()) return std::nullopt;
        bool neg = false;
        std::size_t i = 0;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) return std::nullopt;
        Int v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return std::nullopt;
            v = v * 10 + (t[i] - '0');
        }
        return neg ? Int(-v) : v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

inline Rat parse_rat(std::string_view s) {
    auto r = try_parse_rat(s);
    if (!r) throw std::invalid_argument("not a rational literal: " + std::string(s));
    return *r;
}

// 2^-e and 3^-e as exact rationals; e >= 0.
inline Rat pow2(int e) {
    Int p = Int(1) << (e >= 0 ? e : -e);
    return e >= 0 ? Rat(p) : Rat(1, p);
}

inline Rat pow_int(const Rat& base, int e) {
    Rat r = 1;
    Rat b = e >= 0 ? base : Rat(1) / base;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
}

}  // namespace topofrac

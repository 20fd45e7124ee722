// Cantor-set addressing and the devil's staircase.
//
// Addresses are binary sequences with an eventually periodic tail.  The
// copy C of the Cantor set used by the structured interval sits in
// [1/3, 2/3]: h(t) = 1/3 + (1/3) * sum 2 t_i 3^-i.  Gap closures X_s
// have endpoints l(s) = h(s 0 1^inf) and r(s) = h(s 1 0^inf).
#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace topofrac {

struct CantorAddress {
    std::vector<int> digits;  // finite prefix over {0,1}
    std::vector<int> tail;    // periodic block repeated forever; empty means all-0

    static CantorAddress zeros() { return {}; }
    static CantorAddress ones() { return {{}, {1}}; }
    static CantorAddress finite_then(std::vector<int> digits, std::vector<int> tail) {
        return {std::move(digits), std::move(tail)};
    }
    // s followed by 0 1^inf — the left endpoint address of gap s.
    static CantorAddress gap_left(std::vector<int> s) {
        s.push_back(0);
        return {std::move(s), {1}};
    }
    // s followed by 1 0^inf — the right endpoint address of gap s.
    static CantorAddress gap_right(std::vector<int> s) {
        s.push_back(1);
        return {std::move(s), {}};
    }

    CantorAddress prepend(int digit) const {
        CantorAddress a = *this;
        a.digits.insert(a.digits.begin(), digit);
        return a;
    }
    // Complement every digit (0 <-> 1), including the tail.
    CantorAddress opposite() const {
        CantorAddress a = *this;
        for (int& d : a.digits) d = 1 - d;
        if (a.tail.empty()) a.tail = {1};  // all-0 tail flips to all-1
        else {
            bool all_zero = true;
            for (int& d : a.tail) {
                d = 1 - d;
                all_zero = all_zero && d == 0;
            }
            if (all_zero) a.tail.clear();
        }
        return a;
    }
};

// Value of the binary sequence as sum a_i 2^-i (the Cantor function of
// the corresponding Cantor-set point).
inline Rat cantor_binary_value(const CantorAddress& addr) {
    Rat v = 0;
    Rat w(1, 2);
    for (int d : addr.digits) {
        if (d) v += w;
        w /= 2;
    }
    if (!addr.tail.empty()) {
        Rat block = 0;
        Rat bw(1, 2);
        for (int d : addr.tail) {
            if (d) block += bw;
            bw /= 2;
        }
        int p = (int)addr.tail.size();
        // w here is 2^-(n), block scaled by geometric series of ratio 2^-p
        v += 2 * w * block / (1 - pow_int(Rat(1, 2), p));
    }
    return v;
}

// Point of the standard middle-thirds Cantor set in [0,1]:
// sum 2 a_i 3^-i, exact via geometric series for the periodic tail.
inline Rat cantor_standard_point(const CantorAddress& addr) {
    Rat v = 0;
    Rat w(1, 3);
    for (int d : addr.digits) {
        if (d) v += 2 * w;
        w /= 3;
    }
    if (!addr.tail.empty()) {
        Rat block = 0;
        Rat bw(1, 3);
        for (int d : addr.tail) {
            if (d) block += 2 * bw;
            bw /= 3;
        }
        int p = (int)addr.tail.size();
        v += 3 * w * block / (1 - pow_int(Rat(1, 3), p));
    }
    return v;
}

// h(addr): the copy C inside [1/3, 2/3].
inline Rat cantor_coordinate(const CantorAddress& addr) {
    return Rat(1, 3) + cantor_standard_point(addr) / 3;
}

// Gap endpoints of the scaled copy: X_s = [gap_l(s), gap_r(s)].
inline Rat gap_l(const std::vector<int>& s) { return cantor_coordinate(CantorAddress::gap_left(s)); }
inline Rat gap_r(const std::vector<int>& s) { return cantor_coordinate(CantorAddress::gap_right(s)); }

// Standard Cantor function on [0,1].  Digit-by-digit with cycle
// detection: exact whenever the ternary expansion terminates, hits a 1,
// or cycles within `depth` steps; otherwise within 2^-depth.
inline Rat cantor_stairs(const Rat& x, int depth = 40) {
    if (x <= 0) return 0;
    if (x >= 1) return 1;
    Rat rem = x;
    Rat value = 0;
    Rat w(1, 2);
    std::map<Rat, std::pair<int, Rat>> seen;  // remainder -> (step, value so far)
    for (int i = 1; i <= depth; ++i) {
        seen.emplace(rem, std::make_pair(i, value));
        Rat three = rem * 3;
        Int digit = rat_floor(three);
        rem = three - Rat(digit);
        if (digit == 1) return value + w;  // first 1: everything after collapses
        if (digit == 2) value += w;
        w /= 2;
        if (rem == 0) return value;
        auto it = seen.find(rem);
        if (it != seen.end()) {
            // periodic block of 0/2 digits from step it->second.first to i
            int period = i + 1 - it->second.first;
            Rat block = value - it->second.second;
            return value + block / (pow_int(Rat(2), period) - 1);
        }
    }
    return value;  // truncated; error <= 2^-depth
}

// Decode a coordinate of the scaled copy C back to its address.
// Returns nullopt when x is not a member (e.g. lies in a gap interior).
// Exact for all rationals: ternary expansions of rationals cycle.
inline std::optional<CantorAddress> to_cantor_address(const Rat& x) {
    if (x < Rat(1, 3) || x > Rat(2, 3)) return std::nullopt;
    Rat rem = 3 * x - 1;  // in [0,1]
    CantorAddress addr;
    std::map<Rat, int> seen;  // remainder -> index into digits
    for (int i = 0;; ++i) {
        if (rem == 0) return addr;  // all-0 tail
        if (rem == 1) {             // right endpoint: all-1 tail
            addr.tail = {1};
            return addr;
        }
        auto it = seen.find(rem);
        if (it != seen.end()) {
            addr.tail.assign(addr.digits.begin() + it->second, addr.digits.end());
            addr.digits.resize(it->second);
            return addr;
        }
        seen.emplace(rem, i);
        Rat three = rem * 3;
        Int digit = rat_floor(three);
        rem = three - Rat(digit);
        if (digit == 1) {
            if (rem == 0) {  // x = ...1 exactly: rewrite as ...0 1^inf
                addr.digits.push_back(0);
                addr.tail = {1};
                return addr;
            }
            return std::nullopt;  // interior of a removed gap
        }
        addr.digits.push_back(digit == 2 ? 1 : 0);
    }
}

}  // namespace topofrac

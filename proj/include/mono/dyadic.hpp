// Exact dyadic rationals num / 2^k over arbitrary-precision integers.
//
// Every intermediate quantity in the weight formulas is a dyadic rational;
// nothing here ever touches floating point. Canonical form: k == 0, or num
// odd (num == 0 forces k == 0), so equality is plain field comparison.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace mono {

using BigInt = boost::multiprecision::cpp_int;

struct Dyadic {
    BigInt num = 0;
    int k = 0;  // value = num / 2^k, k >= 0

    Dyadic() = default;
    Dyadic(BigInt n) : num(std::move(n)), k(0) {}
    Dyadic(long long n) : num(n), k(0) {}
    Dyadic(BigInt n, int denom_exp) : num(std::move(n)), k(denom_exp) {
        if (k < 0) throw std::invalid_argument("negative denominator exponent");
        normalize();
    }

    void normalize() {
        if (num == 0) { k = 0; return; }
        while (k > 0 && num % 2 == 0) { num /= 2; --k; }
    }

    bool is_integer() const { return k == 0; }
    BigInt to_integer() const {
        if (k != 0) throw std::logic_error("dyadic value is not an integer: " + str());
        return num;
    }

    static Dyadic pow2(int e) {
        if (e >= 0) return Dyadic(BigInt(1) << e);
        return Dyadic(BigInt(1), -e);
    }

    Dyadic times_pow2(int e) const {
        Dyadic out = *this;
        if (out.num == 0) return out;
        if (e >= out.k) { out.num <<= (e - out.k); out.k = 0; }
        else out.k -= e;  // covers negative e as well
        out.normalize();
        return out;
    }

    std::string str() const {
        if (k == 0) return num.str();
        return num.str() + "/" + (BigInt(1) << k).str();
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        int kk = std::max(a.k, b.k);
        return Dyadic((a.num << (kk - a.k)) + (b.num << (kk - b.k)), kk);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        int kk = std::max(a.k, b.k);
        return Dyadic((a.num << (kk - a.k)) - (b.num << (kk - b.k)), kk);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num * b.num, a.k + b.k);
    }
    friend Dyadic operator-(const Dyadic& a) { Dyadic out = a; out.num = -out.num; return out; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.num == b.num && a.k == b.k; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        int kk = std::max(a.k, b.k);
        return (a.num << (kk - a.k)) < (b.num << (kk - b.k));
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a < b || a == b; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }
};

// (1 - 2^{1-r})^e and friends show up repeatedly; exact power helper.
inline Dyadic dyadic_pow(const Dyadic& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent in dyadic_pow");
    Dyadic acc(BigInt(1));
    Dyadic b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

}  // namespace mono

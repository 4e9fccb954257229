#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace secg {

// Exact rational on long long, always normalized with positive
// denominator. Charge amounts are small multiples of 1/3, so overflow is
// not a practical concern at desk scale.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(Rat a, Rat b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
    Rat& operator+=(Rat b) { return *this = *this + b; }
    Rat& operator-=(Rat b) { return *this = *this - b; }
    friend bool operator==(Rat a, Rat b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(Rat a, Rat b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(Rat a, Rat b) { return a == b || a < b; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace secg

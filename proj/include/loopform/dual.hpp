#pragma once

#include <loopform/rational.hpp>

#include <stdexcept>

namespace loopform {

/// First-order dual number a + b*eps with eps^2 = 0, over Q. Used to
/// take exact differentials of group actions.
struct Dual {
    Rat a, b;

    Dual() : a(0), b(0) {}
    Dual(Rat value) : a(std::move(value)), b(0) {}  // NOLINT: implicit lift from Q
    Dual(Rat value, Rat eps) : a(std::move(value)), b(std::move(eps)) {}

    Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
    Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
    Dual operator-() const { return {-a, -b}; }
    Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }
    Dual operator/(const Dual& o) const {
        if (o.a == 0)
            throw std::domain_error("division by non-unit dual number");
        return {a / o.a, (b * o.a - a * o.b) / (o.a * o.a)};
    }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }

    bool operator==(const Dual& o) const = default;
    bool operator==(int v) const { return a == v && b == 0; }
    bool operator!=(int v) const { return !(*this == v); }
};

}  // namespace loopform

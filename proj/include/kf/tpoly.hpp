#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "kf/error.hpp"

namespace kf {

// Dense integer-coefficient polynomial in t; coeffs[k] is the coefficient of
// t^k, trailing zeros trimmed. Exact arithmetic throughout.
class TPoly {
public:
    TPoly() = default;
    TPoly(std::initializer_list<long long> cs) : c_(cs) { trim(); }
    explicit TPoly(std::vector<long long> cs) : c_(std::move(cs)) { trim(); }

    static TPoly zero() { return TPoly{}; }
    static TPoly one() { return TPoly{1}; }
    static TPoly monomial(long long coeff, std::size_t deg) {
        std::vector<long long> cs(deg + 1, 0);
        cs[deg] = coeff;
        return TPoly(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    long long coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    const std::vector<long long>& coeffs() const { return c_; }

    long long eval_at_one() const {
        long long s = 0;
        for (long long x : c_) s += x;
        return s;
    }

    bool nonneg_coeffs() const {
        for (long long x : c_) if (x < 0) return false;
        return true;
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return TPoly(std::move(r));
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) {
        std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return TPoly(std::move(r));
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly{};
        std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return TPoly(std::move(r));
    }
    friend TPoly operator*(long long k, const TPoly& a) {
        std::vector<long long> r = a.c_;
        for (long long& x : r) x *= k;
        return TPoly(std::move(r));
    }
    TPoly& operator+=(const TPoly& b) { return *this = *this + b; }
    TPoly& operator-=(const TPoly& b) { return *this = *this - b; }
    TPoly& operator*=(const TPoly& b) { return *this = *this * b; }

    friend bool operator==(const TPoly&, const TPoly&) = default;

    // Coefficient of t^k in the result is the coefficient of t^{d-k} here.
    TPoly reversed(long long d) const {
        if (d < degree())
            fail("DegreeTooSmall", "poly_reverse: d=" + std::to_string(d) +
                                       " < deg=" + std::to_string(degree()));
        std::vector<long long> r(static_cast<std::size_t>(d) + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[static_cast<std::size_t>(d) - i] = c_[i];
        return TPoly(std::move(r));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += c_[k] > 0 ? " + " : " - ";
            else if (c_[k] < 0) s += "-";
            long long a = c_[k] > 0 ? c_[k] : -c_[k];
            if (k == 0) s += std::to_string(a);
            else {
                if (a != 1) s += std::to_string(a) + "*";
                s += k == 1 ? "t" : "t^" + std::to_string(k);
            }
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

inline TPoly poly_reverse(const TPoly& p, long long d) { return p.reversed(d); }

} // namespace kf

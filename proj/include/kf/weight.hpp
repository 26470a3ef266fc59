#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace kf {

// Integer vector in epsilon-coordinates. Doubles as a root, a partition and a
// lattice element; all arithmetic is exact and componentwise.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t n) : c_(n, 0) {}
    Weight(std::initializer_list<int> init) : c_(init) {}
    explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}

    std::size_t size() const { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int>& coords() const { return c_; }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Weight operator*(int k, const Weight& a) {
        Weight r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.c_[i] = k * a.c_[i];
        return r;
    }
    Weight operator-() const { return -1 * *this; }

    Weight& operator+=(const Weight& b) { return *this = *this + b; }
    Weight& operator-=(const Weight& b) { return *this = *this - b; }

    // Standard Euclidean inner product on epsilon-coordinates.
    friend long long dot(const Weight& a, const Weight& b) {
        long long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += static_cast<long long>(a.c_[i]) * b.c_[i];
        return s;
    }

    long long sum() const { return std::accumulate(c_.begin(), c_.end(), 0LL); }
    bool is_zero() const {
        for (int x : c_) if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    // Lexicographic; used only as an arbitrary stable tie-break in orderings.
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

private:
    std::vector<int> c_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : w.coords())
            h = (h ^ static_cast<std::size_t>(x + 0x7fff)) * 0x100000001b3ULL;
        return h;
    }
};

} // namespace kf

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace alcove {

using Coord = std::int64_t;

/// A weight in fundamental-weight coordinates: the i-th entry is the pairing
/// with the i-th simple coroot.  The weight lattice is exactly the set of
/// integer vectors in these coordinates, so no other representation is needed.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank, 0) {}
    Weight(std::initializer_list<Coord> c) : c_(c) {}
    explicit Weight(std::vector<Coord> c) : c_(std::move(c)) {}

    std::size_t rank() const { return c_.size(); }
    Coord operator[](std::size_t i) const { return c_[i]; }
    Coord& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Coord>& coords() const { return c_; }

    bool is_zero() const {
        for (Coord v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_dominant() const {
        for (Coord v : c_)
            if (v < 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Weight operator*(Coord k, const Weight& a) {
        Weight r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = k * a.c_[i];
        return r;
    }
    Weight operator-() const { return Coord(-1) * *this; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c_ != b.c_; }
    // Lexicographic; used only as a canonical sort key.
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    /// Comma-separated coordinates, e.g. "1,1".
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

private:
    std::vector<Coord> c_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Coord v : w.coords()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace alcove

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coh1 {

using Int = std::int64_t;
using Rat = mpq_class;
using Big = mpz_class;

// Weights and roots in fundamental-weight / simple-root coordinates.
using IVec = std::vector<int>;

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact integer value of a rational known to be integral.
inline Big as_integer(const Rat& q) {
    if (!is_integer(q)) throw std::runtime_error("expected integer, got " + to_string(q));
    return q.get_num();
}

inline long as_long(const Big& z) {
    if (!z.fits_slong_p()) throw std::runtime_error("integer overflow: " + z.get_str());
    return z.get_si();
}

inline IVec operator+(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec operator-(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IVec concat(const IVec& a, const IVec& b) {
    IVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline bool is_zero(const IVec& a) {
    for (int x : a)
        if (x) return false;
    return true;
}

struct IVecHash {
    size_t operator()(const IVec& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace coh1

#ifndef HIRSCHLOOP_BASICS_HPP
#define HIRSCHLOOP_BASICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hirsch {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient ring: modulus 0 means Z, otherwise a prime p.
struct Ring {
    int modulus = 0;

    bool is_integral() const { return modulus == 0; }
    Int reduce(const Int& a) const {
        if (modulus == 0)
            return a;
        Int r = a % modulus;
        if (r < 0)
            r += modulus;
        return r;
    }
};

inline bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Largest e with p^e dividing a (a != 0).
inline int p_valuation(const Int& a, int p) {
    if (a == 0)
        throw error("p_valuation of zero");
    Int b = a < 0 ? Int(-a) : a;
    int v = 0;
    while (b % p == 0) {
        b /= p;
        ++v;
    }
    return v;
}

} // namespace hirsch

#endif

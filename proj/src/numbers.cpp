#include "indel/numbers.hpp"

#include <stdexcept>

namespace indel {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

BigInt int_pow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace indel

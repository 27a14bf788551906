#ifndef BETTILAB_NUMERIC_HPP
#define BETTILAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bettilab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/* splitmix64, the seeded generator used for every randomized check.
 * The update rule is written out so results are reproducible across
 * implementations; see README. */
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next()
    {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform residue in [0, m)
    uint32_t below(uint32_t m) { return static_cast<uint32_t>(next() % m); }
};

} // namespace bettilab

#endif

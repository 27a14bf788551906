#ifndef BETTILAB_MONOMIAL_HPP
#define BETTILAB_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bettilab {

/* Exponent vectors of fixed length e. Monomial order everywhere is degrevlex
 * with x1 > x2 > ... > xe: among monomials of equal degree, a > b iff the
 * last nonzero entry of a-b is negative. */
using Expo = std::vector<int>;

inline int total_degree(const Expo& m)
{
    int d = 0;
    for (int v : m)
        d += v;
    return d;
}

// true if a > b in degrevlex
inline bool degrevlex_greater(const Expo& a, const Expo& b)
{
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    for (size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0)
            return d < 0;
    }
    return false;
}

inline Expo mono_mul(const Expo& a, const Expo& b)
{
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

std::string mono_to_string(const Expo& m, const std::vector<std::string>& vars);

// all monomials of degree j in e variables, sorted descending in degrevlex
std::vector<Expo> monomials_of_degree(int e, int j);

} // namespace bettilab

#endif

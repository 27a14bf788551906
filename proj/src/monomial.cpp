#include "bettilab/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace bettilab {

std::string mono_to_string(const Expo& m, const std::vector<std::string>& vars)
{
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (any)
            os << "*";
        os << vars[i];
        if (m[i] > 1)
            os << "^" << m[i];
        any = true;
    }
    if (!any)
        os << "1";
    return os.str();
}

std::vector<Expo> monomials_of_degree(int e, int j)
{
    std::vector<Expo> out;
    if (e == 0) {
        if (j == 0)
            out.push_back({});
        return out;
    }
    std::vector<Expo> acc;
    Expo m(static_cast<size_t>(e), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == e - 1) {
            m[static_cast<size_t>(pos)] = left;
            acc.push_back(m);
            return;
        }
        for (int v = left; v >= 0; --v) {
            m[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
        m[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, j);
    std::sort(acc.begin(), acc.end(), degrevlex_greater);
    return acc;
}

} // namespace bettilab

#ifndef BETTILAB_RING_IO_HPP
#define BETTILAB_RING_IO_HPP

#include "bettilab/ring_spec.hpp"

namespace bettilab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + what),
          line(line), col(col)
    {
    }
    int line, col;
};

/* Text format shared by the CLI and the construct outputs:
 *
 *   ring <name> { prime = <int>; vars = <ident>(, <ident>)*; ideal = <poly>(, <poly>)*; }
 *
 * A file may hold several ring blocks. `ideal = 0;` declares the zero ideal.
 * Generators must be homogeneous with integer coefficients, e.g. u1^2 + 3*u1*u2. */
std::vector<RingSpec> parse_ring_specs(const std::string& text);

RingSpec parse_ring_spec(const std::string& text); // exactly one block expected

// parse a single polynomial over the given ring's variables (test helper and CLI)
HomogPoly parse_poly(const std::string& text, const RingSpec& ring);

} // namespace bettilab

#endif

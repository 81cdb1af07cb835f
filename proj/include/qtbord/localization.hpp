#ifndef QTBORD_LOCALIZATION_HPP
#define QTBORD_LOCALIZATION_HPP

#include <vector>
#include <gmpxx.h>

#include "qtbord/quasitoric.hpp"

namespace qtb::loc {

// Fixed-point data for one choice of generic direction xi: for each vertex,
// the integers <w_t, xi> where the w_t are the rows of the inverse vertex
// submatrix.  Building the context does all matrix work once; evaluating a
// characteristic number is then a cheap sum over vertices.
struct Context {
    int n = 0;
    std::vector<int> signs;
    std::vector<std::vector<mpz_class>> weights;  // per vertex, n integers
    std::vector<long long> xi;                    // the admissible direction used
};

// Deterministic direction sequence: xi_j = (1, j, j^2, ..., j^{n-1}) for
// j = 2, 3, 5, 7, ...; the first one with all weights nonzero wins.
// skip > 0 asks for the (skip+1)-th admissible direction (used by tests).
Context make_context(const qt::CharacteristicPair& m, int skip = 0);

// Both engines: OpenMP over vertices, and a serial reference kept for tests.
// The exact rational vertex sum must be an integer; otherwise they throw.
mpz_class chern_number(const Context& ctx, const qt::ChernMonomial& omega);
mpz_class chern_number_serial(const Context& ctx, const qt::ChernMonomial& omega);
mpz_class s_number(const Context& ctx);
mpz_class s_number_serial(const Context& ctx);

// One-shot conveniences.
mpz_class chern_number(const qt::CharacteristicPair& m, const qt::ChernMonomial& omega);
mpz_class s_number(const qt::CharacteristicPair& m);

}  // namespace qtb::loc

#endif

#ifndef QTBORD_VERIFY_HPP
#define QTBORD_VERIFY_HPP

#include <string>
#include <vector>

#include "qtbord/families.hpp"

namespace qtb::verify {

struct SweepReport {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;
    bool ok() const { return failures.empty(); }
};

// Engine s-numbers of L(n1,n2) against the alternating-binomial closed form.
SweepReport lemma1_sweep(int max_total = 10);
// Same for the SU families.
SweepReport snl_sweep(int max_total = 10);
SweepReport snn_sweep(int max_total = 10);

// Telescoped combination s[L(n1,n2)] - 2 s[L(n1-1,n2+1)] + s[L(n1-2,n2+2)]
// against (-1)^{n1} C(n1+n2+1, n1), for n1 >= 2, n2 >= 1.
SweepReport telescope_sweep(int max_total = 10);

// gcd of the middle binomial row against the prime-power closed form.
SweepReport gcdbinom_sweep(int max_n = 256);
// gcd of consecutive even/odd binomial differences.
SweepReport gcddif_sweep(int max_k = 64);
// 2-adic and odd-prime characterizations of gcd{a_i}.
SweepReport nmod2_sweep(int max_k = 64);
SweepReport nmodp_sweep(int max_k = 64);

// Digit congruences against a streaming big-integer Pascal row.
// Parallel over each row; the serial flag forces the reference path.
SweepReport lucas_sweep(int max_n = 600, bool parallel = true);
SweepReport granville_sweep(int max_n = 600, bool parallel = true);

// Every Chern number of the two low-dimensional SU instances vanishes.
SweepReport lowdimqt_sweep();

// Cross-engine agreement on a fixed instance list of complex dimension <= max.
SweepReport engine_agreement_sweep(int max_dim = 8, bool parallel = true);

// The instance list used by the agreement sweep.
std::vector<fam::FamilyPresentation> agreement_instances(int max_dim);

}  // namespace qtb::verify

#endif

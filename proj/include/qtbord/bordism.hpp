#ifndef QTBORD_BORDISM_HPP
#define QTBORD_BORDISM_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qtbord/families.hpp"

namespace qtb::bord {

// Integer combination of family members, all of the same complex dimension n.
struct FormalBordismClass {
    int n = 0;  // real dimension 2n
    struct Term {
        long long coeff;
        fam::FamilyPresentation member;
    };
    std::vector<Term> terms;
};

// s-number of the class: sum of coeff * s(member), cohomology engine.
mpz_class s_of_class(const FormalBordismClass& c);

// |s| equals the divisibility target for a polynomial generator in
// real dimension 2i.
bool milnor_generator_test(const FormalBordismClass& c, int i);

struct GeneratorCertificate {
    FormalBordismClass cls;
    mpz_class s_value;  // engine-computed, equals target
    mpz_class target;
    bool su = false;
    std::string kind;  // "y_odd", "y_even", "unitary"
};

// y_{2k+1}: combination of tildeL(n1,n2), n1+n2 = 2k+1, with s = m_{2k+1} m_{2k}.
GeneratorCertificate find_y_odd(int k);

// y_{2k}: combination of tildeN(n1,n2), 1+n1+n2 = 2k, with s = 2 m_{2k} m_{2k-1}.
GeneratorCertificate find_y_even(int k);

// Polynomial generator of the unitary bordism ring in dimension 2i, as a
// combination of the two-stage projectivisation family (with CP^i included).
GeneratorCertificate find_unitary(int i);

// Expand the coefficients into repeated summands (negatives reversed) and
// fold with the equivariant connected sum at vertex 0 of each.
qt::CharacteristicPair realize_certificate(const GeneratorCertificate& c);

nlohmann::ordered_json certificate_json(const GeneratorCertificate& c);

}  // namespace qtb::bord

#endif

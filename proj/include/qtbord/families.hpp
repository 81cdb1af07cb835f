#ifndef QTBORD_FAMILIES_HPP
#define QTBORD_FAMILIES_HPP

#include <string>
#include <vector>

#include "qtbord/poly.hpp"
#include "qtbord/quasitoric.hpp"

namespace qtb::fam {

// A family instance ready for both characteristic-number engines: the
// characteristic pair for localization, and a solved-form cohomology
// presentation with the reduced degree-two image of every facet class.
// The total Chern class is the product of (1 + form) over all facets.
struct FamilyPresentation {
    std::string name;
    int n = 0;  // complex dimension
    poly::QuotientPresentation presentation;
    std::vector<poly::SparsePoly> linear_forms;
    qt::CharacteristicPair pair;
};

// Complex projective space CP^n over the simplex; matrix (I | -1).
FamilyPresentation cpn(int n);

// Projectivisation of a sum of n2 line bundles of the given degrees and a
// trivial line, over CP^{n1}; polytope is a product of two simplices.
FamilyPresentation proj_sum(int n1, const std::vector<long long>& degrees);

// Two-stage projectivisation family L: degrees (1, 0, ..., 0).
// L(0,k) and L(k,0) degenerate to CP^k.
FamilyPresentation L(int n1, int n2);

// The SU modification of L for n1 even > 0, n2 odd: conjugate the designated
// facet columns and renormalize the lattice.
FamilyPresentation tilde_L(int n1, int n2);

// Three-stage SU family over Δ^1 x Δ^{n1} x Δ^{n2}, n1 even > 0, n2 odd.
FamilyPresentation tilde_N(int n1, int n2);

// Cartesian product: block-diagonal matrix, tensor presentation,
// vertex signs multiply.
FamilyPresentation product(const FamilyPresentation& a, const FamilyPresentation& b);

// Closed-form s-number reference values.
// Tags: "lemma1", "snL", "snN" (engine cross-checks) and "snmilnor"
// (reference data only; no manifold in this workbench).
mpz_class closed_form_s(const std::string& tag, int n1, int n2);

// Cohomology-presentation engine.
poly::SparsePoly first_chern_class(const FamilyPresentation& f);
poly::SparsePoly total_chern_class(const FamilyPresentation& f);
mpz_class chern_number_cohomology(const FamilyPresentation& f, const qt::ChernMonomial& omega);
mpz_class s_number_cohomology(const FamilyPresentation& f);

// Parse "cpn(3)", "L(2,1)", "tildeL(2,3)", "tildeN(2,3)",
// "proj(2,1,0,3)" (first number n1, the rest the degree list), and
// "product(SPEC,SPEC)" with arbitrary nesting.
FamilyPresentation parse_family_spec(const std::string& spec);

}  // namespace qtb::fam

#endif

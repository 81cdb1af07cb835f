#ifndef QTBORD_QUASITORIC_HPP
#define QTBORD_QUASITORIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "qtbord/intmatrix.hpp"

namespace qtb::qt {

// Face data of a simple n-polytope: each vertex is the sorted set of the n
// facets meeting there.  Only the combinatorics is stored.
struct PolytopeCombinatorics {
    int dim = 0;
    int num_facets = 0;
    std::vector<std::vector<int>> vertices;
};

// A combinatorial quasitoric manifold: polytope, characteristic n x m matrix
// whose columns are the facet vectors, and the omniorientation sign at each
// vertex.  Immutable by convention; transformations return new values.
struct CharacteristicPair {
    PolytopeCombinatorics poly;
    IntMat lambda;
    std::vector<int> vertex_signs;  // ±1, parallel to poly.vertices
    std::string name;

    int dim() const { return poly.dim; }
    int num_facets() const { return poly.num_facets; }
};

// Exponents (i_1, ..., i_n) of the monomial c_1^{i_1} ... c_n^{i_n}.
struct ChernMonomial {
    std::vector<int> exponents;
    int norm() const;  // sum k*i_k
    std::string str() const;
};

// Every (i_1..i_n) with sum k*i_k = n, in lexicographic order.
std::vector<ChernMonomial> all_chern_monomials(int n);

// Empty result means the pair satisfies all structural invariants;
// otherwise one message per violation (bad dets are reported per vertex).
std::vector<std::string> validate(const CharacteristicPair& m);

// Integer functional phi with phi(lambda_i) = 1 for every column, when one
// exists.  Vanishing first Chern class is equivalent to its existence.
std::optional<std::vector<mpz_class>> su_check(const CharacteristicPair& m);

// Negate column i and flip the sign of every vertex containing facet i.
CharacteristicPair conjugate_facet(const CharacteristicPair& m, int facet);

// Flip every vertex sign.
CharacteristicPair reverse_orientation(const CharacteristicPair& m);

// Lattice change of basis only; the manifold is unchanged.
CharacteristicPair left_multiply(const CharacteristicPair& m, const IntMat& g);

struct RefineResult {
    CharacteristicPair pair;
    std::vector<int> facet_perm;  // old facet index -> new facet index
};

// Normalize the matrix to (I | Λ*) with the facets of vertex v first.
RefineResult refine(const CharacteristicPair& m, int vertex);

// Equivariant connected sum at fixed points.  When the two vertex signs
// agree, the bordism-trivial pair S = (S^2)^n over the cube is inserted.
CharacteristicPair connected_sum(const CharacteristicPair& a, int vertex_a,
                                 const CharacteristicPair& b, int vertex_b);

// The pair S = (S^2)^n over the n-cube, matrix (I | I), per-factor signs
// (+1, -1) ordered by facet index.
CharacteristicPair sphere_product(int n);

}  // namespace qtb::qt

#endif

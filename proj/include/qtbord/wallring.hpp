#ifndef QTBORD_WALLRING_HPP
#define QTBORD_WALLRING_HPP

#include <map>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace qtb::wall {

// Monomial in the generators x_1, x_3, x_4, ...: sorted (generator, exponent)
// pairs with positive exponents.  There is no x_2.
using Monomial = std::vector<std::pair<int, int>>;

int monomial_degree(const Monomial& m);  // sum of i * exp, i.e. half the grading

// Element of the polynomial model Z[x_1, x_i : i > 2].  The twisted product
// of the underlying bordism groups is the ring product of this presentation;
// the reference 4-dimensional class it twists by is absorbed into the choice
// of generators and never appears explicitly.
class WallElement {
public:
    WallElement() = default;
    static WallElement zero() { return WallElement(); }
    static WallElement constant(const mpz_class& c);
    static WallElement generator(int i);  // i == 1 or i > 2

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, mpz_class>& terms() const { return terms_; }
    void add_term(const Monomial& m, const mpz_class& c);

    // Degree 2*max over monomials; -1 for zero.  Homogeneous check uses the
    // same doubled grading (deg x_i = 2i).
    int degree() const;
    bool is_homogeneous() const;

    std::string str() const;

    friend WallElement operator+(const WallElement& a, const WallElement& b);
    friend WallElement operator-(const WallElement& a, const WallElement& b);
    friend WallElement operator*(const WallElement& a, const WallElement& b);
    friend WallElement operator*(const mpz_class& c, const WallElement& a);
    friend bool operator==(const WallElement& a, const WallElement& b);

private:
    std::map<Monomial, mpz_class> terms_;
};

// Boundary operator: d(x_1) = 2, d(x_{2i}) = x_{2i-1}, d(x_{2i-1}) = 0,
// extended to products by d(a*b) = a*db + da*b - x_1*da*db, peeling the
// lexicographically smallest generator of a monomial first.
WallElement boundary(const WallElement& a);

// Same recursion but peeling the monomial's factors in the given order
// (indices into the factor list with multiplicity); used by the
// order-independence suite.
WallElement boundary_with_peel_order(const Monomial& m, const std::vector<int>& order);

// Images of the y_i generators: 2 x_1^2 for i = 2, x_{2k-1} for odd i,
// 2 x_{2k} - x_1 x_{2k-1} for even i > 2.
WallElement y_image(int i);

// Parse "2*x4 - x1*x3", "x3^2*(x1 - 2)", etc.
WallElement parse(const std::string& text);

}  // namespace qtb::wall

#endif

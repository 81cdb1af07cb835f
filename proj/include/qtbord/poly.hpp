#ifndef QTBORD_POLY_HPP
#define QTBORD_POLY_HPP

#include <map>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace qtb::poly {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Z with a fixed number of variables.
// The term map never stores zero coefficients.
class SparsePoly {
public:
    explicit SparsePoly(int arity = 0) : arity_(arity) {}

    static SparsePoly constant(int arity, const mpz_class& c);
    static SparsePoly variable(int arity, int var, int power = 1);
    static SparsePoly monomial(Exponents e, const mpz_class& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, mpz_class>& terms() const { return terms_; }

    void add_term(const Exponents& e, const mpz_class& c);

    // Total degree of the highest term, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int deg) const;
    SparsePoly homogeneous_part(int deg) const;

    mpz_class coefficient(const Exponents& e) const;

    SparsePoly operator-() const;
    SparsePoly pow(int k) const;
    std::string str(const std::vector<std::string>& var_names = {}) const;

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const mpz_class& c, const SparsePoly& a);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

private:
    int arity_;
    std::map<Exponents, mpz_class> terms_;
    static void check_arity(const SparsePoly& a, const SparsePoly& b);
};

// Solved-form quotient presentation of a graded ring Z[x_0..x_{a-1}]/I.
// Annihilators say x^d = 0; solved relations say x^d = replacement, where the
// replacement has degree < d in x.  At most one rule per variable.
struct QuotientPresentation {
    int arity = 0;
    struct Annihilator {
        int var;
        int power;
    };
    struct SolvedRelation {
        int var;
        int power;
        SparsePoly replacement;
    };
    std::vector<Annihilator> annihilators;
    std::vector<SolvedRelation> solved;
    Exponents fundamental_monomial;
    int fundamental_value = 1;  // ±1
    std::vector<std::string> var_names;

    int top_degree() const;
    void validate() const;  // throws on a malformed presentation
};

// Unique normal form: no surviving monomial is divisible by x^d for any rule.
SparsePoly normal_form(const SparsePoly& p, const QuotientPresentation& q);

// Reduce a top-degree class and pair it with the fundamental class.
// Throws if p is not homogeneous of top degree, or if reduction leaves a
// top-degree monomial other than the fundamental one.
mpz_class evaluate_fundamental(const SparsePoly& p, const QuotientPresentation& q);

}  // namespace qtb::poly

#endif

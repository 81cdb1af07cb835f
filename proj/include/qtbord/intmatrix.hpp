#ifndef QTBORD_INTMATRIX_HPP
#define QTBORD_INTMATRIX_HPP

#include <vector>
#include <gmpxx.h>

namespace qtb {

// Small dense integer matrix; exact arithmetic throughout.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMat identity(int n);
    IntMat select_columns(const std::vector<int>& idx) const;

    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y);
};

// Determinant by fraction-free (Bareiss) elimination.
mpz_class det(const IntMat& m);

// Exact inverse of a matrix with det = ±1; throws otherwise.
IntMat inverse_unimodular(const IntMat& m);

}  // namespace qtb

#endif

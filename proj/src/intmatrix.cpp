#include "qtbord/intmatrix.hpp"

#include <stdexcept>

namespace qtb {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::select_columns(const std::vector<int>& idx) const
{
    IntMat m(rows, static_cast<int>(idx.size()));
    for (int r = 0; r < rows; ++r)
        for (size_t j = 0; j < idx.size(); ++j)
            m.at(r, static_cast<int>(j)) = at(r, idx[j]);
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const mpz_class& xv = x.at(i, k);
            if (xv == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) += xv * y.at(k, j);
        }
    return z;
}

bool operator==(const IntMat& x, const IntMat& y)
{
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

mpz_class det(const IntMat& m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows;
    if (n == 0)
        return 1;
    IntMat w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (w.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(w.at(k, c), w.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

IntMat inverse_unimodular(const IntMat& m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("inverse_unimodular: matrix not square");
    int n = m.rows;
    // Gauss-Jordan over Q; the result is integral because det = ±1.
    std::vector<mpq_class> w(static_cast<size_t>(n) * 2 * n);
    auto wat = [&](int r, int c) -> mpq_class& { return w[static_cast<size_t>(r) * 2 * n + c]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            wat(i, j) = m.at(i, j);
        wat(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (wat(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw std::invalid_argument("inverse_unimodular: matrix is singular");
        if (piv != c)
            for (int j = 0; j < 2 * n; ++j)
                std::swap(wat(c, j), wat(piv, j));
        mpq_class pv = wat(c, c);
        for (int j = 0; j < 2 * n; ++j)
            wat(c, j) /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || wat(r, c) == 0)
                continue;
            mpq_class f = wat(r, c);
            for (int j = 0; j < 2 * n; ++j)
                wat(r, j) -= f * wat(c, j);
        }
    }
    IntMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = wat(i, n + j);
            v.canonicalize();
            if (v.get_den() != 1)
                throw std::invalid_argument("inverse_unimodular: inverse is not integral");
            inv.at(i, j) = v.get_num();
        }
    return inv;
}

}  // namespace qtb

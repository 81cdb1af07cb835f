#include "qtbord/numtheory.hpp"

#include <stdexcept>

namespace qtb::nt {

namespace {
inline mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }
}  // namespace

bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

PrimePower::PrimePower(long long p_, int q_) : p(p_), q(q_)
{
    if (!is_prime(p))
        throw std::invalid_argument("PrimePower: base is not prime");
    if (q < 1)
        throw std::invalid_argument("PrimePower: exponent must be >= 1");
}

mpz_class PrimePower::modulus() const
{
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return m;
}

BaseExpansion::BaseExpansion(unsigned long long value, long long p_) : p(p_)
{
    if (p < 2)
        throw std::invalid_argument("BaseExpansion: base must be >= 2");
    if (value == 0) {
        digits = {0};
        return;
    }
    unsigned long long v = value;
    while (v > 0) {
        digits.push_back(static_cast<long long>(v % static_cast<unsigned long long>(p)));
        v /= static_cast<unsigned long long>(p);
    }
}

unsigned long long BaseExpansion::value() const
{
    unsigned long long v = 0;
    for (size_t i = digits.size(); i-- > 0;)
        v = v * static_cast<unsigned long long>(p) + static_cast<unsigned long long>(digits[i]);
    return v;
}

mpz_class binomial(long long n, long long m)
{
    if (n < 0)
        throw std::invalid_argument("binomial: n must be nonnegative");
    if (m < 0 || m > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return r;
}

long long lucas_mod_p(unsigned long long n, unsigned long long m, long long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("lucas_mod_p: modulus is not prime");
    long long r = 1;
    while (m > 0 || n > 0) {
        long long nd = static_cast<long long>(n % static_cast<unsigned long long>(p));
        long long md = static_cast<long long>(m % static_cast<unsigned long long>(p));
        if (md > nd)
            return 0;
        mpz_class b = binomial(nd, md) % z(p);
        r = (r * b.get_si()) % p;
        n /= static_cast<unsigned long long>(p);
        m /= static_cast<unsigned long long>(p);
    }
    return r;
}

int kummer_valuation(unsigned long long n, unsigned long long m, long long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("kummer_valuation: modulus is not prime");
    if (m > n)
        throw std::invalid_argument("kummer_valuation: m > n");
    unsigned long long a = m, b = n - m;
    unsigned long long up = static_cast<unsigned long long>(p);
    int carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        unsigned long long t = a % up + b % up + static_cast<unsigned long long>(carry);
        carry = t >= up ? 1 : 0;
        carries += carry;
        a /= up;
        b /= up;
    }
    return carries;
}

mpz_class factorial_p(unsigned long long n, const PrimePower& pq)
{
    mpz_class mod = pq.modulus();
    mpz_class r = 1;
    for (unsigned long long i = 1; i <= n; ++i) {
        if (i % static_cast<unsigned long long>(pq.p) == 0)
            continue;
        r = (r * mpz_class(static_cast<unsigned long>(i))) % mod;
    }
    return r;
}

FactorialPTable::FactorialPTable(const PrimePower& pq_) : pq(pq_), mod(pq_.modulus())
{
    if (!mod.fits_ulong_p() || mod.get_ui() > (1ull << 31))
        throw std::invalid_argument("FactorialPTable: modulus too large for the table");
    mod_word = mod.get_ui();
    fact.resize(mod_word);
    inv.resize(mod_word);
    mpz_class r = 1;
    for (unsigned long long k = 0; k < mod_word; ++k) {
        if (k > 0 && k % static_cast<unsigned long long>(pq.p) != 0)
            r = (r * mpz_class(static_cast<unsigned long>(k))) % mod;
        fact[k] = r.get_ui();
        mpz_class iv;
        if (mpz_invert(iv.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("factorial_p residue not invertible");
        inv[k] = iv.get_ui();
    }
}

namespace {

// Carry positions when adding m and (n-m) in base p.  carry[i] == 1 means a
// carry out of digit position i; e_j of the prime-power congruence counts the
// carries at positions >= j.
std::vector<int> carry_positions(unsigned long long n, unsigned long long m, long long p)
{
    unsigned long long a = m, b = n - m;
    unsigned long long up = static_cast<unsigned long long>(p);
    std::vector<int> carries;
    int carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        unsigned long long t = a % up + b % up + static_cast<unsigned long long>(carry);
        carry = t >= up ? 1 : 0;
        carries.push_back(carry);
        a /= up;
        b /= up;
    }
    return carries;
}

GranvilleResult granville_impl(unsigned long long n, unsigned long long m,
                               const PrimePower& pq, const FactorialPTable* table)
{
    if (m > n)
        throw std::invalid_argument("granville_mod_pq: m > n");
    unsigned long long r = n - m;

    BaseExpansion dn(n, pq.p), dm(m, pq.p), dr(r, pq.p);
    size_t k = dn.digits.size();
    dm.digits.resize(k, 0);
    dr.digits.resize(k, 0);

    std::vector<int> carries = carry_positions(n, m, pq.p);
    carries.resize(std::max(carries.size(), k + static_cast<size_t>(pq.q)), 0);
    auto e_at = [&](size_t j) {
        int e = 0;
        for (size_t i = j; i < carries.size(); ++i)
            e += carries[i];
        return e;
    };
    int e0 = e_at(0);
    int eq1 = e_at(static_cast<size_t>(pq.q) - 1);

    // window value n_j + n_{j+1} p + ... + n_{j+q-1} p^{q-1}
    auto window = [&](const std::vector<long long>& d, size_t j) {
        unsigned long long w = 0;
        for (int t = pq.q - 1; t >= 0; --t) {
            size_t idx = j + static_cast<size_t>(t);
            long long digit = idx < d.size() ? d[idx] : 0;
            w = w * static_cast<unsigned long long>(pq.p) + static_cast<unsigned long long>(digit);
        }
        return w;
    };

    // Sign (±1)^{e_{q-1}}: the ±1 is -1 except when p = 2 and q >= 3.
    bool negate = !(pq.p == 2 && pq.q >= 3) && (eq1 % 2 != 0);

    if (table) {
        // Table moduli fit a machine word, so the product stays in integers.
        unsigned long long mod = table->mod_word;
        unsigned long long acc = 1 % mod;
        for (size_t j = 0; j < k; ++j) {
            acc = acc * table->fact[window(dn.digits, j)] % mod;
            acc = acc * table->inv[window(dm.digits, j)] % mod;
            acc = acc * table->inv[window(dr.digits, j)] % mod;
        }
        if (negate)
            acc = (mod - acc) % mod;
        return GranvilleResult{e0, mpz_class(static_cast<unsigned long>(acc))};
    }

    mpz_class mod = pq.modulus();
    mpz_class acc = 1;
    for (size_t j = 0; j < k; ++j) {
        mpz_class fN = factorial_p(window(dn.digits, j), pq);
        mpz_class fM = factorial_p(window(dm.digits, j), pq);
        mpz_class fR = factorial_p(window(dr.digits, j), pq);
        mpz_class iv;
        if (mpz_invert(iv.get_mpz_t(), mpz_class(fM * fR).get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::logic_error("granville: denominator not invertible");
        acc = (acc * fN) % mod;
        acc = (acc * iv) % mod;
    }
    if (negate)
        acc = (mod - acc) % mod;
    return GranvilleResult{e0, acc};
}

}  // namespace

GranvilleResult granville_mod_pq(unsigned long long n, unsigned long long m,
                                 const PrimePower& pq)
{
    return granville_impl(n, m, pq, nullptr);
}

GranvilleResult granville_mod_pq(unsigned long long n, unsigned long long m,
                                 const FactorialPTable& table)
{
    return granville_impl(n, m, table.pq, &table);
}

long long m_of(long long i)
{
    if (i < 1)
        throw std::invalid_argument("m_of: argument must be >= 1");
    long long n = i + 1;
    long long p = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    long long v = n;
    while (v % p == 0)
        v /= p;
    return v == 1 ? p : 1;
}

mpz_class gcd_binomials(long long n)
{
    if (n < 2)
        throw std::invalid_argument("gcd_binomials: n must be >= 2");
    mpz_class g = 0;
    mpz_class c = 1;  // C(n,0)
    for (long long i = 1; i < n; ++i) {
        c = c * z(n - i + 1) / z(i);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

mpz_class gcd_diff_family(long long k)
{
    if (k <= 1)
        throw std::invalid_argument("gcd_diff_family: k must be > 1");
    mpz_class g = 0;
    for (long long i = 1; i <= k; ++i) {
        mpz_class d = binomial(2 * k + 1, 2 * i) - binomial(2 * k + 1, 2 * i - 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
    return g;
}

std::vector<mpz_class> a_family(long long k)
{
    if (k <= 2)
        throw std::invalid_argument("a_family: k must be > 2");
    std::vector<mpz_class> out;
    out.reserve(static_cast<size_t>(k - 1));
    mpz_class alt = 0;  // -C(2k,1) + C(2k,2) - ... up to the current bound
    mpz_class c = 1;    // running C(2k,j)
    for (long long i = 1; i < k; ++i) {
        for (long long j = 2 * i - 1; j <= 2 * i; ++j) {
            c = c * z(2 * k - j + 1) / z(j);
            alt += (j % 2 == 0) ? c : -c;
        }
        out.push_back(alt - z(2 * i));
    }
    return out;
}

}  // namespace qtb::nt

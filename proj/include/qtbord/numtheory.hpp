#ifndef QTBORD_NUMTHEORY_HPP
#define QTBORD_NUMTHEORY_HPP

#include <cstdint>
#include <vector>
#include <gmpxx.h>

namespace qtb::nt {

// Deterministic trial division; inputs here are small.
bool is_prime(long long p);

struct PrimePower {
  long long p;  // prime base
  int q;        // exponent >= 1
  PrimePower(long long p_, int q_);
  mpz_class modulus() const;  // p^q
};

// Base-p digits, least significant first.  Value 0 is represented as {0}.
struct BaseExpansion {
  long long p;
  std::vector<long long> digits;
  BaseExpansion(unsigned long long value, long long p_);
  unsigned long long value() const;
};

// C(n,m); 0 when m < 0 or m > n.
mpz_class binomial(long long n, long long m);

// C(n,m) mod p as the product of digitwise binomials.
long long lucas_mod_p(unsigned long long n, unsigned long long m, long long p);

// Number of carries when adding m and n-m in base p; equals v_p(C(n,m)).
int kummer_valuation(unsigned long long n, unsigned long long m, long long p);

// Product of the integers <= n coprime to p, reduced mod p^q.
mpz_class factorial_p(unsigned long long n, const PrimePower& pq);

// Precomputed table of k!_p mod p^q and inverses, for 0 <= k < p^q.
// Used by the sweep drivers; the one-shot API below builds it on demand.
// Requires p^q to fit a machine word, which also enables a word-sized
// accumulation path in the digit congruence.
struct FactorialPTable {
  PrimePower pq;
  mpz_class mod;
  unsigned long long mod_word;
  std::vector<unsigned long long> fact;  // fact[k] = k!_p mod p^q
  std::vector<unsigned long long> inv;   // inverse of fact[k] mod p^q
  explicit FactorialPTable(const PrimePower& pq_);
};

struct GranvilleResult {
  int e0;             // v_p(C(n,m))
  mpz_class residue;  // C(n,m)/p^{e0} mod p^q, in [0, p^q)
};

GranvilleResult granville_mod_pq(unsigned long long n, unsigned long long m,
                                 const PrimePower& pq);
GranvilleResult granville_mod_pq(unsigned long long n, unsigned long long m,
                                 const FactorialPTable& table);

// p if i+1 = p^s for a prime p and s > 0, otherwise 1.
long long m_of(long long i);

// gcd of C(n,i) over 0 < i < n.
mpz_class gcd_binomials(long long n);

// gcd over 0 < i <= k of |C(2k+1,2i) - C(2k+1,2i-1)|.
mpz_class gcd_diff_family(long long k);

// a_i = -2i - C(2k,1) + C(2k,2) - ... + C(2k,2i), for 0 < i < k.
std::vector<mpz_class> a_family(long long k);

}  // namespace qtb::nt

#endif

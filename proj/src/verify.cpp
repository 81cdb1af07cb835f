#include "qtbord/verify.hpp"

#include <chrono>
#include <sstream>

#include <omp.h>

#include "qtbord/localization.hpp"
#include "qtbord/numtheory.hpp"

namespace qtb::verify {

namespace {

inline mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

SweepReport lemma1_sweep(int max_total)
{
    Timer t;
    SweepReport rep{"lemma1", 0, {}, 0.0};
    for (int n1 = 0; n1 <= max_total; ++n1) {
        for (int n2 = 1; n1 + n2 <= max_total; ++n2) {
            fam::FamilyPresentation f = fam::L(n1, n2);
            mpz_class expect = fam::closed_form_s("lemma1", n1, n2);
            mpz_class coh = fam::s_number_cohomology(f);
            mpz_class loc = loc::s_number(f.pair);
            ++rep.cases;
            if (coh != expect || loc != expect) {
                std::ostringstream os;
                os << "L(" << n1 << "," << n2 << "): closed form " << expect.get_str()
                   << ", cohomology " << coh.get_str() << ", localization " << loc.get_str();
                rep.failures.push_back(os.str());
            }
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport snl_sweep(int max_total)
{
    Timer t;
    SweepReport rep{"snL", 0, {}, 0.0};
    for (int n1 = 2; n1 <= max_total; n1 += 2) {
        for (int n2 = 1; n1 + n2 <= max_total; n2 += 2) {
            fam::FamilyPresentation f = fam::tilde_L(n1, n2);
            mpz_class expect = fam::closed_form_s("snL", n1, n2);
            mpz_class coh = fam::s_number_cohomology(f);
            mpz_class loc = loc::s_number(f.pair);
            ++rep.cases;
            if (coh != expect || loc != expect) {
                std::ostringstream os;
                os << "tildeL(" << n1 << "," << n2 << "): closed form " << expect.get_str()
                   << ", cohomology " << coh.get_str() << ", localization " << loc.get_str();
                rep.failures.push_back(os.str());
            }
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport snn_sweep(int max_total)
{
    Timer t;
    SweepReport rep{"snN", 0, {}, 0.0};
    for (int n1 = 2; n1 <= max_total; n1 += 2) {
        for (int n2 = 1; 1 + n1 + n2 <= max_total; n2 += 2) {
            fam::FamilyPresentation f = fam::tilde_N(n1, n2);
            mpz_class expect = fam::closed_form_s("snN", n1, n2);
            mpz_class coh = fam::s_number_cohomology(f);
            mpz_class loc = loc::s_number(f.pair);
            ++rep.cases;
            if (coh != expect || loc != expect) {
                std::ostringstream os;
                os << "tildeN(" << n1 << "," << n2 << "): closed form " << expect.get_str()
                   << ", cohomology " << coh.get_str() << ", localization " << loc.get_str();
                rep.failures.push_back(os.str());
            }
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport telescope_sweep(int max_total)
{
    Timer t;
    SweepReport rep{"telescope", 0, {}, 0.0};
    for (int n1 = 2; n1 <= max_total; ++n1) {
        for (int n2 = 1; n1 + n2 <= max_total; ++n2) {
            mpz_class s = fam::s_number_cohomology(fam::L(n1, n2)) -
                          2 * fam::s_number_cohomology(fam::L(n1 - 1, n2 + 1)) +
                          fam::s_number_cohomology(fam::L(n1 - 2, n2 + 2));
            mpz_class expect = nt::binomial(n1 + n2 + 1, n1);
            if (n1 % 2 != 0)
                expect = -expect;
            ++rep.cases;
            if (s != expect) {
                std::ostringstream os;
                os << "(" << n1 << "," << n2 << "): combination " << s.get_str() << " expected "
                   << expect.get_str();
                rep.failures.push_back(os.str());
            }
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport gcdbinom_sweep(int max_n)
{
    Timer t;
    SweepReport rep{"gcdbinom", 0, {}, 0.0};
    for (int n = 2; n <= max_n; ++n) {
        mpz_class g = nt::gcd_binomials(n);
        // Closed form: p when n is a prime power p^s, else 1.
        mpz_class expect = z(nt::m_of(n - 1));
        ++rep.cases;
        if (g != expect)
            rep.failures.push_back("n=" + std::to_string(n) + ": gcd " + g.get_str() +
                                   " expected " + expect.get_str());
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport gcddif_sweep(int max_k)
{
    Timer t;
    SweepReport rep{"gcddif", 0, {}, 0.0};
    for (int k = 2; k <= max_k; ++k) {
        mpz_class g = nt::gcd_diff_family(k);
        mpz_class expect = z(nt::m_of(2 * k + 1)) * z(nt::m_of(2 * k));
        ++rep.cases;
        if (g != expect)
            rep.failures.push_back("k=" + std::to_string(k) + ": gcd " + g.get_str() +
                                   " expected " + expect.get_str());
    }
    rep.seconds = t.elapsed();
    return rep;
}

namespace {

mpz_class a_family_gcd(int k)
{
    mpz_class g = 0;
    for (const auto& a : nt::a_family(k))
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

}  // namespace

SweepReport nmod2_sweep(int max_k)
{
    Timer t;
    SweepReport rep{"nmod2", 0, {}, 0.0};
    for (int k = 3; k <= max_k; ++k) {
        mpz_class g = a_family_gcd(k);
        int v2 = static_cast<int>(mpz_scan1(g.get_mpz_t(), 0));
        int expect = nt::m_of(2 * k - 1) == 2 ? 1 : 0;  // 2k a power of two
        ++rep.cases;
        if (v2 != expect)
            rep.failures.push_back("k=" + std::to_string(k) + ": v_2(gcd) " +
                                   std::to_string(v2) + " expected " + std::to_string(expect));
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport nmodp_sweep(int max_k)
{
    Timer t;
    SweepReport rep{"nmodp", 0, {}, 0.0};
    for (int k = 3; k <= max_k; ++k) {
        mpz_class g = a_family_gcd(k);
        for (long long p = 3; p <= 2 * k + 1; p += 2) {
            if (!nt::is_prime(p))
                continue;
            int vp = 0;
            mpz_class r = g;
            while (r != 0 && r % z(p) == 0) {
                r /= z(p);
                ++vp;
            }
            long long n = 2 * k + 1;
            while (n % p == 0)
                n /= p;
            int expect = n == 1 ? 1 : 0;  // 2k+1 a power of p
            ++rep.cases;
            if (vp != expect)
                rep.failures.push_back("k=" + std::to_string(k) + ", p=" + std::to_string(p) +
                                       ": v_p(gcd) " + std::to_string(vp) + " expected " +
                                       std::to_string(expect));
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport lucas_sweep(int max_n, bool parallel)
{
    Timer t;
    SweepReport rep{"lucas", 0, {}, 0.0};
    const long long primes[] = {2, 3, 5, 7};
    std::vector<mpz_class> row{1};  // Pascal row, updated in place
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (int m = n - 1; m >= 1; --m)
                row[static_cast<size_t>(m)] += row[static_cast<size_t>(m - 1)];
        }
        std::vector<std::string> row_failures;
        long long row_cases = 0;
#pragma omp parallel for schedule(static) reduction(+ : row_cases) if (parallel)
        for (int m = 0; m <= n; ++m) {
            for (long long p : primes) {
                long long direct = mpz_class(row[static_cast<size_t>(m)] % z(p)).get_si();
                long long lucas = nt::lucas_mod_p(n, m, p);
                ++row_cases;
                if (direct != lucas) {
#pragma omp critical
                    row_failures.push_back("C(" + std::to_string(n) + "," + std::to_string(m) +
                                           ") mod " + std::to_string(p) + ": direct " +
                                           std::to_string(direct) + " lucas " +
                                           std::to_string(lucas));
                }
            }
        }
        rep.cases += row_cases;
        for (auto& f : row_failures)
            rep.failures.push_back(std::move(f));
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport granville_sweep(int max_n, bool parallel)
{
    Timer t;
    SweepReport rep{"granville", 0, {}, 0.0};
    const long long primes[] = {2, 3, 5, 7};
    std::vector<std::vector<nt::FactorialPTable>> by_prime;
    for (long long p : primes) {
        by_prime.emplace_back();
        for (int q = 1; q <= 3; ++q)
            by_prime.back().emplace_back(nt::PrimePower(p, q));
    }

    std::vector<mpz_class> row{1};
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0) {
            row.push_back(1);
            for (int m = n - 1; m >= 1; --m)
                row[static_cast<size_t>(m)] += row[static_cast<size_t>(m - 1)];
        }
        std::vector<std::string> row_failures;
        long long row_cases = 0;
#pragma omp parallel for schedule(static) reduction(+ : row_cases) if (parallel)
        for (int m = 0; m <= n; ++m) {
            mpz_class unit;
            for (const auto& tables : by_prime) {
                long long p = tables.front().pq.p;
                // Direct big-integer oracle: strip p-factors once per prime,
                // reduce the unit for each exponent.
                int v = static_cast<int>(mpz_remove(unit.get_mpz_t(),
                                                    row[static_cast<size_t>(m)].get_mpz_t(),
                                                    z(p).get_mpz_t()));
                int kv = nt::kummer_valuation(n, m, p);
                for (const auto& table : tables) {
                    mpz_class want = unit % table.mod;
                    nt::GranvilleResult got = nt::granville_mod_pq(n, m, table);
                    ++row_cases;
                    if (got.e0 != v || got.residue != want || kv != v) {
#pragma omp critical
                        row_failures.push_back(
                            "C(" + std::to_string(n) + "," + std::to_string(m) + ") mod " +
                            std::to_string(p) + "^" + std::to_string(table.pq.q) +
                            ": direct (" + std::to_string(v) + "," + want.get_str() +
                            ") digit-formula (" + std::to_string(got.e0) + "," +
                            got.residue.get_str() + ") kummer " + std::to_string(kv));
                    }
                }
            }
        }
        rep.cases += row_cases;
        for (auto& f : row_failures)
            rep.failures.push_back(std::move(f));
    }
    rep.seconds = t.elapsed();
    return rep;
}

SweepReport lowdimqt_sweep()
{
    Timer t;
    SweepReport rep{"lowdimqt", 0, {}, 0.0};
    for (const auto& f : {fam::tilde_L(2, 1), fam::tilde_N(2, 1)}) {
        loc::Context ctx = loc::make_context(f.pair);
        for (const auto& omega : qt::all_chern_monomials(f.n)) {
            mpz_class v = loc::chern_number(ctx, omega);
            ++rep.cases;
            if (v != 0)
                rep.failures.push_back(f.name + ": " + omega.str() + " = " + v.get_str());
        }
    }
    rep.seconds = t.elapsed();
    return rep;
}

std::vector<fam::FamilyPresentation> agreement_instances(int max_dim)
{
    std::vector<fam::FamilyPresentation> out;
    for (int n = 1; n <= max_dim; ++n)
        out.push_back(fam::cpn(n));
    for (int n1 = 1; n1 <= max_dim; ++n1)
        for (int n2 = 1; n1 + n2 <= max_dim; ++n2)
            out.push_back(fam::L(n1, n2));
    for (int n1 = 2; n1 <= max_dim; n1 += 2)
        for (int n2 = 1; n1 + n2 <= max_dim; n2 += 2)
            out.push_back(fam::tilde_L(n1, n2));
    for (int n1 = 2; n1 <= max_dim; n1 += 2)
        for (int n2 = 1; 1 + n1 + n2 <= max_dim; n2 += 2)
            out.push_back(fam::tilde_N(n1, n2));
    // A few twisted projectivisations.
    if (max_dim >= 2)
        out.push_back(fam::proj_sum(1, {2}));
    if (max_dim >= 3)
        out.push_back(fam::proj_sum(1, {-1, 3}));
    if (max_dim >= 4)
        out.push_back(fam::proj_sum(2, {1, 2}));
    if (max_dim >= 5)
        out.push_back(fam::proj_sum(3, {2, 0}));
    // Products, including a triple one.
    if (max_dim >= 2)
        out.push_back(fam::product(fam::cpn(1), fam::cpn(1)));
    if (max_dim >= 3)
        out.push_back(fam::product(fam::cpn(1), fam::cpn(2)));
    if (max_dim >= 4) {
        out.push_back(fam::product(fam::cpn(2), fam::cpn(2)));
        out.push_back(fam::product(fam::cpn(1), fam::L(1, 2)));
        out.push_back(fam::product(fam::product(fam::cpn(1), fam::cpn(1)), fam::cpn(2)));
        out.push_back(fam::product(fam::cpn(1), fam::tilde_L(2, 1)));
    }
    if (max_dim >= 6)
        out.push_back(fam::product(fam::L(1, 1), fam::tilde_N(2, 1)));
    if (max_dim >= 8)
        out.push_back(fam::product(fam::tilde_L(2, 1), fam::tilde_N(2, 1)));
    std::vector<fam::FamilyPresentation> kept;
    for (auto& f : out)
        if (f.n <= max_dim)
            kept.push_back(std::move(f));
    return kept;
}

SweepReport engine_agreement_sweep(int max_dim, bool parallel)
{
    Timer t;
    SweepReport rep{"agreement", 0, {}, 0.0};
    std::vector<fam::FamilyPresentation> instances = agreement_instances(max_dim);
    long long count = static_cast<long long>(instances.size());
    std::vector<std::vector<std::string>> failures(instances.size());
    std::vector<long long> cases(instances.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < count; ++i) {
        const auto& f = instances[static_cast<size_t>(i)];
        try {
            loc::Context ctx = loc::make_context(f.pair);
            for (const auto& omega : qt::all_chern_monomials(f.n)) {
                mpz_class a = fam::chern_number_cohomology(f, omega);
                mpz_class b = loc::chern_number_serial(ctx, omega);
                ++cases[static_cast<size_t>(i)];
                if (a != b)
                    failures[static_cast<size_t>(i)].push_back(
                        f.name + ": " + omega.str() + " cohomology " + a.get_str() +
                        " localization " + b.get_str());
            }
            mpz_class sa = fam::s_number_cohomology(f);
            mpz_class sb = loc::s_number_serial(ctx);
            ++cases[static_cast<size_t>(i)];
            if (sa != sb)
                failures[static_cast<size_t>(i)].push_back(
                    f.name + ": s cohomology " + sa.get_str() + " localization " + sb.get_str());
        } catch (const std::exception& e) {
            failures[static_cast<size_t>(i)].push_back(f.name + ": exception: " + e.what());
        }
    }
    for (size_t i = 0; i < instances.size(); ++i) {
        rep.cases += cases[i];
        for (auto& s : failures[i])
            rep.failures.push_back(std::move(s));
    }
    rep.seconds = t.elapsed();
    return rep;
}

}  // namespace qtb::verify

#include "qtbord/localization.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace qtb::loc {

namespace {

std::vector<long long> primes_upto_count(int count)
{
    std::vector<long long> ps;
    long long c = 2;
    while (static_cast<int>(ps.size()) < count) {
        bool prime = true;
        for (long long d = 2; d * d <= c; ++d)
            if (c % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            ps.push_back(c);
        ++c;
    }
    return ps;
}

// Elementary symmetric polynomials e_0..e_n of the weight values.
std::vector<mpz_class> elementary_symmetric(const std::vector<mpz_class>& x)
{
    std::vector<mpz_class> e(x.size() + 1);
    e[0] = 1;
    for (const auto& xi : x)
        for (size_t k = x.size(); k >= 1; --k)
            e[k] += xi * e[k - 1];
    return e;
}

mpq_class vertex_contribution(const Context& ctx, size_t v, const qt::ChernMonomial& omega)
{
    const auto& x = ctx.weights[v];
    std::vector<mpz_class> e = elementary_symmetric(x);
    mpz_class num = 1;
    for (size_t k = 0; k < omega.exponents.size(); ++k)
        for (int t = 0; t < omega.exponents[k]; ++t)
            num *= e[k + 1];
    mpq_class q(ctx.signs[v] * num, e[x.size()]);  // e_n = product of weights
    q.canonicalize();
    return q;
}

mpq_class vertex_power_sum(const Context& ctx, size_t v)
{
    const auto& x = ctx.weights[v];
    mpz_class num = 0, t;
    for (const auto& xi : x) {
        mpz_pow_ui(t.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(ctx.n));
        num += t;
    }
    mpz_class den = 1;
    for (const auto& xi : x)
        den *= xi;
    mpq_class q(ctx.signs[v] * num, den);
    q.canonicalize();
    return q;
}

mpz_class integral_result(const mpq_class& total, const char* what)
{
    if (total.get_den() != 1)
        throw std::runtime_error(std::string(what) +
                                 ": vertex sum is not an integer (inconsistent sign data)");
    return total.get_num();
}

template <typename Contribution>
mpz_class sum_serial(const Context& ctx, Contribution&& f, const char* what)
{
    mpq_class total = 0;
    for (size_t v = 0; v < ctx.weights.size(); ++v)
        total += f(v);
    return integral_result(total, what);
}

template <typename Contribution>
mpz_class sum_parallel(const Context& ctx, Contribution&& f, const char* what)
{
    int threads = omp_get_max_threads();
    std::vector<mpq_class> partial(static_cast<size_t>(threads), mpq_class(0));
    long long count = static_cast<long long>(ctx.weights.size());
#pragma omp parallel
    {
        int t = omp_get_thread_num();
        mpq_class local = 0;
#pragma omp for schedule(static)
        for (long long v = 0; v < count; ++v)
            local += f(static_cast<size_t>(v));
        partial[static_cast<size_t>(t)] = local;
    }
    mpq_class total = 0;
    for (const auto& q : partial)  // combine in thread order
        total += q;
    return integral_result(total, what);
}

}  // namespace

Context make_context(const qt::CharacteristicPair& m, int skip)
{
    int n = m.dim();
    size_t nv = m.poly.vertices.size();
    if (nv == 0)
        throw std::invalid_argument("localization: pair has no vertices");

    // Weight covectors: rows of the inverse vertex submatrix.
    std::vector<IntMat> inverses;
    inverses.reserve(nv);
    for (const auto& v : m.poly.vertices) {
        std::vector<int> cols(v.begin(), v.end());
        std::sort(cols.begin(), cols.end());
        inverses.push_back(inverse_unimodular(m.lambda.select_columns(cols)));
    }

    std::vector<long long> primes = primes_upto_count(100);
    for (long long j : primes) {
        std::vector<long long> xi(static_cast<size_t>(n));
        long long pw = 1;
        for (int r = 0; r < n; ++r) {
            xi[static_cast<size_t>(r)] = pw;
            pw *= j;
        }
        Context ctx;
        ctx.n = n;
        ctx.signs = m.vertex_signs;
        ctx.xi = xi;
        ctx.weights.assign(nv, {});
        bool admissible = true;
        for (size_t v = 0; v < nv && admissible; ++v) {
            std::vector<mpz_class> x(static_cast<size_t>(n));
            for (int t = 0; t < n; ++t) {
                mpz_class dot = 0;
                for (int r = 0; r < n; ++r)
                    dot += inverses[v].at(t, r) * mpz_class(static_cast<long>(xi[static_cast<size_t>(r)]));
                if (dot == 0) {
                    admissible = false;
                    break;
                }
                x[static_cast<size_t>(t)] = dot;
            }
            ctx.weights[v] = std::move(x);
        }
        if (!admissible)
            continue;
        if (skip-- > 0)
            continue;
        return ctx;
    }
    throw std::runtime_error("localization: exhausted the direction sequence");
}

mpz_class chern_number(const Context& ctx, const qt::ChernMonomial& omega)
{
    if (omega.norm() != ctx.n)
        throw std::invalid_argument("chern_number: |omega| does not match the dimension");
    return sum_parallel(ctx, [&](size_t v) { return vertex_contribution(ctx, v, omega); },
                        "chern_number");
}

mpz_class chern_number_serial(const Context& ctx, const qt::ChernMonomial& omega)
{
    if (omega.norm() != ctx.n)
        throw std::invalid_argument("chern_number: |omega| does not match the dimension");
    return sum_serial(ctx, [&](size_t v) { return vertex_contribution(ctx, v, omega); },
                      "chern_number");
}

mpz_class s_number(const Context& ctx)
{
    return sum_parallel(ctx, [&](size_t v) { return vertex_power_sum(ctx, v); }, "s_number");
}

mpz_class s_number_serial(const Context& ctx)
{
    return sum_serial(ctx, [&](size_t v) { return vertex_power_sum(ctx, v); }, "s_number");
}

mpz_class chern_number(const qt::CharacteristicPair& m, const qt::ChernMonomial& omega)
{
    return chern_number(make_context(m), omega);
}

mpz_class s_number(const qt::CharacteristicPair& m)
{
    return s_number(make_context(m));
}

}  // namespace qtb::loc

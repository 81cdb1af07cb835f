// Benchmark comparing the OpenMP kernels against their serial references:
// the fixed-point vertex sums on a large connected sum, and the congruence
// sweeps.  Run with --quick for the sizes used in CI smoke tests.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>

#include <omp.h>

#include "qtbord/bordism.hpp"
#include "qtbord/localization.hpp"
#include "qtbord/verify.hpp"

using namespace qtb;

namespace {

double now_seconds()
{
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_it(F&& f)
{
    double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

void report(const std::string& name, double serial, double parallel)
{
    std::printf("%-34s serial %8.3f s   openmp %8.3f s   speedup %5.2fx\n", name.c_str(),
                serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv)
{
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0)
            quick = true;

    std::cout << "threads: " << omp_get_max_threads() << (quick ? " (quick sizes)" : "")
              << "\n";

    {
        // Vertex-sum kernel on a realized certificate: a connected sum with
        // several hundred fixed points, all Chern monomials of the dimension.
        bord::GeneratorCertificate cert = bord::find_y_even(quick ? 4 : 5);
        qt::CharacteristicPair pair = bord::realize_certificate(cert);
        loc::Context ctx = loc::make_context(pair);
        auto omegas = qt::all_chern_monomials(pair.dim());
        std::cout << "localization target: " << pair.poly.vertices.size() << " vertices, "
                  << omegas.size() << " monomials, n = " << pair.dim() << "\n";
        mpz_class check_serial = 0, check_parallel = 0;
        double ts = time_it([&] {
            for (const auto& omega : omegas)
                check_serial += loc::chern_number_serial(ctx, omega);
        });
        double tp = time_it([&] {
            for (const auto& omega : omegas)
                check_parallel += loc::chern_number(ctx, omega);
        });
        if (check_serial != check_parallel) {
            std::cerr << "kernel mismatch\n";
            return 1;
        }
        report("localization vertex sums", ts, tp);
    }

    {
        int max_n = quick ? 400 : 1500;
        double ts = 0, tp = 0;
        bool ok = true;
        ts = time_it([&] { ok = ok && verify::lucas_sweep(max_n, false).ok(); });
        tp = time_it([&] { ok = ok && verify::lucas_sweep(max_n, true).ok(); });
        if (!ok) {
            std::cerr << "lucas sweep failed\n";
            return 1;
        }
        report("lucas sweep to " + std::to_string(max_n), ts, tp);
    }

    {
        int max_n = quick ? 300 : 1200;
        double ts = 0, tp = 0;
        bool ok = true;
        ts = time_it([&] { ok = ok && verify::granville_sweep(max_n, false).ok(); });
        tp = time_it([&] { ok = ok && verify::granville_sweep(max_n, true).ok(); });
        if (!ok) {
            std::cerr << "granville sweep failed\n";
            return 1;
        }
        report("granville sweep to " + std::to_string(max_n), ts, tp);
    }

    {
        int dim = quick ? 6 : 8;
        double ts = 0, tp = 0;
        bool ok = true;
        ts = time_it([&] { ok = ok && verify::engine_agreement_sweep(dim, false).ok(); });
        tp = time_it([&] { ok = ok && verify::engine_agreement_sweep(dim, true).ok(); });
        if (!ok) {
            std::cerr << "agreement sweep failed\n";
            return 1;
        }
        report("engine agreement to dim " + std::to_string(dim), ts, tp);
    }

    return 0;
}

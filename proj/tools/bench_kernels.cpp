// Serial vs OpenMP timings for the data-parallel kernels: theta tables,
// oracle trace sums, Z_p table rows, marked length spectra.

#include <chrono>
#include <cstdio>

#include "flatdirac/families.hpp"
#include "flatdirac/isospec.hpp"
#include "flatdirac/spin_oracle.hpp"
#include "flatdirac/zp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace flatdirac;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = clk::now();
    f();
    auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n");
#endif

    {
        BieberbachGroup g = registry_group("dhw:7:a");
        LatticeCharacter triv(g.dim(), 1);
        double s = time_ms([&] { theta_tables(g, triv, 400, false); });
        double p = time_ms([&] { theta_tables(g, triv, 400, true); });
        report("theta_tables dhw:7:a cap 400", s, p);
    }
    {
        BieberbachGroup g = registry_group("example4.4:gamma");
        SpinStructure eps = enumerate_spin_structures(g)[0];
        auto rho = HolonomyCharacter::trivial(g).to_complex();
        auto run = [&](bool par) {
            for (long long key = 80; key <= 120; ++key) brute_multiplicity(g, eps, rho, key, par);
        };
        double s = time_ms([&] { run(false); });
        double p = time_ms([&] { run(true); });
        report("oracle sweep n=7 keys 80..120", s, p);
    }
    {
        double s = time_ms([&] { zp_table(503, true, false); });
        double p = time_ms([&] { zp_table(503, true, true); });
        report("zp_table pmax=503", s, p);
    }
    {
        BieberbachGroup a = registry_group("mjh:7:0:4");
        double s = time_ms([&] { marked_length_spectrum(a, Rational(20), false); });
        double p = time_ms([&] { marked_length_spectrum(a, Rational(20), true); });
        report("marked lengths mjh:7:0:4 cap 20", s, p);
    }
    return 0;
}

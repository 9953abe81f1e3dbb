// Compares the OpenMP family search against the serial reference and
// reports the speedup. Both must return identical lists.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "k3ci/k3_families.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double time_run(const char* label,
                std::vector<k3ci::FamilySpec> (*fn)(int, int, int), int g, int max_n,
                int max_deg, std::size_t& out_size) {
    const auto start = Clock::now();
    const auto result = fn(g, max_n, max_deg);
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    out_size = result.size();
    std::cout << "  " << label << ": " << elapsed << "s, " << result.size() << " families\n";
    return elapsed;
}

} // namespace

int main(int argc, char** argv) {
    int max_deg = argc > 1 ? std::atoi(argv[1]) : 8;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    for (int g : {8, 9, 10, 20}) {
        std::cout << "search g=" << g << " max_n=4 max_deg=" << max_deg << "\n";
        std::size_t n_serial = 0, n_parallel = 0;
        const double t_serial =
            time_run("serial  ", k3ci::search_families_serial, g, 4, max_deg, n_serial);
        const double t_parallel =
            time_run("parallel", k3ci::search_families, g, 4, max_deg, n_parallel);
        if (k3ci::search_families(g, 4, max_deg) !=
            k3ci::search_families_serial(g, 4, max_deg)) {
            std::cerr << "MISMATCH between serial and parallel results\n";
            return 1;
        }
        std::cout << "  speedup: " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
    }
    return 0;
}

// Times the serial reference engine against the grouped evaluator and its
// multithreaded variant, and checks they agree while at it.
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "symdet/cyclecount.hpp"

using namespace symdet;

namespace {

double time_once(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::uint64_t mix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

AlgMatrix<Rational> random_matrix(const AlgebraHandle& alg, int n, std::uint64_t& s) {
    AlgMatrix<Rational> m(alg, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            ElementAccum<Rational> acc;
            for (int t = 0; t < 2; ++t)
                acc.add_term(static_cast<BasisIndex>(mix64(s) % alg->dim()),
                             Rational(static_cast<long>(mix64(s) % 7) - 3));
            m.at(r, c) = acc.take(alg);
        }
    return m;
}

void bench_case(const char* name, const AlgMatrix<Rational>& m, bool include_naive,
                int threads) {
    SdetOptions serial;
    serial.force = true;
    SdetOptions parallel = serial;
    parallel.threads = threads;

    AlgElement<Rational> reference = AlgElement<Rational>::zero(m.algebra());
    double t_naive = -1.0;
    if (include_naive) t_naive = time_once([&] { reference = sdet_naive(m, serial); });
    AlgElement<Rational> fast1 = AlgElement<Rational>::zero(m.algebra());
    const double t_fast1 = time_once([&] { fast1 = sdet_fast(m, serial); });
    AlgElement<Rational> fastN = AlgElement<Rational>::zero(m.algebra());
    const double t_fastN = time_once([&] { fastN = sdet_fast(m, parallel); });

    const bool agree = (!include_naive || reference == fast1) && fast1 == fastN;
    if (include_naive)
        std::printf("%-28s naive %9.1f ms   fast(1) %9.1f ms   fast(%d) %9.1f ms   %s\n", name,
                    t_naive, t_fast1, threads, t_fastN, agree ? "agree" : "MISMATCH");
    else
        std::printf("%-28s naive       (skip)   fast(1) %9.1f ms   fast(%d) %9.1f ms   %s\n",
                    name, t_fast1, threads, t_fastN, agree ? "agree" : "MISMATCH");
}

} // namespace

int main() {
    int threads = 2;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("sdet engines, %d worker threads available\n", threads);

    std::uint64_t seed = 42;
    bench_case("mat:2 random 5x5", random_matrix(matrix_algebra(2), 5, seed), true, threads);
    bench_case("cycle:4 random 4x4", random_matrix(cycle_algebra(4), 4, seed), true, threads);
    bench_case("cycle:6 complete-graph 6x6", build_mg(Graph::complete(6)), true, threads);
    bench_case("cycle:7 complete-graph 7x7", build_mg(Graph::complete(7)), false, threads);
    return 0;
}

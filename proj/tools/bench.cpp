// Benchmark: packed parallel kernels against the serial references.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "obstrukt/f2.hpp"
#include "obstrukt/oracle.hpp"
#include "obstrukt/steenrod.hpp"

using namespace obk;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BitMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t w = 0; w < m.words_per_row(); ++w) m.row_data(r)[w] = rng();
    // mask tail bits beyond the column count
    unsigned tail = n % 64;
    if (tail)
        for (std::size_t r = 0; r < n; ++r)
            m.row_data(r)[m.words_per_row() - 1] &= (std::uint64_t(1) << tail) - 1;
    return m;
}

void bench_rank() {
    std::printf("GF(2) rank, random n x n, density 1/2\n");
    std::printf("%8s %14s %14s %14s %10s\n", "n", "naive (s)", "packed (s)", "parallel (s)",
                "speedup");
    for (std::size_t n : {256, 512, 1024, 2048}) {
        BitMatrix m = random_matrix(n, 0xb0b0 + n);
        double t_naive = -1;
        std::size_t r_naive = 0;
        if (n <= 1024) {
            NaiveMatrix nm = to_naive(m);
            auto t0 = std::chrono::steady_clock::now();
            r_naive = naive_rank(nm);
            t_naive = seconds(t0);
        }
        auto t1 = std::chrono::steady_clock::now();
        std::size_t r_packed = f2_rank(m, false);
        double t_packed = seconds(t1);
        auto t2 = std::chrono::steady_clock::now();
        std::size_t r_par = f2_rank(m, true);
        double t_par = seconds(t2);
        if (r_packed != r_par || (t_naive >= 0 && r_naive != r_packed)) {
            std::printf("rank mismatch at n=%zu\n", n);
            std::exit(2);
        }
        if (t_naive >= 0)
            std::printf("%8zu %14.4f %14.4f %14.4f %9.1fx\n", n, t_naive, t_packed, t_par,
                        t_packed > 0 ? t_naive / t_par : 0.0);
        else
            std::printf("%8zu %14s %14.4f %14.4f %9.1fx\n", n, "-", t_packed, t_par,
                        t_par > 0 ? t_packed / t_par : 0.0);
    }
}

void bench_oracle() {
    std::printf("\nAdem relations refereed on t1*...*t10, pairs a < 2b with a+b <= 18\n");
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned b = 1; b <= 18; ++b)
        for (unsigned a = 1; a < 2 * b && a + b <= 18; ++a) pairs.push_back({a, b});
    OPoly input = product_of_all_vars(10);

    auto run_pair = [&](unsigned a, unsigned b) {
        SqWord w{a, b};
        return oracle_equivalent(w, adem_reduce(w), input);
    };

    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto [a, b] : pairs) ok = ok && run_pair(a, b);
    double t_serial = seconds(t0);

    auto t1 = std::chrono::steady_clock::now();
    bool ok_par = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : ok_par)
#endif
    for (std::size_t i = 0; i < pairs.size(); ++i)
        ok_par = ok_par && run_pair(pairs[i].first, pairs[i].second);
    double t_par = seconds(t1);

    if (!ok || !ok_par) {
        std::printf("oracle disagreement\n");
        std::exit(2);
    }
    std::printf("%zu pairs   serial %.3fs   parallel %.3fs   speedup %.1fx\n", pairs.size(),
                t_serial, t_par, t_par > 0 ? t_serial / t_par : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, %d threads\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled, serial build\n\n");
#endif
    bench_rank();
    bench_oracle();
    return 0;
}

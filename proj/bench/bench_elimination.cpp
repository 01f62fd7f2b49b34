// Compares the OpenMP elimination kernels against the serial reference on
// random integer matrices and on a Jacobian-ring workload. Results of both
// kernels are checked for equality while timing.

#include <chrono>
#include <cstdio>
#include <random>

#include "hsmf/jacobian.hpp"
#include "hsmf/parser.hpp"
#include "hsmf/qmatrix.hpp"

using namespace hsmf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

QMatrix random_int_matrix(int n, int bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    QMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = dist(rng);
    return m;
}

template <typename F>
double timed(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds(t0, Clock::now());
}

}  // namespace

int main() {
    std::mt19937_64 rng(20240901);

    std::printf("fraction-free rank, random n x n, entries in [-9,9]\n");
    std::printf("%8s %12s %12s %9s\n", "n", "serial[s]", "parallel[s]", "speedup");
    for (int n : {60, 100, 140, 180}) {
        QMatrix m = random_int_matrix(n, 9, rng);
        int r1 = 0, r2 = 0;
        double ts = timed([&] { r1 = rank_serial(m); });
        double tp = timed([&] { r2 = rank(m); });
        if (r1 != r2) {
            std::printf("KERNEL MISMATCH: %d vs %d\n", r1, r2);
            return 1;
        }
        std::printf("%8d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }

    std::printf("\nrational row reduction, random n x n, entries in [-9,9]\n");
    std::printf("%8s %12s %12s %9s\n", "n", "serial[s]", "parallel[s]", "speedup");
    for (int n : {40, 60, 80}) {
        QMatrix m = random_int_matrix(n, 9, rng);
        EchelonForm a, b;
        double ts = timed([&] { a = row_reduce_serial(m); });
        double tp = timed([&] { b = row_reduce(m); });
        if (!(a.mat == b.mat && a.pivots == b.pivots)) {
            std::printf("KERNEL MISMATCH in row_reduce\n");
            return 1;
        }
        std::printf("%8d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
    }

    // Jacobian ideal spans of a perturbed quartic: realistic sparse-ish input
    VarSystem vars{{"x1", "x2", "x3", "x4", "x5"}, {1, 1, 1, 1, 2}, 4};
    Polynomial omega = parse_poly(
        "x1^4 + x2^4 + x3^4 + x4^4 + x5^2 + x1*x2*x3*x4 + x1^3*x2", vars);
    JacobianRing jac(omega, vars);
    std::printf("\nideal-span row reduction, perturbed quartic double solid\n");
    std::printf("%8s %8s %8s %12s %12s %9s\n", "degree", "rows", "cols", "serial[s]",
                "parallel[s]", "speedup");
    for (int e : {6, 8, 10}) {
        QMatrix m = jac.ideal_generator_matrix(e);
        EchelonForm a, b;
        double ts = timed([&] { a = row_reduce_serial(m); });
        double tp = timed([&] { b = row_reduce(m); });
        if (!(a.mat == b.mat && a.pivots == b.pivots)) {
            std::printf("KERNEL MISMATCH in jacobian workload\n");
            return 1;
        }
        std::printf("%8d %8d %8d %12.3f %12.3f %8.2fx\n", e, m.rows(), m.cols(), ts, tp,
                    ts / tp);
    }
    return 0;
}

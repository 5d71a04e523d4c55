// Serial reference kernels vs the OpenMP kernels, plus verifier scaling.
//
//   bench_enumeration [max_complete_n] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "answerrank/generate.hpp"
#include "answerrank/oracle.hpp"
#include "answerrank/verification.hpp"

using namespace answerrank;

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 11;
  const int threads = argc > 2 ? std::atoi(argv[2]) : 0;
#ifdef _OPENMP
  std::printf("openmp threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n");
#endif

  std::printf("\nrings on complete graphs\n%4s %12s %10s %10s %8s\n", "n", "rings", "serial_s",
              "parallel_s", "speedup");
  for (std::size_t n = 6; n <= max_n; ++n) {
    const auto inst = generate_tsp(n, 1.0, {1, 1000000}, n);
    std::size_t a = 0, b = 0;
    const double ts = seconds([&] { a = serial::enumerate_rings(inst).total_answers(); });
    const double tp =
        seconds([&] { b = enumerate_rings(inst, {Caps{}, threads}).total_answers(); });
    std::printf("%4zu %12zu %10.3f %10.3f %8.2f%s\n", n, a, ts, tp, ts / tp,
                a == b ? "" : "  MISMATCH");
  }

  std::printf("\nsatisfying assignments, random 3-CNF at ratio 2\n%4s %10s %10s %10s\n", "k",
              "models", "serial_s", "parallel_s");
  for (std::size_t k : {14, 16, 18, 20}) {
    const auto f = generate_cnf(k, 2 * k, 3, k);
    std::size_t a = 0, b = 0;
    const double ts = seconds([&] { a = serial::enumerate_assignments(f).total_answers(); });
    const double tp =
        seconds([&] { b = enumerate_assignments(f, {Caps{}, threads}).total_answers(); });
    std::printf("%4zu %10zu %10.3f %10.3f%s\n", k, a, ts, tp, a == b ? "" : "  MISMATCH");
  }

  std::printf("\nring claim verification on a cycle graph\n%8s %14s\n", "n", "ns_per_claim");
  for (std::size_t n : {100, 1000, 10000}) {
    std::vector<Edge> edges;
    for (NodeId u = 1; u <= n; ++u) edges.push_back({u, u % static_cast<NodeId>(n) + 1, 1});
    const WeightedGraph g(n, std::move(edges));
    std::vector<NodeId> seq(n);
    std::iota(seq.begin(), seq.end(), NodeId{1});
    const int reps = static_cast<int>(200000 / n) + 1;
    bool ok = true;
    const double t = seconds([&] {
      for (int r = 0; r < reps; ++r) ok = ok && verify_ring_claim(g, seq, static_cast<Length>(n)).accepted;
    });
    std::printf("%8zu %14.0f%s\n", n, t / reps * 1e9, ok ? "" : "  REJECTED");
  }
  return 0;
}

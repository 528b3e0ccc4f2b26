// Serial against OpenMP timings for the parallel kernels. Each row also checks
// that both paths return the same value.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "qweyl/braid.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/rep.hpp"
#include "support.hpp"

using namespace qweyl;
using qweyl::testing::random_laurent_matrix;
using qweyl::testing::random_poly_matrix;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::mt19937 rng(7);
  const Field f = Field::prime(101);
  std::printf("threads: %d, repetitions: %d\n", omp_get_max_threads(), reps);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  {
    const auto a = random_laurent_matrix(rng, f, 48, 3, 2);
    const auto b = random_laurent_matrix(rng, f, 48, 3, 2);
    Matrix<LaurentPolynomial> rs, rp;
    const double s = seconds([&] { rs = mat_mul(a, b, Exec::serial); }, reps);
    const double p = seconds([&] { rp = mat_mul(a, b, Exec::parallel); }, reps);
    row("mat_mul 48x48 Z101[x^+-1]", s, p, rs == rp);
  }
  {
    const auto m = random_poly_matrix(rng, f, 24, 3);
    Polynomial ds, dp;
    const double s = seconds([&] { ds = det_bareiss(m, Exec::serial); }, reps);
    const double p = seconds([&] { dp = det_bareiss(m, Exec::parallel); }, reps);
    row("det_bareiss 24x24 Z101[x]", s, p, ds == dp);
  }
  {
    // The Kishino presentation: its gcd never reaches 1, so every minor is used.
    const LinearSwitch sw = weyl_switch(build_rep(*builtin_rep_spec("kishino3")));
    const auto m = qweyl::testing::minus_identity(represent(parse_braid("kishino", Flavor::flat), sw));
    MinorsGcd gs, gp;
    const double s = seconds([&] { gs = minors_gcd(m, 3, Exec::serial); }, reps);
    const double p = seconds([&] { gp = minors_gcd(m, 3, Exec::parallel); }, reps);
    row("minors_gcd Kishino 9x9 r=3", s, p, gs.gcd == gp.gcd);
  }
  {
    const LinearSwitch sw = weyl_switch(build_rep(*builtin_rep_spec("kishino3")));
    const BraidWord w = parse_braid(qweyl::testing::random_word(rng, 8, 200, true, false), Flavor::flat);
    Matrix<LaurentPolynomial> rs, rp;
    const double s = seconds([&] { rs = represent(w, sw, Exec::serial); }, reps);
    const double p = seconds([&] { rp = represent(w, sw, Exec::parallel); }, reps);
    row("represent 8 strands k=3, 200 letters", s, p, rs == rp);
  }
  return 0;
}

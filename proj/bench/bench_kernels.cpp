// Timing comparison of the OpenMP pair-update exponential kernel against the
// serial reference implementation, with a cross-check of their agreement.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qocsim/pauli.hpp"
#include "qocsim/statevector.hpp"

using namespace qocsim;

namespace {

PauliString random_string(std::size_t width, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::string text(width, 'I');
  const char alphabet[] = {'I', 'X', 'Y', 'Z'};
  bool nontrivial = false;
  for (auto& c : text) {
    c = alphabet[pick(rng)];
    nontrivial |= c != 'I';
  }
  if (!nontrivial) text[0] = 'X';
  return PauliString(text);
}

StateVector random_state(std::size_t width, std::mt19937_64& rng) {
  StateVector psi(width);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    psi[i] = complexd(g(rng), g(rng));
  psi.normalize();
  return psi;
}

template <typename F>
double time_ms(F&& body, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         reps;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads: " << omp_get_max_threads()
            << "\n";
#else
  std::cout << "OpenMP disabled (both kernels run serially)\n";
#endif

  std::vector<std::size_t> widths{12, 16, 20};
  if (argc > 1) {
    widths.clear();
    for (int i = 1; i < argc; ++i)
      widths.push_back(static_cast<std::size_t>(std::stoul(argv[i])));
  }

  std::mt19937_64 rng(12345);
  std::cout << "width      dim   parallel/op   reference/op   speedup   "
               "max|diff|\n";
  for (const std::size_t width : widths) {
    const int n_ops = 32;
    std::vector<PauliString> ops;
    std::vector<double> angles;
    for (int k = 0; k < n_ops; ++k) {
      ops.push_back(random_string(width, rng));
      angles.push_back(0.01 * (k + 1));
    }
    const StateVector initial = random_state(width, rng);

    StateVector parallel = initial;
    StateVector serial = initial;
    const int reps = width >= 20 ? 2 : 8;
    const double t_par = time_ms(
        [&] {
          for (int k = 0; k < n_ops; ++k)
            apply_pauli_exponential(parallel, ops[k], angles[k]);
        },
        reps) / n_ops;
    const double t_ref = time_ms(
        [&] {
          for (int k = 0; k < n_ops; ++k)
            reference::apply_pauli_exponential(serial, ops[k], angles[k]);
        },
        reps) / n_ops;

    double max_diff = 0.0;
    for (std::size_t i = 0; i < parallel.dim(); ++i)
      max_diff = std::max(max_diff, std::abs(parallel[i] - serial[i]));

    std::printf("%5zu %8zu   %8.3f ms    %8.3f ms   %6.2fx   %.3e\n", width,
                parallel.dim(), t_par, t_ref, t_ref / t_par, max_diff);
  }
  return 0;
}

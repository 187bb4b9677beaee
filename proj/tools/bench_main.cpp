// Times the batch kernels under both execution policies and confirms the
// deterministic-merge contract: a verification report must not change when
// the work is spread over threads.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reinhardt/batch.hpp"
#include "reinhardt/parse.hpp"
#include "reinhardt/sampling.hpp"
#include "reinhardt/verify.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

using namespace reinhardt;

double seconds_for(const std::function<void()>& body, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel timing of the evaluation kernels"};
  std::string alpha_spec = "3,2";
  std::size_t count = 200000;
  std::uint64_t seed = 0;
  int reps = 3;
  app.add_option("-a,--alpha", alpha_spec, "Exponent entries");
  app.add_option("--count", count, "Sample count");
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--reps", reps, "Repetitions (best time wins)");
  CLI11_PARSE(app, argc, argv);

  const DomainDescriptor domain = domain_from_spec(alpha_spec);
  const Point base(domain.dimension(), ComplexScalar(0.0, 0.0));

  SampleOptions sopts;
  sopts.seed = seed;
  sopts.count = count;
  const SampleSet samples = sample_points(domain, sopts);

#if defined(_OPENMP)
  std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in (parallel policy runs serially)\n");
#endif
  std::printf("alpha: %s, samples: %zu\n", alpha_spec.c_str(), count);

  std::vector<MetricRow> rows;
  const double t_serial = seconds_for(
      [&] { rows = evaluate_rows(domain, base, samples.points, Exec::Serial); },
      reps);
  const double t_parallel = seconds_for(
      [&] {
        rows = evaluate_rows(domain, base, samples.points, Exec::Parallel);
      },
      reps);
  std::printf("evaluate_rows: serial %.3fs, parallel %.3fs, speedup %.2fx\n",
              t_serial, t_parallel, t_serial / t_parallel);

  VerificationReport serial_report, parallel_report;
  const double c_serial = seconds_for(
      [&] {
        serial_report =
            check_inequality_chain(domain, base, samples,
                                   kDefaultCheckTolerance, Exec::Serial);
      },
      reps);
  const double c_parallel = seconds_for(
      [&] {
        parallel_report =
            check_inequality_chain(domain, base, samples,
                                   kDefaultCheckTolerance, Exec::Parallel);
      },
      reps);
  std::printf("chain check:   serial %.3fs, parallel %.3fs, speedup %.2fx\n",
              c_serial, c_parallel, c_serial / c_parallel);

  const std::string a = report_to_json_string(serial_report);
  const std::string b = report_to_json_string(parallel_report);
  const bool identical = a == b;
  std::printf("reports identical across policies: %s\n",
              identical ? "yes" : "NO");
  return identical ? 0 : 1;
}

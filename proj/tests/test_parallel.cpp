#include "doctest.h"
#include "ncg/parallel.hpp"
#include "ncg/random.hpp"

using namespace ncg;

namespace {

double case_residual(int i) {
  Rng rng(derive_seed(42, "parallel-test", static_cast<std::uint64_t>(i)));
  double acc = 0.0;
  for (int k = 0; k < 100; ++k) acc += rng.uniform();
  return acc;
}

}  // namespace

TEST_CASE("parallel reduction matches the serial reference bit for bit") {
  const double serial = max_over_cases_serial(500, case_residual);
  CHECK(max_over_cases(500, case_residual) == serial);
  CHECK(max_over_cases(500, case_residual, 3) == serial);
  CHECK(max_over_cases(0, case_residual) == 0.0);
}

TEST_CASE("exceptions inside cases propagate") {
  auto boom = [](int i) -> double {
    if (i == 3) throw validation_error("case 3 failed");
    return 0.0;
  };
  CHECK_THROWS_AS(max_over_cases(8, boom), validation_error);
  CHECK_THROWS_AS(max_over_cases_serial(8, boom), validation_error);
}

#include <gtest/gtest.h>

#include "latrec/verify.hpp"

using namespace latrec;

// Built against a library whose dual() doubles the first dual basis vector.
TEST(FaultInjection, DualitySuiteReportsCounterexample) {
  VerifyOptions opt;
  opt.cases = 20;
  std::vector<PropertyReport> r = run_suite("duality", opt);
  std::size_t failed = 0;
  for (const auto& p : r) {
    if (p.pass()) continue;
    ++failed;
    nlohmann::json j = p.to_json();
    EXPECT_EQ(j["status"], "FAIL");
    EXPECT_TRUE(j.contains("counterexample"));
    EXPECT_FALSE(j["counterexample"].is_null());
  }
  EXPECT_GT(failed, 0u);
}

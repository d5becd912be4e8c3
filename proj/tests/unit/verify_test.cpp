#include <gtest/gtest.h>

#include "circdeblur/circulant.hpp"
#include "circdeblur/convolution.hpp"
#include "circdeblur/error.hpp"
#include "circdeblur/verify.hpp"

namespace circdeblur {
namespace {

const std::vector<std::string> kIds{"Theorem 3.1", "Lemma 3.1",   "Theorem 3.2", "Lemma 3.2",
                                    "Theorem 3.3", "Theorem 4.1", "Theorem 4.2", "Theorem 4.3"};

TEST(Verify, LibraryPassesEveryCheck) {
  VerifyOptions options;
  options.trials = 10;
  const auto results = run_verification(options);
  ASSERT_EQ(results.size(), kIds.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].id, kIds[i]);
    EXPECT_TRUE(results[i].passed) << results[i].id << ": " << results[i].counterexample;
    EXPECT_GT(results[i].instances, 0u);
  }
  EXPECT_TRUE(all_passed(results));
}

TEST(Verify, ReportIsDeterministicForASeed) {
  VerifyOptions options;
  options.trials = 5;
  options.seed = 99;
  const std::string first = format_report(run_verification(options));
  EXPECT_EQ(first, format_report(run_verification(options)));
  EXPECT_EQ(first.rfind("Theorem 3.1: PASS\n", 0), 0u);
}

TEST(Verify, CatchesFrequencyPathWithoutKernelReversal) {
  VerifyOptions options;
  options.trials = 10;
  // Undo the reversal the modified path applies internally.
  options.paths.freq_modified_1d = [](const Signal& x, const Kernel1D& h) {
    return freq_conv_1d_modified(x, reverse_kernel_1d(h));
  };
  const auto results = run_verification(options);
  EXPECT_FALSE(all_passed(results));
  for (const auto& r : results) {
    if (r.id == "Theorem 3.3") {
      EXPECT_FALSE(r.passed);
      EXPECT_FALSE(r.counterexample.empty());
    } else {
      EXPECT_TRUE(r.passed) << r.id;
    }
  }
  const std::string report = format_report(results);
  EXPECT_NE(report.find("Theorem 3.3: FAIL\n  counterexample: "), std::string::npos);
}

TEST(Verify, CatchesSwappedTwoDimensionalPaths) {
  VerifyOptions options;
  options.trials = 10;
  options.paths.centered_2d = options.paths.classic_2d;
  EXPECT_FALSE(all_passed(run_verification(options)));
}

TEST(Verify, SizeBounds) {
  VerifyOptions options;
  options.max_size = 0;
  EXPECT_THROW(run_verification(options), InvalidArgument);
  options.max_size = 65;
  EXPECT_THROW(run_verification(options), InvalidArgument);
  options.max_size = 1;
  options.trials = 3;
  EXPECT_TRUE(all_passed(run_verification(options)));
}

}  // namespace
}  // namespace circdeblur

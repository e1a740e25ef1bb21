// Subcommands of the pgenum tool.  Each returns a process exit code.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pgenum::cli {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int order = 0;
  std::optional<int> max_dim;
  bool bpg_only = false;
  bool indecomposable = false;
  std::string out;
  unsigned threads = 1;
  bool quiet = false;
};

int run_enumerate(const RunConfig& c);
int run_count(const RunConfig& c);
int run_verify(const std::string& in, const std::string& expect);
int run_degree(const std::string& in, const std::string& out);
int run_catalog();

}  // namespace pgenum::cli

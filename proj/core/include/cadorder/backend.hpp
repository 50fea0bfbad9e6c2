// External CAD backend execution.  Each call launches a fresh process so
// no warm caches survive between timings; a table-driven mock backend runs
// the same pipeline without any computer-algebra system installed.

#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cadorder/ordering.hpp"
#include "cadorder/problem.hpp"

namespace cadorder {

struct BackendResult {
  enum class Status { Ok, Timeout, Crash };
  Status status = Status::Crash;
  double seconds = 0;  // wall-clock, valid when status == Ok
  std::string detail;  // diagnostic for crashes
};

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CadBackend {
 public:
  virtual ~CadBackend() = default;
  virtual BackendResult run(const Problem& problem, OrderingId ordering, double limit_seconds) = 0;
};

// Command template with {problem_file}, {ordering}, {limit_seconds}
// placeholders, e.g.
//   maple -q cad.mpl {problem_file} {ordering} {limit_seconds}
struct BackendSpec {
  std::string command_template;
  std::string working_dir;                    // empty: inherit
  std::vector<std::string> env_passthrough;   // empty: inherit everything

  void validate() const;  // all three placeholders present
};

std::string substitute_template(const std::string& command_template, const std::string& problem_file,
                                const std::string& ordering, double limit_seconds);

// Runs the template through /bin/sh, one fresh process per call, killed at
// the limit.  A nonzero exit is a crash, distinct from a timeout.
class ProcessBackend : public CadBackend {
 public:
  explicit ProcessBackend(BackendSpec spec);
  BackendResult run(const Problem& problem, OrderingId ordering, double limit_seconds) override;

  const BackendSpec& spec() const { return spec_; }

 private:
  BackendSpec spec_;
};

// Table of scripted times keyed by (problem id, ordering index); a scripted
// time above the limit reports TIMEOUT.  Counts every call so tests can
// verify the one-process-per-timing contract.
class MockBackend : public CadBackend {
 public:
  MockBackend() = default;
  explicit MockBackend(std::map<std::string, std::array<double, kNumOrderings>> table)
      : table_(std::move(table)) {}

  // Fixture file: JSON object {problem id: [t0..t5]}.
  static MockBackend from_file(const std::string& path);

  BackendResult run(const Problem& problem, OrderingId ordering, double limit_seconds) override;

  void set_times(const std::string& id, const std::array<double, kNumOrderings>& times) {
    table_[id] = times;
  }
  size_t calls() const { return calls_; }
  const std::vector<std::string>& call_log() const { return call_log_; }

 private:
  std::map<std::string, std::array<double, kNumOrderings>> table_;
  size_t calls_ = 0;
  std::vector<std::string> call_log_;  // "id:ordering:limit"
};

// "mock:fixture.json" selects the mock backend; anything else is treated
// as a ProcessBackend command template.  Used by the CLI for the
// CADORDER_BACKEND environment variable and the --backend flag.
std::unique_ptr<CadBackend> make_backend(const std::string& descriptor);

}  // namespace cadorder

#include "cadorder/backend.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cadorder/poly.hpp"

namespace cadorder {

namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
}

std::string format_limit(double limit_seconds) {
  std::ostringstream os;
  os << limit_seconds;
  return os.str();
}

}  // namespace

void BackendSpec::validate() const {
  for (const char* p : {"{problem_file}", "{ordering}", "{limit_seconds}"})
    if (command_template.find(p) == std::string::npos)
      throw BackendError(std::string("backend template missing placeholder ") + p);
}

std::string substitute_template(const std::string& command_template, const std::string& problem_file,
                                const std::string& ordering, double limit_seconds) {
  std::string cmd = command_template;
  replace_all(cmd, "{problem_file}", problem_file);
  replace_all(cmd, "{ordering}", ordering);
  replace_all(cmd, "{limit_seconds}", format_limit(limit_seconds));
  return cmd;
}

ProcessBackend::ProcessBackend(BackendSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

BackendResult ProcessBackend::run(const Problem& problem, OrderingId ordering, double limit_seconds) {
  // Fresh problem file per call; the child never sees prior state.
  char path[] = "/tmp/cadorder-problem-XXXXXX";
  int fd = mkstemp(path);
  if (fd < 0) throw BackendError("cannot create temporary problem file");
  {
    std::ofstream out(path);
    for (const auto& p : problem.polynomials) out << p.to_string() << "\n";
  }
  close(fd);

  std::string cmd =
      substitute_template(spec_.command_template, path, ordering.to_string(), limit_seconds);

  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    unlink(path);
    throw BackendError("fork failed");
  }
  if (pid == 0) {
    setpgid(0, 0);  // own process group so the whole pipeline can be killed
    if (!spec_.working_dir.empty() && chdir(spec_.working_dir.c_str()) != 0) _exit(127);
    if (!spec_.env_passthrough.empty()) {
      std::vector<std::string> kept;
      for (const auto& name : spec_.env_passthrough)
        if (const char* v = getenv(name.c_str())) kept.push_back(name + "=" + v);
      std::vector<char*> envp;
      for (auto& kv : kept) envp.push_back(kv.data());
      envp.push_back(nullptr);
      execle("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr), envp.data());
    } else {
      execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    }
    _exit(127);
  }

  BackendResult result;
  bool killed = false;
  int status = 0;
  for (;;) {
    pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) {
      unlink(path);
      throw BackendError("waitpid failed");
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!killed && elapsed >= limit_seconds) {
      kill(-pid, SIGKILL);
      killed = true;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  unlink(path);

  if (killed) {
    result.status = BackendResult::Status::Timeout;
    return result;
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) == 0) {
    result.status = BackendResult::Status::Ok;
    result.seconds = elapsed;
    return result;
  }
  result.status = BackendResult::Status::Crash;
  std::ostringstream os;
  if (WIFEXITED(status))
    os << "backend exited with status " << WEXITSTATUS(status);
  else if (WIFSIGNALED(status))
    os << "backend killed by signal " << WTERMSIG(status);
  else
    os << "backend ended abnormally";
  result.detail = os.str();
  return result;
}

MockBackend MockBackend::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BackendError("cannot read mock fixture: " + path);
  nlohmann::json j;
  in >> j;
  std::map<std::string, std::array<double, kNumOrderings>> table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto v = it.value().get<std::vector<double>>();
    if (v.size() != kNumOrderings)
      throw BackendError("mock fixture entry for " + it.key() + " must list 6 times");
    std::array<double, kNumOrderings> row{};
    std::copy(v.begin(), v.end(), row.begin());
    table[it.key()] = row;
  }
  return MockBackend(std::move(table));
}

BackendResult MockBackend::run(const Problem& problem, OrderingId ordering, double limit_seconds) {
  ++calls_;
  {
    std::ostringstream os;
    os << problem.id << ":" << ordering.index() << ":" << format_limit(limit_seconds);
    call_log_.push_back(os.str());
  }
  auto it = table_.find(problem.id);
  BackendResult result;
  if (it == table_.end()) {
    result.status = BackendResult::Status::Crash;
    result.detail = "mock backend has no times for problem " + problem.id;
    return result;
  }
  double t = it->second[static_cast<size_t>(ordering.index())];
  if (t > limit_seconds) {
    result.status = BackendResult::Status::Timeout;
  } else {
    result.status = BackendResult::Status::Ok;
    result.seconds = t;
  }
  return result;
}

std::unique_ptr<CadBackend> make_backend(const std::string& descriptor) {
  if (descriptor.rfind("mock:", 0) == 0)
    return std::make_unique<MockBackend>(MockBackend::from_file(descriptor.substr(5)));
  BackendSpec spec;
  spec.command_template = descriptor;
  return std::make_unique<ProcessBackend>(std::move(spec));
}

}  // namespace cadorder

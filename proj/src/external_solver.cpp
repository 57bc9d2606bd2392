// Copyright 2026 The GRT Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grt/external_solver.hpp"
#include "grt/sygus_format.hpp"

#include <chrono>
#include <cerrno>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace grt {

namespace {

using Clock = std::chrono::steady_clock;

// Temporary problem file, removed on scope exit.
class TempFile {
public:
  explicit TempFile(const std::string &Contents) {
    const char *Dir = std::getenv("TMPDIR");
    Path = std::string(Dir && *Dir ? Dir : "/tmp") + "/grt-XXXXXX.sl";
    int Fd = ::mkstemps(Path.data(), 3);
    if (Fd < 0)
      throw SolverCrash("cannot create temporary file: " +
                        std::string(std::strerror(errno)));
    std::size_t Off = 0;
    while (Off < Contents.size()) {
      ssize_t N = ::write(Fd, Contents.data() + Off, Contents.size() - Off);
      if (N <= 0) {
        ::close(Fd);
        throw SolverCrash("cannot write temporary file");
      }
      Off += static_cast<std::size_t>(N);
    }
    ::close(Fd);
  }
  ~TempFile() { ::unlink(Path.c_str()); }
  TempFile(const TempFile &) = delete;
  TempFile &operator=(const TempFile &) = delete;

  std::string Path;
};

std::string shellQuote(const std::string &S) {
  std::string Out = "'";
  for (char C : S) {
    if (C == '\'')
      Out += "'\\''";
    else
      Out += C;
  }
  return Out + "'";
}

std::string substitute(const std::string &Template, const std::string &Path) {
  std::string Quoted = shellQuote(Path);
  std::string Out;
  bool Substituted = false;
  for (std::size_t I = 0; I < Template.size(); ++I) {
    if (Template.compare(I, 6, "{file}") == 0) {
      Out += Quoted;
      Substituted = true;
      I += 5;
    } else if (Template.compare(I, 2, "{}") == 0) {
      Out += Quoted;
      Substituted = true;
      ++I;
    } else {
      Out += Template[I];
    }
  }
  if (!Substituted)
    Out += " " + Quoted;
  return Out;
}

struct ProcessResult {
  std::string Stdout;
  int Status = 0;
  bool TimedOut = false;
};

ProcessResult runWithDeadline(const std::string &Command, double Budget) {
  int Pipe[2];
  if (::pipe(Pipe) != 0)
    throw SolverCrash("pipe failed");
  pid_t Pid = ::fork();
  if (Pid < 0)
    throw SolverCrash("fork failed");
  if (Pid == 0) {
    ::setpgid(0, 0);
    ::dup2(Pipe[1], STDOUT_FILENO);
    ::close(Pipe[0]);
    ::close(Pipe[1]);
    ::execl("/bin/sh", "sh", "-c", Command.c_str(), static_cast<char *>(nullptr));
    ::_exit(127);
  }
  ::setpgid(Pid, Pid);
  ::close(Pipe[1]);

  ProcessResult R;
  auto Deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(Budget));
  char Buf[4096];
  for (;;) {
    auto Left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    Deadline - Clock::now())
                    .count();
    if (Left <= 0) {
      R.TimedOut = true;
      break;
    }
    pollfd Pfd{Pipe[0], POLLIN, 0};
    int Ready = ::poll(&Pfd, 1, static_cast<int>(std::min<long long>(Left, 100)));
    if (Ready < 0 && errno != EINTR)
      break;
    if (Ready > 0) {
      ssize_t N = ::read(Pipe[0], Buf, sizeof(Buf));
      if (N <= 0)
        break;
      R.Stdout.append(Buf, static_cast<std::size_t>(N));
    }
  }
  ::close(Pipe[0]);
  if (R.TimedOut)
    ::kill(-Pid, SIGKILL);
  ::waitpid(Pid, &R.Status, 0);
  return R;
}

} // namespace

SynthesisResult solveWithExternal(const SygusProblem &P,
                                  const std::string &CommandTemplate,
                                  double Budget) {
  auto Start = Clock::now();
  TempFile File(printProblem(P));
  ProcessResult Proc = runWithDeadline(substitute(CommandTemplate, File.Path),
                                       Budget);
  double Elapsed =
      std::chrono::duration<double>(Clock::now() - Start).count();
  if (Proc.TimedOut)
    return SynthesisResult::timeout(Budget);

  bool HasDefinition = Proc.Stdout.find("(define-fun") != std::string::npos;
  bool ExitedCleanly = WIFEXITED(Proc.Status) && WEXITSTATUS(Proc.Status) == 0;
  if (!HasDefinition && !ExitedCleanly)
    throw SolverCrash("solver exited with status " +
                      std::to_string(WIFEXITED(Proc.Status)
                                         ? WEXITSTATUS(Proc.Status)
                                         : 128 + WTERMSIG(Proc.Status)));
  ProgramAst Prog = ProgramAst::str("");
  try {
    Prog = parseSolution(Proc.Stdout, P.TheGrammar.inputVars());
  } catch (const ParseError &E) {
    throw UnparseableOutput(std::string("cannot parse solver output: ") +
                            E.what());
  }
  if (Prog.sort() != Sort::String || !satisfiesAll(Prog, P.Constraints))
    throw WrongAnswer("solver answer " +
                      printTerm(Prog, P.TheGrammar.inputVars()) +
                      " violates the constraints");
  return SynthesisResult::solvedWith(std::move(Prog), std::min(Elapsed, Budget));
}

SolveFn externalSolver(std::string CommandTemplate) {
  return [Cmd = std::move(CommandTemplate)](const SygusProblem &P,
                                            double Budget) {
    return solveWithExternal(P, Cmd, Budget);
  };
}

} // namespace grt

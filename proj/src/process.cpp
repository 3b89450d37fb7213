#include "suitlint/process.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>

#include "suitlint/util.hpp"

namespace suitlint {

ProcessResult run_process(const std::vector<std::string>& argv, const std::string& working_dir,
                          const std::map<std::string, std::string>& extra_env) {
    if (argv.empty()) throw Error("run_process: empty argv");

    int pipefd[2];
    if (pipe(pipefd) != 0) throw Error("pipe failed: " + std::string(strerror(errno)));

    pid_t pid = fork();
    if (pid < 0) {
        close(pipefd[0]);
        close(pipefd[1]);
        throw Error("fork failed: " + std::string(strerror(errno)));
    }

    if (pid == 0) {
        close(pipefd[0]);
        dup2(pipefd[1], STDOUT_FILENO);
        close(pipefd[1]);
        if (!working_dir.empty() && chdir(working_dir.c_str()) != 0) _exit(127);
        for (const auto& [k, v] : extra_env) setenv(k.c_str(), v.c_str(), 1);
        std::vector<char*> args;
        for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        _exit(127);
    }

    close(pipefd[1]);
    ProcessResult result;
    char buf[4096];
    ssize_t n;
    while ((n = read(pipefd[0], buf, sizeof(buf))) > 0) result.output.append(buf, n);
    close(pipefd[0]);

    int status = 0;
    while (waitpid(pid, &status, 0) < 0) {
        if (errno != EINTR) throw Error("waitpid failed: " + std::string(strerror(errno)));
    }
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace suitlint

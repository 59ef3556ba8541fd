#pragma once

// Spawns the sol3 CLI binary and captures its exit code and merged output.
// The binary path comes from the SOL3_CLI_BIN environment variable or a
// --cli=<path> argument handled by the test main.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace sol3test {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline CliResult run_command(const std::string& command) {
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    CliResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        res.output.append(buf, n);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string& cli_path_storage() {
    static std::string path;
    return path;
}

inline std::string cli_path() {
    if (!cli_path_storage().empty()) return cli_path_storage();
    const char* env = std::getenv("SOL3_CLI_BIN");
    if (env != nullptr && *env != '\0') return env;
    throw std::runtime_error("sol3 CLI path not set (SOL3_CLI_BIN or --cli=<path>)");
}

inline CliResult run_cli(const std::string& args) {
    return run_command("'" + cli_path() + "' " + args);
}

}  // namespace sol3test

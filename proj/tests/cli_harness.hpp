// cli_harness.hpp
// Drives the built CLI binary from tests. The PARRONDO_CLI environment
// variable (set by the ctest registration) points at the executable.

#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_harness {

inline const char* cli_path() { return std::getenv("PARRONDO_CLI"); }

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("parrondo_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Runs `parrondo <args>`, capturing stdout/stderr. Each call gets its own
// capture files so parallel test cases cannot collide.
inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto out_path = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const auto err_path = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;

    const std::string cmd = std::string("\"") + cli_path() + "\" " + args + " > \"" +
                            out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    const int rc = std::system(cmd.c_str());
    const int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return CliResult{exit_code, read_file(out_path), read_file(err_path)};
}

}  // namespace cli_harness

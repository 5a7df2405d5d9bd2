#ifndef ENTROEDGE_TEST_SUBPROCESS_HPP
#define ENTROEDGE_TEST_SUBPROCESS_HPP

// Helpers for tests that drive the edgecli binary.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace testsupport {

struct CommandResult {
    int exit_code;
    std::string output; // captured stdout
};

inline CommandResult run_command(const std::string& command) {
    const std::string full = command + " 2>/dev/null";
    FILE* pipe = ::popen(full.c_str(), "r");
    if (pipe == nullptr)
        return {-1, ""};
    std::string output;
    char buffer[4096];
    for (;;) {
        const std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe);
        if (n == 0)
            break;
        output.append(buffer, n);
    }
    const int raw = ::pclose(pipe);
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, output};
}

inline std::filesystem::path make_temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() /
                     (tag + "_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::vector<char> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

} // namespace testsupport

#endif

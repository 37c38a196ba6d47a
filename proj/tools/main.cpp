#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

bool use_color() {
    if (const char* env = std::getenv("BIHOM_COLOR")) {
        if (std::string(env) == "0")
            return false;
        if (std::string(env) == "1")
            return true;
    }
    return isatty(STDOUT_FILENO) != 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bihom::cli::run(args, std::cout, std::cerr, use_color());
}

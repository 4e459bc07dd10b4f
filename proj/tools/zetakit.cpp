#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "zetakit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return zetakit::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "zetakit: internal error: " << e.what() << "\n";
        return zetakit::cli::kUsageError;
    }
}

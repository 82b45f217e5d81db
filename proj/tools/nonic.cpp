#include <iostream>
#include <string>
#include <vector>

#include "nonic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return nonic::cli::run(std::move(args), std::cout, std::cerr);
    } catch (const nonic::CrossPathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include <iostream>
#include <string>
#include <vector>

#include "apwenian/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return apw::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}

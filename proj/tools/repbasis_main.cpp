#include <iostream>
#include <string>
#include <vector>

#include "repbasis/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return repbasis::cli::main(args, std::cout, std::cerr);
}

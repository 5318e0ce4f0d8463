#include <iostream>
#include <string>
#include <vector>

#include "qmt/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return qmt::cli::run(args, std::cout, std::cerr);
}

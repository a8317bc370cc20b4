#include <iostream>
#include <string>
#include <vector>

#include "partikit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return partikit::run(args, std::cout, std::cerr);
}

#include <iostream>

#include "fdgb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fdgb::run(args, std::cout, std::cerr);
}

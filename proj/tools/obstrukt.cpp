#include <iostream>
#include <string>
#include <vector>

#include "obstrukt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return obk::run_command(args, std::cout, std::cerr);
}

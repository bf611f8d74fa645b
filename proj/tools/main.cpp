#include <iostream>
#include <string>
#include <vector>

#include "p4bound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p4bound::dispatch(args, std::cout, std::cerr);
}

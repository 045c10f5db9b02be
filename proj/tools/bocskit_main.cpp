#include <iostream>
#include <vector>

#include "bocskit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return bocskit::runCli(args, std::cout, std::cerr);
}

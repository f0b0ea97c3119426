#include <iostream>
#include <string>
#include <vector>

#include "cayleyq/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return cayleyq::run_cli(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}

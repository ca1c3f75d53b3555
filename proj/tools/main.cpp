#include <iostream>
#include <string>
#include <vector>

#include "figfig/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return figfig::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <vector>

#include "hypercent/cli.hpp"

int main(int argc, char** argv) {
    return hypercent::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}

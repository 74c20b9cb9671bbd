#include <iostream>
#include <string>
#include <vector>

#include "qsign/cli.hpp"

int main(int argc, char **argv)
{
    return qsign::cli::run_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

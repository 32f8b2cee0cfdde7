#include <iostream>

#include <cdunkl/cli/commands.hpp>

int main(int argc, char **argv)
{
    return cdunkl::cli::run_cli(argc, argv, std::cout, std::cerr);
}

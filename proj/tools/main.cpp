#include "lucaslab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
	return lucaslab::cli::run(argc, argv, std::cout, std::cerr);
}

#include "bch/cli.hpp"

#include <iostream>
#include <string_view>
#include <vector>

int main(int argc, char **argv)
{
	std::ios::sync_with_stdio(false);
	std::vector<std::string_view> args(argv + 1, argv + argc);
	return bch::main_entry(args, std::cout, std::cerr);
}

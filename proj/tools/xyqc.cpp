#include "xyqc/cli.hpp"
#include "xyqc/errors.hpp"

#include <fmt/format.h>

#include <iostream>

int main(int argc, char **argv) {
    using namespace xyqc;
    cli::RunConfig config;
    try {
        config = cli::parse_args(argc, argv);
    } catch(const cli::HelpRequested &help) {
        std::cout << help.what();
        return 0;
    } catch(const UsageError &e) {
        for(const auto &problem : e.problems()) fmt::print(stderr, "usage error: {}\n", problem);
        fmt::print(stderr, "run with --help for usage\n");
        return 2;
    } catch(const IoError &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 3;
    }
    return cli::run(config, std::cout, std::cerr);
}

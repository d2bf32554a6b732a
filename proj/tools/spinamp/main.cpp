#include <iostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
    using namespace spinamp::cli;
    const std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig config;
    try {
        config = parse_config(args);
    } catch (const HelpRequested& help) {
        std::cout << help.what();
        return kSuccess;
    } catch (const UsageError& e) {
        std::cerr << "spinamp: " << e.what() << "\nRun 'spinamp --help' for usage.\n";
        return kUsageError;
    }
    return run(config, std::cout, std::cerr);
}

#include "zsum/cli.hpp"

#include <atomic>
#include <csignal>
#include <iostream>

namespace {

std::atomic<bool> interrupted{false};

extern "C" void on_interrupt(int) { interrupted = true; }

} // namespace

int main(int argc, char** argv)
{
    std::signal(SIGINT, on_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return zsum::cli::run_command(args, std::cout, std::cerr, &interrupted);
}

#include "jfilt/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv)
{
    std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 0;
    auto results = jfilt::run_acceptance(seed, std::cout);
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

// Acceptance criteria 1-10: one PASS/FAIL line per criterion.
#include "supercoho/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        auto r = supercoho::run_criterion(id);
        std::printf("criterion %2d: %s  %-48s (%.2f s)\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        if (!r.pass || verbose) std::printf("%s\n", r.details.dump(2).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

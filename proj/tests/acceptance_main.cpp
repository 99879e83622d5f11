#include <cstdio>
#include <iostream>

#include "mapdist/acceptance.hpp"

int main() {
    auto results = mapdist::acceptance::run_all(&std::cout);
    int failures = 0;
    double total = 0.0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        total += r.seconds;
        std::fprintf(stderr, "criterion %d: %.2f s\n", r.id, r.seconds);
    }
    std::fprintf(stderr, "total: %.2f s\n", total);
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}

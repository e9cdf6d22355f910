#include <cstdio>
#include <cstring>
#include <string>

#include "metallic/verify.hpp"

// Runs every acceptance check at its stated tolerance and time budget,
// one PASS/FAIL line each; exits nonzero if anything fails.
int main(int argc, char** argv) {
    metallic::VerifyOptions options;
    options.cli_path = METALLIC_CLI_PATH;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--cli") && i + 1 < argc) {
            options.cli_path = argv[++i];
        } else if (!std::strcmp(argv[i], "--kmax") && i + 1 < argc) {
            options.kmax = std::atoi(argv[++i]);
        } else if (!std::strcmp(argv[i], "--mmax") && i + 1 < argc) {
            options.mmax = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--cli PATH] [--kmax K] [--mmax M]\n", argv[0]);
            return 2;
        }
    }

    auto results = metallic::run_verification(options);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s  %-55s (%.2f s)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
        if (!r.pass) ++failed;
    }
    if (failed) {
        std::printf("%d of %zu checks FAILED\n", failed, results.size());
        return 1;
    }
    std::printf("all %zu checks passed\n", results.size());
    return 0;
}

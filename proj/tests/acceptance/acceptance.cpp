// One line per criterion: PASS/FAIL id (seconds). Exit 1 if any selected criterion fails.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "exseq_tools/verify.hpp"

using namespace exseq::tools;

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks", "exseq_acceptance"};
    int only = 0;
    std::string archive;
    bool details = false;
    app.add_option("--criterion", only, "run one criterion (1-based); default all")->check(CLI::Range(0, criterion_count()));
    app.add_option("--archive", archive, "directory for generated reports");
    app.add_flag("--details", details, "dump the verdict JSON after each line");
    CLI11_PARSE(app, argc, argv);

    VerifyOptions opt;
    opt.archive_dir = archive;
    int failed = 0;
    for (int n = 1; n <= criterion_count(); ++n) {
        if (only && n != only) continue;
        Verdict v = run_criterion(n, opt);
        const char* tag = v.status == Status::Pass ? "PASS" : v.status == Status::Fail ? "FAIL" : "SKIP";
        std::printf("[%s] %2d %-22s %8.3fs", tag, n, v.id.c_str(), v.seconds);
        if (v.limit_seconds > 0) std::printf("  (limit %.0fs)", v.limit_seconds);
        std::printf("\n");
        if (v.status != Status::Pass) {
            ++failed;
            std::cout << v.details.dump(2) << "\n";
        } else if (details) {
            std::cout << v.details.dump(2) << "\n";
        }
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}

// Acceptance harness: runs the ten release criteria and prints one
// pass/fail line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "bruhat/suites.hpp"

using namespace bruhat;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, const char* what, bool ok, uint64_t trials, uint64_t failures,
            double secs, double limit) {
    bool in_time = secs < limit;
    if (!(ok && in_time)) ++g_failures;
    std::printf("criterion %2d: %s  %-34s trials=%llu failures=%llu time=%.1fs (limit %.0fs)\n",
                idx, ok && in_time ? "PASS" : "FAIL", what,
                static_cast<unsigned long long>(trials),
                static_cast<unsigned long long>(failures), secs, limit);
    std::fflush(stdout);
}

} // namespace

int main() {
    // 1. reconstruction and unique pattern: 10^4 g per prime, >= 40 digits
    {
        auto t0 = std::chrono::steady_clock::now();
        uint64_t trials = 0, fails = 0;
        for (unsigned p : {2u, 3u, 5u}) {
            RunConfig cfg;
            cfg.p = p;
            cfg.trials = 10000;
            SuiteReport r = run_suite("reconstruction", cfg);
            trials += r.trials;
            fails += r.failures.size();
        }
        report(1, "reconstruction p in {2,3,5}", fails == 0, trials, fails,
               seconds_since(t0), 60);
    }

    // 2. n = 3 table regression: 100 pattern matrices per displayed R_w
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig cfg;
        cfg.preset = OrderingPreset::PaperN3;
        cfg.trials = 100;
        SuiteReport r = run_suite("disjointness", cfg);
        report(2, "pattern table regression", r.ok(), r.trials, r.failures.size(),
               seconds_since(t0), 60);
    }

    // 3. B+-monotonicity: 10^4 at n = 3, 10^3 at n = 4
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig c3, c4;
        c3.trials = 10000;
        c4.n = 4;
        c4.trials = 1000;
        SuiteReport a = run_suite("bplus-monotonicity", c3);
        SuiteReport b = run_suite("bplus-monotonicity", c4);
        report(3, "B+-monotonicity n in {3,4}", a.ok() && b.ok(), a.trials + b.trials,
               a.failures.size() + b.failures.size(), seconds_since(t0), 120);
    }

    // 4. N0- and U^(1)-invariance of classify_Uw: 10^4 trials of each
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig cfg;
        cfg.trials = 10000;
        SuiteReport r = run_suite("n0-invariance", cfg);
        report(4, "N0 / U^(1) invariance", r.ok(), r.trials, r.failures.size(),
               seconds_since(t0), 120);
    }

    // 5. cell inclusion + bruhat_cell cross-check: 10^3 per w, n in {3,4}
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig c3, c4;
        c3.trials = 1000;
        c4.n = 4;
        c4.trials = 1000;
        SuiteReport a = run_suite("cell-inclusion", c3);
        SuiteReport b = run_suite("cell-inclusion", c4);
        report(5, "cell inclusion n in {3,4}", a.ok() && b.ok(), a.trials + b.trials,
               a.failures.size() + b.failures.size(), seconds_since(t0), 120);
    }

    // 6. Bruhat order vs chain-closure oracle: exhaustive S3, S4, S5
    {
        auto t0 = std::chrono::steady_clock::now();
        uint64_t trials = 0, fails = 0;
        for (int n : {3, 4, 5}) {
            RunConfig cfg;
            cfg.n = n;
            SuiteReport r = run_suite("bruhat-oracle", cfg);
            trials += r.trials;
            fails += r.failures.size();
        }
        report(6, "Bruhat oracle S3/S4/S5", fails == 0, trials, fails,
               seconds_since(t0), 10);
    }

    // 7. theta averaging lemma: p in {3,5}, all w, j0 in {1,2}, 200 samples
    {
        auto t0 = std::chrono::steady_clock::now();
        uint64_t trials = 0, fails = 0;
        for (unsigned p : {3u, 5u}) {
            RunConfig cfg;
            cfg.p = p;
            cfg.trials = 200;
            SuiteReport r = run_suite("theta-lemma", cfg);
            trials += r.trials;
            fails += r.failures.size();
        }
        report(7, "theta lemma p in {3,5}", fails == 0, trials, fails,
               seconds_since(t0), 300);
    }

    // 8. counterexample: f(z) = 2 (pinned) and 10^3 vanishing samples
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig cfg;
        cfg.trials = 1000;
        SuiteReport r = run_suite("counterexample", cfg);
        bool pinned = r.extra.value("f_z", std::string()) == "2";
        report(8, "counterexample f(z)=2, G5 zero", r.ok() && pinned, r.trials,
               r.failures.size() + (pinned ? 0 : 1), seconds_since(t0), 300);
    }

    // 9. quotient averaging dichotomy: l in {1,2}, all m, 100 (r, b) each
    {
        auto t0 = std::chrono::steady_clock::now();
        uint64_t trials = 0, fails = 0;
        for (int level : {1, 2}) {
            RunConfig cfg;
            cfg.preset = OrderingPreset::PaperN3;
            cfg.level = level;
            cfg.trials = 100;
            SuiteReport r = run_suite("quotient-formula", cfg);
            trials += r.trials;
            fails += r.failures.size();
        }
        report(9, "quotient formula l in {1,2}", fails == 0, trials, fails,
               seconds_since(t0), 120);
    }

    // 10. precision honesty: precision 8 vs 64 over 10^3 trials
    {
        auto t0 = std::chrono::steady_clock::now();
        RunConfig cfg;
        cfg.trials = 1000;
        SuiteReport r = run_suite("precision-honesty", cfg);
        report(10, "precision honesty 8 vs 64", r.ok(), r.trials, r.failures.size(),
               seconds_since(t0), 300);
    }

    return g_failures;
}

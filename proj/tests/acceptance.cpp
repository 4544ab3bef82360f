// Acceptance suite: exercises every published computation at the stated
// exactness, one verdict line per criterion. Exit code 0 only if all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "envelkit/distinguish.hpp"

using namespace envelkit;

namespace {

struct Criterion {
    std::string name;
    bool pass = true;
    std::string detail;
};

bool suite_pass(const Report& rep, const std::string& suite, double item_budget,
                std::string& detail) {
    std::size_t total = 0, ok = 0;
    bool timing_ok = true;
    double worst = 0;
    for (const auto& item : rep.items) {
        if (item.suite != suite) continue;
        ++total;
        if (item.pass) ++ok;
        worst = std::max(worst, item.seconds);
        if (item_budget > 0 && item.seconds > item_budget) timing_ok = false;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu items, worst %.3fs", ok, total, worst);
    detail = buf;
    return total > 0 && ok == total && timing_ok;
}

} // namespace

int main() {
    auto wall0 = std::chrono::steady_clock::now();
    ReproOptions opts;
    opts.jobs = 2;
    Report rep = paper_repro(opts);
    double pairs_seconds = 0;
    for (const auto& item : rep.items)
        if (item.suite == "pairs") pairs_seconds = std::max(pairs_seconds, item.seconds);

    std::vector<Criterion> cs;
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        cs.push_back({name, pass, detail});
    };

    std::string d;
    bool p;

    p = suite_pass(rep, "sec5.1", 0.1, d);
    push("criterion 1: 5.1 reproduction (M3[0]: ad x4, Utilde, Ltilde; exact, <0.1s)", p, d);

    p = suite_pass(rep, "sec5.2", 0.1, d);
    push("criterion 2: 5.2 reproduction (M6[0,b] for b in {0,1,2,3,-1}; exact, <0.1s)", p, d);

    p = suite_pass(rep, "sec5.3", 0.1, d);
    push("criterion 3: 5.3 reproduction (M7[0,b] for b in {0,1,2,4}; exact)", p, d);

    p = suite_pass(rep, "lemma5.1", 0, d);
    push("criterion 4: cubic quotient comparisons for (1,4), (1,2), (2,8); exact", p, d);

    p = suite_pass(rep, "claim1", 1.0, d);
    push("criterion 5: Frobenius checks for M8, M9[1], M13[0] with listed witnesses (<1s)",
         p, d);

    p = suite_pass(rep, "groups", 0, d);
    push("criterion 6: six-group partition agreement on the full grid", p, d);

    p = suite_pass(rep, "pairs", 0, d);
    bool timing7 = pairs_seconds < 120.0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s, pairwise sweep %.1fs (<120s)", d.c_str(),
                  pairs_seconds);
    push("criterion 7: distinctness certificates for every non-isomorphic grid pair",
         p && timing7, buf);

    p = suite_pass(rep, "properties", 0, d);
    push("criterion 8: property suites (Jacobi, associativity, beta oracle, "
         "MU/Momega spans, invariance, Frobenius agreement)",
         p, d);

    p = suite_pass(rep, "corollaries", 0, d);
    push("criterion 9: semidirect criterion vs dim Utilde; Group 6 bound and recovery", p,
         d);

    bool all = true;
    for (const auto& c : cs) {
        std::printf("%s %s  [%s]\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.pass;
    }
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
                      .count();
    std::printf("%s: %zu criteria, wall time %.1fs\n", all ? "ALL PASS" : "FAILURES",
                cs.size(), wall);
    if (!all) {
        std::printf("--- full report ---\n%s", rep.text().c_str());
        return 1;
    }
    return 0;
}

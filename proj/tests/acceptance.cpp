// Acceptance suite: runs every verification grid at its pinned tolerances and
// prints one line per criterion. Exit status is nonzero if anything fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "qkgr/mirror.hpp"
#include "qkgr/suites.hpp"

using namespace qkgr;

namespace {

int failures = 0;

double criterion(int number, const std::string& title, double budget_s,
                 const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = secs < budget_s;
    if (!ok || !in_budget) ++failures;
    std::cout << (ok && in_budget ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title
              << " (" << secs << " s / budget " << budget_s << " s)";
    if (!detail.empty()) std::cout << " -- " << detail;
    if (!in_budget) std::cout << " -- over time budget";
    std::cout << "\n";
    return secs;
}

bool suite_ok(const std::string& name, std::string& detail, const SuiteOptions& opt) {
    SuiteResult r = run_suite(name, opt);
    int passed = 0;
    for (const auto& c : r.checks) {
        if (c.pass) {
            ++passed;
        } else if (detail.size() < 400) {
            detail += (detail.empty() ? "" : "; ") + c.key + ": " + c.detail;
        }
    }
    detail = std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks" +
             (detail.empty() ? "" : " | " + detail);
    return r.pass;
}

}  // namespace

int main() {
    SuiteOptions opt;
    opt.jobs = 2;
    double total = 0;

    total += criterion(1, "pairing suite (units, Schur Gram, 50 random limits)", 30,
                       [&](std::string& d) { return suite_ok("pairing", d, opt); });

    total += criterion(2, "gamma-operator reconstruction at D=3", 30,
                       [&](std::string& d) { return suite_ok("gamma", d, opt); });

    total += criterion(3, "residue recursion for JT and IT, m0 in {1,2}", 120,
                       [&](std::string& d) { return suite_ok("recursion", d, opt); });

    total += criterion(4, "non-abelian localization with Q_i=Q, L0=1 specialization", 120,
                       [&](std::string& d) { return suite_ok("nonabelian", d, opt); });

    total += criterion(5, "operator identities (restoration, Eulerian twist, telescoping)", 30,
                       [&](std::string& d) { return suite_ok("operators", d, opt); });

    total += criterion(6, "dual-grassmannian level correspondence at every fixed point", 120,
                       [&](std::string& d) { return suite_ok("dongwen", d, opt); });

    total += criterion(7, "q-degree gaps and q=0 pole cancellation", 60, [&](std::string& d) {
        bool ok = suite_ok("poles", d, opt);
        // pinned instance: level -1 on Gr(2,4) at D = 2
        auto pinned = verify_small_pole_structure(SeriesKind(SeriesTag::IT_level, -1),
                                                  GrassmannianCtx(2, 4), 2, opt.seed);
        for (const auto& c : pinned) ok = ok && c.pass;
        return ok;
    });

    total += criterion(8, "finite-difference systems, both variants", 60,
                       [&](std::string& d) { return suite_ok("diffeq", d, opt); });

    total += criterion(9, "Jackson integral identities at 50 digits", 60,
                       [&](std::string& d) { return suite_ok("jackson", d, opt); });

    total += criterion(10, "superpotential critical points and gradients", 30,
                       [&](std::string& d) { return suite_ok("mirror", d, opt); });

    total += criterion(11, "determinism of verify --suite all", 600 - total, [&](std::string& d) {
        auto r1 = run_suites("all", opt);
        auto r2 = run_suites("all", opt);
        std::string a = report_to_json("verify --suite all", opt, r1);
        std::string b = report_to_json("verify --suite all", opt, r2);
        d = a == b ? "reports byte-identical" : "reports differ";
        return a == b && all_pass(r1);
    });

    std::cout << "total wall time " << total << " s (budget 600 s)\n";
    if (total >= 600) ++failures;
    return failures == 0 ? 0 : 1;
}

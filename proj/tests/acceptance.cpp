// Acceptance suite: runs every top-level criterion at exact tolerance and
// prints one pass/fail line per criterion (details indented under each).
// Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "expected_tables.hpp"
#include "imprim/certificate.hpp"
#include "imprim/construction.hpp"
#include "imprim/singer.hpp"
#include "imprim/useful_pairs.hpp"

using namespace imprim;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& detail) {
        if (!ok) {
            pass = false;
            details.push_back(detail);
        }
    }
    void note(const std::string& detail) { details.push_back(detail); }
};

int run_cli(const std::string& args) {
    std::string cmd = std::string(IMPRIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::vector<DesignCertificate> g_certificates;  // filled by criterion 4, reused by 6

Outcome criterion1_table() {
    Outcome out;
    auto rows = search(20, 1300);
    out.require(rows.size() == expected::kUsefulPairs.size(),
                "search(20, 1300) returned " + std::to_string(rows.size()) + " rows, expected " +
                    std::to_string(expected::kUsefulPairs.size()));
    for (std::size_t i = 0; i < rows.size() && i < expected::kUsefulPairs.size(); ++i) {
        const auto& got = rows[i];
        const auto& want = expected::kUsefulPairs[i];
        out.require(got.n == want.n && got.c.value == want.c && got.k == want.k && got.d == want.d,
                    "row " + std::to_string(i) + " mismatch");
        out.require(got.n != 6 && got.n != 10 && got.n != 15,
                    "row with impossible n = " + std::to_string(got.n));
    }
    const std::uint64_t caps[4] = {3000, 3000, 30000, 3000};
    for (std::size_t i = 0; i < expected::kSmallestLarge.size(); ++i) {
        const auto& want = expected::kSmallestLarge[i];
        auto got = smallest_c(want.n, caps[i]);
        out.require(got.has_value() && got->c.value == want.c && got->k == want.k &&
                        got->d == want.d,
                    "smallest_c(" + std::to_string(want.n) + ") mismatch");
    }
    // CLI CSV byte-exact reproduction
    std::string path = "acceptance_pairs.csv";
    int rc = run_cli("useful-pairs --n-max 20 --c-max 1300 --format csv --out " + path);
    out.require(rc == 0, "CLI useful-pairs exit code " + std::to_string(rc));
    std::ifstream in(path);
    std::stringstream got_csv;
    got_csv << in.rdbuf();
    std::string want_csv = "n,c,k,d\n";
    for (const auto& r : expected::kUsefulPairs)
        want_csv += std::to_string(r.n) + "," + std::to_string(r.c) + "," + std::to_string(r.k) +
                    "," + std::to_string(r.d) + "\n";
    out.require(got_csv.str() == want_csv, "CLI CSV differs from the expected table");
    std::remove(path.c_str());
    out.note("34 search rows + 4 smallest-c rows = all 38 published table rows verified");
    return out;
}

Outcome criterion2_near_misses() {
    Outcome out;
    for (const auto& want : expected::kNearMisses) {
        auto got = near_misses(want.n, 1000000);
        out.require(got.size() == 1, "n = " + std::to_string(want.n) + ": expected 1 near-miss");
        if (got.size() == 1)
            out.require(got[0].c.value == want.c && got[0].k == want.k && got[0].d == want.d,
                        "near-miss values mismatch for n = " + std::to_string(want.n));
        out.require(!smallest_c(want.n, 1000000).has_value(),
                    "useful pair found for n = " + std::to_string(want.n) + " below 10^6");
        out.require(check_factor_identities(want.n, 1000).all_passed(),
                    "factor identities fail for n = " + std::to_string(want.n));
    }
    return out;
}

Outcome criterion3_closed_forms() {
    Outcome out;
    auto up = certify(2, 13);
    if (!up) {
        out.require(false, "[2,13] not certified useful");
        return out;
    }
    DesignCertificate cert = imprim::certify(*up);
    out.require(cert.design_checks.all_passed(), "design checks failed");
    // The criterion pins lambda = 197730 and three-route agreement.
    out.require(cert.lambda == 197730,
                "design lambda = " + cert.lambda.str() + ", criterion expects 197730 "
                "(ratio " + BigCount(cert.lambda / 197730).str() + " = n!)");
    out.require(cert.closed_forms.g_b == cert.g_b,
                "|G_B| closed form = " + cert.closed_forms.g_b.str() +
                    ", transporter count = " + cert.g_b.str());
    out.require(cert.closed_forms.b == cert.b,
                "b closed form = " + cert.closed_forms.b.str() + ", |G|/|G_B| = " + cert.b.str());
    // block-count identity route (holds for the exact counts)
    BigCount b_identity = exact_div(BigCount(13) * 7 * 12 * cert.lambda, 4, "b route 2");
    out.require(b_identity == cert.b, "block-count identity route disagrees");
    if (!out.pass) {
        out.note("closed-form lambda = " + cert.closed_forms.lambda.str() +
                 "; exact lambda from |G|/|G_B| and direct block count = " + cert.lambda.str());
        out.note("the transporter count and the brute-force block-orbit oracle "
                 "(test_construction) agree; the published closed form overcounts |G_B| by n! "
                 "because the n pair-classes meet pairwise distinct H-orbits");
    }
    return out;
}

Outcome criterion4_certifications() {
    Outcome out;
    g_certificates.clear();
    auto rows = search(20, 1300);
    out.require(rows.size() == 34, "expected 34 pairs to certify");
    for (const auto& pair : rows) {
        try {
            DesignCertificate cert = imprim::certify(pair);
            out.require(cert.design_checks.all_passed(),
                        "checks failed for [" + std::to_string(pair.n) + "," +
                            std::to_string(pair.c.value) + "]");
            out.require(cert.h_rank == pair.n + 1 && cert.h_pair_rank == pair.n,
                        "rank mismatch for [" + std::to_string(pair.n) + "," +
                            std::to_string(pair.c.value) + "]");
            out.require(cert.dd.m == 1 && cert.dd.n == pair.n,
                        "DD mismatch for [" + std::to_string(pair.n) + "," +
                            std::to_string(pair.c.value) + "]");
            g_certificates.push_back(std::move(cert));
        } catch (const std::exception& e) {
            out.require(false, "certification aborted for [" + std::to_string(pair.n) + "," +
                                   std::to_string(pair.c.value) + "]: " + e.what());
        }
    }
    out.note(std::to_string(g_certificates.size()) +
             " certifications (ratio criterion, n_i = 1, self-paired orbitals, BFS ranks, DD)");
    return out;
}

Outcome criterion5_singer() {
    Outcome out;
    SingerPlane p4 = build_plane(4);
    out.require(verify_plane(p4).all_passed(), "PG(2,4) pair coverage failed");
    out.require(p4.v == 21, "PG(2,4) point count");
    SingerDD a = singer_dd(p4, 3, 7);
    out.require(a.report.all_passed(), "PG(2,4) (c,d)=(3,7) checks failed");
    out.require(a.dd.m == 3 && a.dd.n == 1, "(3,7) DD parameters");
    SingerDD b = singer_dd(p4, 7, 3);
    out.require(b.report.all_passed(), "PG(2,4) (c,d)=(7,3) checks failed");
    out.require(b.dd.m == 1 && b.dd.n == 3, "(7,3) DD parameters");
    SingerPlane p9 = build_plane(9);
    out.require(verify_plane(p9).all_passed(), "PG(2,9) pair coverage failed");
    out.require(p9.v == 91 && p9.lines[0].size() == 10, "PG(2,9) parameters");
    SingerDD c = singer_dd(p9, 7, 13);
    out.require(c.report.all_passed(), "PG(2,9) (c,d)=(7,13) checks failed");
    out.require(c.dd.m == 6 && c.dd.n == 3, "(7,13) DD parameters");
    for (const SingerDD* r : {&a, &b, &c}) {
        out.require(r->h_rank == 2 * r->dd.n + 1 && r->k_rank == 2 * r->dd.m + 1,
                    "rank equalities 2n+1 / 2m+1 failed");
    }
    out.note("max-rank conditions (odd order, constant subdegree (c-1)/2n) included in reports");
    return out;
}

Outcome criterion6_bounds() {
    Outcome out;
    out.require(!g_certificates.empty(), "criterion 4 must run first");
    for (const DesignCertificate& cert : g_certificates) {
        out.require(cert.h_rank - 1 <= 2 * cert.h_pair_rank && cert.h_pair_rank <= cert.pair.n,
                    "H bounds fail for [" + std::to_string(cert.pair.n) + "," +
                        std::to_string(cert.pair.c.value) + "]");
        out.require(cert.h_pair_rank == cert.pair.n, "PairRank(H) = n equality fails");
        out.require(cert.k_rank - 1 <= 2 * cert.k_pair_rank && cert.k_pair_rank <= 1,
                    "K bounds fail");
    }
    SingerPlane p4 = build_plane(4);
    for (auto [cc, dd] : {std::pair<std::uint64_t, std::uint64_t>{3, 7}, {7, 3}}) {
        SingerDD r = singer_dd(p4, cc, dd);
        out.require(r.h_pair_rank == r.dd.n && r.k_pair_rank == r.dd.m,
                    "Singer pair-rank equalities fail");
        out.require(r.h_rank == 2 * r.h_pair_rank + 1 && r.k_rank == 2 * r.k_pair_rank + 1,
                    "Singer rank equalities fail");
    }
    return out;
}

Outcome criterion7_negative_controls() {
    Outcome out;
    // corrupted base block fails verification
    auto up = certify(2, 13);
    WreathDesign des = build_design(*up);
    des.block[1] = {3, 0};
    bool threw = false;
    try {
        certify_design(des);
    } catch (const VerificationError&) {
        threw = true;
    }
    out.require(threw, "corrupted base block was not rejected");

    out.require(run_cli("construct --n 2 --c 13 --out acceptance_ok.json") == 0,
                "construct [2,13] should exit 0");
    out.require(run_cli("construct --n 6 --c 49") == 3, "near-miss (6,49) should exit 3");
    out.require(run_cli("construct --n 2 --c 21") == 3, "non-prime-power c should exit 3");
    out.require(run_cli("construct --n 1 --c 13") == 2, "n = 1 should be a usage error");
    out.require(run_cli("useful-pairs --n-max 1 --c-max 13") == 2,
                "n-max = 1 should be a usage error");
    out.require(run_cli("singer --q 2 --c 7 --d 1") == 3, "prime v should exit 3");
    out.require(run_cli("verify --cert acceptance_ok.json") == 0,
                "verify on untampered certificate should exit 0");
    // tamper and re-verify
    {
        std::ifstream in("acceptance_ok.json");
        nlohmann::json doc = nlohmann::json::parse(in);
        doc["counts"]["lambda"] = "1";
        std::ofstream outf("acceptance_tampered.json");
        outf << doc.dump(2);
    }
    out.require(run_cli("verify --cert acceptance_tampered.json") == 4,
                "tampered certificate should exit 4");
    out.require(run_cli("verify --cert acceptance_nonexistent.json") == 3,
                "missing certificate file should exit 3");
    {
        std::string cmd = std::string("IMPRIM_WORKERS=1 ") + IMPRIM_CLI_PATH +
                          " construct --n 2 --c 13 >/dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        out.require(WIFEXITED(rc) && WEXITSTATUS(rc) == 0,
                    "worker override should not change the exit code");
    }
    std::remove("acceptance_ok.json");
    std::remove("acceptance_ok.json.txt");
    std::remove("acceptance_tampered.json");
    return out;
}

Outcome criterion8_out_of_scope() {
    Outcome out;
    out.note("the exhaustive classification of 2-(729,8,1) designs is an external result, "
             "not recomputed here; criteria 4-6 stand in as the property suites");
    return out;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Entry {
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> criteria = {
        {"criterion 1 (useful-pair table, exact)", criterion1_table},
        {"criterion 2 (near-misses and factor identities, exact)", criterion2_near_misses},
        {"criterion 3 (closed-form lambda/b/|G_B| agreement, exact)", criterion3_closed_forms},
        {"criterion 4 (certification of all 34 pairs with c <= 1300)", criterion4_certifications},
        {"criterion 5 (Singer planes, brute force)", criterion5_singer},
        {"criterion 6 (rank bound property suite)", criterion6_bounds},
        {"criterion 7 (negative controls and exit codes)", criterion7_negative_controls},
        {"criterion 8 (external classification: out of scope)", criterion8_out_of_scope},
    };
    int failures = 0;
    for (const auto& entry : criteria) {
        auto t0 = Clock::now();
        Outcome out = entry.fn();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s: %s [%.2f s]\n", entry.name, out.pass ? "PASS" : "FAIL", secs);
        for (const std::string& d : out.details) std::printf("    %s\n", d.c_str());
        if (!out.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}

// Command-line interface: useful-pair search/tabulation, design construction
// with certificate output, Singer-plane analysis, and offline certificate
// verification.
//
// Exit codes: 0 success, 2 usage error, 3 domain rejection (inputs outside
// the mathematical domain), 4 verification failure.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imprim/certificate.hpp"
#include "imprim/construction.hpp"
#include "imprim/singer.hpp"
#include "imprim/useful_pairs.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_useful_pairs(std::uint64_t n_max, std::uint64_t c_max, bool with_near_misses,
                     const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    auto rows = imprim::search(n_max, c_max);
    std::vector<imprim::NearMiss> misses;
    if (with_near_misses)
        for (std::uint64_t n : {6ull, 10ull, 15ull})
            if (n <= n_max)
                for (const auto& nm : imprim::near_misses(n, c_max)) misses.push_back(nm);

    if (format == "csv") {
        out << imprim::to_csv(rows);
        if (with_near_misses) {
            out << "near_misses\nn,c,k,d\n";
            for (const auto& nm : misses)
                out << nm.n << "," << nm.c.value << "," << nm.k << "," << nm.d << "\n";
        }
    } else if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& r : rows)
            doc.push_back({{"n", r.n}, {"c", r.c.value}, {"k", r.k},
                           {"d", r.d}, {"p", r.c.p}, {"a", r.c.a}});
        for (const auto& nm : misses)
            doc.push_back({{"n", nm.n}, {"c", nm.c.value}, {"k", nm.k}, {"d", nm.d},
                           {"p", nm.c.p}, {"a", nm.c.a}, {"near_miss", true}});
        out << doc.dump(2) << "\n";
    } else {
        out << "useful pairs with 2 <= n <= " << n_max << ", c <= " << c_max << " ("
            << rows.size() << " rows)\n";
        out << "   n      c    k    d\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r.n << std::setw(7) << r.c.value << std::setw(5) << r.k
                << std::setw(5) << r.d << "\n";
        }
        if (with_near_misses) {
            out << "near misses (k < 2n):\n";
            for (const auto& nm : misses)
                out << "  [" << nm.n << ", " << nm.c.value << ", " << nm.k << ", " << nm.d
                    << "]\n";
        }
    }
    return 0;
}

int cmd_construct(std::uint64_t n, std::uint64_t c, const std::string& out_path) {
    imprim::PairClassification cls;
    try {
        cls = imprim::classify_pair(n, c);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitDomain;
    }
    if (auto* nm = std::get_if<imprim::NearMiss>(&cls)) {
        std::cerr << "rejected: near-miss: k=" << nm->k << " < 2n=" << 2 * n << "\n";
        return kExitDomain;
    }
    auto* up = std::get_if<imprim::UsefulPair>(&cls);
    if (!up) {
        std::string reason = "[" + std::to_string(n) + ", " + std::to_string(c) +
                             "] is not a useful pair";
        if (!imprim::is_prime_power(c)) reason += " (c is not a prime power)";
        else if (c % (2 * n) != 1) reason += " (c != 1 mod 2n)";
        else reason += " (c + n is not binom(k,2))";
        std::cerr << "rejected: " << reason << "\n";
        return kExitDomain;
    }
    try {
        imprim::DesignCertificate cert = imprim::certify(*up);
        std::cout << imprim::certificate_summary(cert);
        if (!out_path.empty()) {
            imprim::write_certificate(cert, out_path);
            std::ofstream txt(out_path + ".txt");
            txt << imprim::certificate_summary(cert);
            std::cout << "certificate written to " << out_path << " (summary: " << out_path
                      << ".txt)\n";
        }
        return 0;
    } catch (const imprim::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        for (const std::string& f : e.report.failures()) std::cerr << "  " << f << "\n";
        return kExitVerification;
    }
}

int cmd_singer(std::uint64_t q, std::uint64_t c, std::uint64_t d, const std::string& out_path) {
    imprim::SingerPlane plane;
    try {
        plane = imprim::build_plane(q);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitDomain;
    }
    imprim::Report plane_rep = imprim::verify_plane(plane);
    if (!plane_rep.all_passed()) {
        std::cerr << "plane verification failure\n";
        for (const std::string& f : plane_rep.failures()) std::cerr << "  " << f << "\n";
        return kExitVerification;
    }
    std::cout << "PG(2," << q << "): 2-(" << plane.v << "," << q + 1
              << ",1) design verified by exhaustive pair coverage\n";
    imprim::SingerDD result;
    try {
        result = imprim::singer_dd(plane, c, d);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitDomain;
    }
    std::cout << "partition: " << d << " classes of size " << c << "\n";
    std::cout << "(m,n)=(" << result.dd.m << "," << result.dd.n << "); Rank(H)=" << result.h_rank
              << "=2n+1; Rank(K)=" << result.k_rank << "=2m+1\n";
    std::cout << "PairRank(H)=" << result.h_pair_rank << "; PairRank(K)=" << result.k_pair_rank
              << "\n";
    if (!result.report.all_passed()) {
        std::cerr << "verification failure\n";
        for (const std::string& f : result.report.failures()) std::cerr << "  " << f << "\n";
        return kExitVerification;
    }
    std::size_t n_checks = result.report.checks.size();
    std::cout << "checks: " << n_checks << "/" << n_checks << " passed\n";
    if (!out_path.empty()) {
        nlohmann::json doc;
        doc["q"] = q;
        doc["v"] = plane.v;
        doc["lines"] = plane.lines;
        std::vector<std::uint32_t> classes(plane.v);
        for (std::uint64_t i = 0; i < plane.v; ++i)
            classes[i] = static_cast<std::uint32_t>(i % d);
        doc["partition"] = {{"c", c}, {"d", d}, {"class_of", classes}};
        doc["dd"] = {{"m", result.dd.m}, {"n", result.dd.n}};
        doc["ranks"] = {{"h_rank", result.h_rank},
                        {"h_pair_rank", result.h_pair_rank},
                        {"k_rank", result.k_rank},
                        {"k_pair_rank", result.k_pair_rank}};
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        file << doc.dump(2) << "\n";
        std::cout << "plane data written to " << out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& cert_path) {
    std::ifstream in(cert_path);
    if (!in) {
        std::cerr << "rejected: cannot open certificate " << cert_path << "\n";
        return kExitDomain;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "verification failure: malformed certificate: " << e.what() << "\n";
        return kExitVerification;
    }
    try {
        imprim::CertificateVerification result = imprim::verify_certificate(doc);
        for (const imprim::Check& c : result.comparisons.checks)
            std::cout << (c.passed() ? "ok   " : "FAIL ") << c.id
                      << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
        if (!result.ok) {
            std::cerr << "certificate does not match recomputation\n";
            return kExitVerification;
        }
        std::cout << "certificate verified\n";
        return 0;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "verification failure: malformed certificate: " << e.what() << "\n";
        return kExitVerification;
    } catch (const imprim::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-transitive point-imprimitive 2-design search and verification"};
    app.require_subcommand(1);

    auto* up_cmd = app.add_subcommand("useful-pairs", "search for useful pairs [n, c]");
    std::uint64_t n_max = 0, c_max = 0;
    bool with_near = false;
    std::string format = "text", out_path;
    up_cmd->add_option("--n-max", n_max, "largest n to search")->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000}));
    up_cmd->add_option("--c-max", c_max, "largest c to search")->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));
    up_cmd->add_flag("--near-misses", with_near, "also list near-misses (k < 2n)");
    up_cmd->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    up_cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* con_cmd = app.add_subcommand("construct", "build and certify the design for [n, c]");
    std::uint64_t n = 0, c = 0;
    std::string cert_out;
    con_cmd->add_option("--n", n, "inner-pair parameter n")->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000}));
    con_cmd->add_option("--c", c, "class size c (prime power)")->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{100000000}));
    con_cmd->add_option("--out", cert_out, "certificate output path");

    auto* sg_cmd = app.add_subcommand("singer", "Singer-cycle analysis of PG(2, q)");
    std::uint64_t q = 0, sc = 0, sd = 0;
    std::string singer_out;
    sg_cmd->add_option("--q", q, "plane order (prime power)")->required();
    sg_cmd->add_option("--c", sc, "class size")->required();
    sg_cmd->add_option("--d", sd, "number of classes")->required();
    sg_cmd->add_option("--out", singer_out, "write lines and partition to a JSON file");

    auto* vf_cmd = app.add_subcommand("verify", "re-verify a design certificate");
    std::string cert_path;
    vf_cmd->add_option("--cert", cert_path, "certificate path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (up_cmd->parsed()) return cmd_useful_pairs(n_max, c_max, with_near, format, out_path);
        if (con_cmd->parsed()) return cmd_construct(n, c, cert_out);
        if (sg_cmd->parsed()) return cmd_singer(q, sc, sd, singer_out);
        if (vf_cmd->parsed()) return cmd_verify(cert_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

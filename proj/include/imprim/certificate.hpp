#pragma once

// Self-describing JSON certificates for constructed designs, and offline
// re-verification: a certificate records enough (pair, field, generators,
// base block, counts, check outcomes) that anyone can rebuild the design
// deterministically and compare every recorded value against a fresh run.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "imprim/construction.hpp"

namespace imprim {

using json = nlohmann::json;

inline std::string block_token(const Field& field, std::uint64_t elem) {
    return elem == 0 ? "0" : "z^" + std::to_string(field.dlog(elem));
}

inline json checks_to_json(const Report& rep) {
    json arr = json::array();
    for (const Check& c : rep.checks)
        arr.push_back({{"id", c.id},
                       {"status", to_string(c.status)},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"note", c.note}});
    return arr;
}

inline json certificate_to_json(const DesignCertificate& cert) {
    Field field(cert.p, cert.a);
    json block = json::array();
    for (const WreathPoint& pt : cert.block)
        block.push_back({block_token(field, pt.elem), pt.cls});
    json gens = json::array();
    for (const auto& im : cert.h_generator_images) gens.push_back(im);
    return json{
        {"format", "imprim-design-certificate"},
        {"version", 1},
        {"pair", {{"n", cert.pair.n},
                  {"c", cert.pair.c.value},
                  {"k", cert.pair.k},
                  {"d", cert.pair.d},
                  {"p", cert.pair.c.p},
                  {"a", cert.pair.c.a}}},
        {"field", {{"p", cert.p},
                   {"a", cert.a},
                   {"reduction_poly", cert.reduction_poly},
                   {"zeta", cert.zeta},
                   {"zeta_token", block_token(field, cert.zeta)}}},
        {"h_generators", gens},
        {"base_block", block},
        {"dd", {{"m", cert.dd.m},
                {"n", cert.dd.n},
                {"inner_pairs", cert.dd.inner_count},
                {"outer_pairs", cert.dd.outer_count}}},
        {"ranks", {{"h_rank", cert.h_rank},
                   {"h_pair_rank", cert.h_pair_rank},
                   {"k_rank", cert.k_rank},
                   {"k_pair_rank", cert.k_pair_rank},
                   {"k_rank_bfs_checked", cert.k_rank_bfs_checked}}},
        {"counts", {{"v", cert.pair.c.value * cert.pair.d},
                    {"k", cert.pair.k},
                    {"lambda", cert.lambda.str()},
                    {"b", cert.b.str()},
                    {"r", cert.r.str()},
                    {"g_order", cert.g_order.str()},
                    {"g_b", cert.g_b.str()}}},
        {"closed_forms", {{"lambda", cert.closed_forms.lambda.str()},
                          {"b", cert.closed_forms.b.str()},
                          {"g_b", cert.closed_forms.g_b.str()},
                          {"agree", cert.closed_forms_agree},
                          {"ratio_to_exact", cert.closed_form_ratio.str()}}},
        {"checks", checks_to_json(cert.design_checks)},
        {"cross_references", checks_to_json(cert.cross_references)},
    };
}

// Plain-text companion: the construction's statement with computed numbers.
inline std::string certificate_summary(const DesignCertificate& cert) {
    const std::uint64_t c = cert.pair.c.value, d = cert.pair.d;
    std::ostringstream os;
    os << "2-(" << c * d << "," << cert.pair.k << "," << cert.lambda.str() << ") design with DD (m,n) = (1," << cert.dd.n << ")\n";
    os << "  points: " << d << " classes of size " << c << "; block size k = " << cert.pair.k << "\n";
    os << "  group H wr Sym(" << d << "), |H| = " << c * (c - 1) / cert.pair.n
       << ", |G| = " << cert.g_order.str() << "\n";
    os << "  blocks b = " << cert.b.str() << ", replication r = " << cert.r.str()
       << ", |G_B| = " << cert.g_b.str() << "\n";
    os << "  Rank(H) = " << cert.h_rank << " = PairRank(H) + 1 = n + 1;  Rank(K) = "
       << cert.k_rank << " = PairRank(K) + 1 = 2\n";
    if (!cert.closed_forms_agree) {
        os << "  note: closed-form counts (lambda = " << cert.closed_forms.lambda.str()
           << ", |G_B| = " << cert.closed_forms.g_b.str()
           << ") differ from the exact counts by the factor "
           << cert.closed_form_ratio.str()
           << " = n! (the pair-classes meet distinct H-orbits, so no stabilizer element permutes them)\n";
    }
    std::size_t passed = 0;
    for (const Check& ch : cert.design_checks.checks)
        if (ch.passed()) ++passed;
    os << "  checks: " << passed << "/" << cert.design_checks.checks.size() << " passed\n";
    return os.str();
}

inline void write_certificate(const DesignCertificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_certificate: cannot open " + path);
    out << certificate_to_json(cert).dump(2) << "\n";
}

struct CertificateVerification {
    Report comparisons;
    bool ok = false;
};

// Rebuilds the design from the recorded pair and compares every recorded
// value against the recomputation. Any mismatch means the certificate does
// not describe the deterministic construction for its own parameters.
inline CertificateVerification verify_certificate(const json& doc,
                                                  const CertifyOptions& opt = {}) {
    CertificateVerification out;
    Report& rep = out.comparisons;
    if (doc.value("format", "") != std::string("imprim-design-certificate")) {
        rep.check_true("format", false, "unrecognized certificate format");
        return out;
    }
    const std::uint64_t n = doc.at("pair").at("n").get<std::uint64_t>();
    const std::uint64_t c = doc.at("pair").at("c").get<std::uint64_t>();
    auto maybe = certify(n, c);
    if (!rep.check_true("pair-useful", maybe.has_value(), "recorded pair must be useful"))
        return out;
    DesignCertificate fresh = imprim::certify(*maybe, opt);
    json expect = certificate_to_json(fresh);

    auto cmp = [&](const char* id, const json& a, const json& b) {
        rep.check_true(id, a == b, a.dump() == b.dump() ? "" : "recorded " + b.dump().substr(0, 80));
    };
    cmp("pair", expect.at("pair"), doc.at("pair"));
    cmp("field", expect.at("field"), doc.at("field"));
    cmp("h-generators", expect.at("h_generators"), doc.at("h_generators"));
    cmp("base-block", expect.at("base_block"), doc.at("base_block"));
    cmp("dd", expect.at("dd"), doc.at("dd"));
    cmp("ranks", expect.at("ranks"), doc.at("ranks"));
    cmp("counts", expect.at("counts"), doc.at("counts"));
    cmp("closed-forms", expect.at("closed_forms"), doc.at("closed_forms"));
    cmp("checks", expect.at("checks"), doc.at("checks"));
    cmp("cross-references", expect.at("cross_references"), doc.at("cross_references"));
    out.ok = rep.all_passed();
    return out;
}

inline CertificateVerification verify_certificate_file(const std::string& path,
                                                       const CertifyOptions& opt = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("verify_certificate_file: cannot open " + path);
    json doc = json::parse(in);
    return verify_certificate(doc, opt);
}

}  // namespace imprim

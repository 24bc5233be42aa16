// Minimal library walkthrough: classify a few pairs, then build and certify
// the design for the smallest useful pair and print its summary.

#include <iostream>

#include "imprim/certificate.hpp"
#include "imprim/construction.hpp"
#include "imprim/useful_pairs.hpp"

int main() {
    using namespace imprim;

    for (std::uint64_t c : {13, 21, 49}) {
        auto cls = classify_pair(2, c);
        if (std::holds_alternative<UsefulPair>(cls))
            std::cout << "[2," << c << "] is a useful pair\n";
        else if (std::holds_alternative<NearMiss>(cls))
            std::cout << "[2," << c << "] is a near-miss\n";
        else
            std::cout << "[2," << c << "] is neither\n";
    }

    auto pair = certify(2, 13);
    if (!pair) return 1;
    DesignCertificate cert = certify(*pair);
    std::cout << "\n" << certificate_summary(cert);

    // every count in the certificate is exact; the big ones print as decimals
    std::cout << "\n|G| = " << cert.g_order.str() << "\n";
    return 0;
}

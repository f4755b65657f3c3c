#ifndef FORTS_CERTIFY_HPP
#define FORTS_CERTIFY_HPP

#include <string>
#include <vector>

#include "forts/json_io.hpp"

namespace forts {

inline constexpr const char* kCertificateVersion = "forttool-cert-1";

Json make_certificate(const std::string& command, Json inputs, Json claim, Json witness);

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> mismatches;

    void fail(std::string what) {
        ok = false;
        mismatches.push_back(std::move(what));
    }
};

// Re-checks a certificate from its witness using only exact arithmetic and
// the definitions: closures are replayed, products and vertex sums are
// recomputed, hitting and compatibility are tested pairwise.  The search
// that produced the certificate is never rerun, so enumeration completeness
// and optimality of tau-style claims are accepted as claims; everything a
// witness can substantiate is rechecked.  Throws InputError on schema
// violations.
VerifyOutcome verify_certificate(const Json& cert);

}  // namespace forts

#endif

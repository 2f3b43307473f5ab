#ifndef POLARITY_LAB_CERTIFICATE_HPP
#define POLARITY_LAB_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "polarity_lab/support.hpp"

namespace plab {

/// Outcome of a structural check: plane axioms, polarity axioms, C4-freeness,
/// the common-neighbor identity, automorphism scans.  `mode` records whether
/// the check was exhaustive or seeded-sampled; `witness` holds the first
/// counterexample when the check fails.
struct CheckCertificate {
    std::string name;
    std::string target;  // provenance descriptor of the checked object
    bool pass = false;
    std::string mode = "exhaustive";
    std::string witness;
    std::vector<std::pair<std::string, std::string>> details;

    void detail(const std::string& k, const std::string& v) { details.emplace_back(k, v); }
    void detail(const std::string& k, uint64_t v) { details.emplace_back(k, std::to_string(v)); }

    std::string to_text() const {
        Record r("check");
        r.add("check", name);
        r.add("target", target);
        r.add("target_hash", hex64(fnv1a64(target)));
        r.add("pass", pass);
        r.add("mode", mode);
        for (const auto& [k, v] : details) r.add(k, v);
        if (!witness.empty()) r.add("witness", witness);
        return r.to_text();
    }
};

inline CheckCertificate make_check(std::string name, std::string target) {
    CheckCertificate c;
    c.name = std::move(name);
    c.target = std::move(target);
    c.pass = true;
    return c;
}

}  // namespace plab

#endif  // POLARITY_LAB_CERTIFICATE_HPP

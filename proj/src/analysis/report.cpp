#include "ohlab/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace ohlab {

bool AuditReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

const AuditCheck& AuditReport::get(const std::string& name) const {
    for (const AuditCheck& c : checks) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("no audit check named '" + name + "'");
}

bool AuditReport::contains(const std::string& name) const {
    return std::any_of(checks.begin(), checks.end(),
                       [&](const AuditCheck& c) { return c.name == name; });
}

std::vector<std::string> AuditReport::failures() const {
    std::vector<std::string> out;
    for (const AuditCheck& c : checks) {
        if (!c.pass) out.push_back(c.name);
    }
    return out;
}

void ensure_witness(AuditCheck& check, const Witness& fallback) {
    if (!check.pass && !check.witness) check.witness = fallback;
}

}  // namespace ohlab

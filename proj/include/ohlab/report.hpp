#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ohlab {

/// Space-time location (and Kruzhkov constant, when one applies) of the worst value.
struct Witness {
    double t = 0.0;
    double x = 0.0;
    double c = 0.0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct AuditCheck {
    std::string name;
    double value = 0.0;      // measured quantity
    double bound = 0.0;      // what value is compared against
    double tolerance = 0.0;  // slack added to the bound (absolute unless noted in detail)
    bool pass = false;
    std::optional<Witness> witness;
    int cells = 0;
    double dx = 0.0;
    double dt_out = 0.0;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    void add(AuditCheck check) { checks.push_back(std::move(check)); }
    bool all_pass() const;
    /// Throws std::out_of_range if no check has that name.
    const AuditCheck& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    /// Returns the names of failing checks.
    std::vector<std::string> failures() const;
};

/// Marks a failed check with a witness if none was set, so every failure is located.
void ensure_witness(AuditCheck& check, const Witness& fallback);

}  // namespace ohlab

#pragma once

#include <string>
#include <vector>

namespace hqm {

struct IdentityCheck {
    std::string name;
    bool pass = false;

    friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

/// Runs the built-in property suites (series identities, oracle vs closed
/// form, Euler characteristics, stabilizers, residue engine, ring laws) and
/// returns one entry per property, in a fixed order.
std::vector<IdentityCheck> run_selfcheck();

} // namespace hqm

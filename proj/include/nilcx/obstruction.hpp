#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

using AscendingType = std::vector<std::size_t>;

struct ObstructionVerdict {
    std::string rule;
    /// The rule's hypothesis holds and it rules out every complex structure.
    bool triggered = false;
    /// The rule rules out strongly non-nilpotent structures (implied by `triggered`).
    bool excludes_snn = false;
    std::string citation;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> witness;
};

/// Existence obstructions on a nilpotent algebra. Odd dimension is reported as a
/// verdict. Throws Error(NotNilpotent) / Error(NotALieAlgebra).
std::vector<ObstructionVerdict> obstruction_report(const LieAlgebra& g);

/// True iff some triggered verdict excludes every complex structure.
bool excludes_complex_structures(std::span<const ObstructionVerdict> verdicts);

enum class AuditOutcome { Pass, Fail, Skipped };

const char* to_string(AuditOutcome outcome);

struct AuditCheck {
    std::string rule;
    AuditOutcome outcome = AuditOutcome::Skipped;
    std::string citation;
    std::string detail;
};

/// Checks every applicable structural statement against an integrable pair.
/// A Fail on a valid pair means an implementation defect. Throws Error(NotIntegrable).
std::vector<AuditCheck> theorem_audit(const LieAlgebra& g, const Acs& j);

/// Dimension 8: structures on one algebra never mix strongly non-nilpotent with
/// quasi-nilpotent kinds. Skipped outside dimension 8 or with fewer than two structures.
AuditCheck coexistence_audit(const LieAlgebra& g, std::span<const Acs> structures);

std::size_t count_failures(std::span<const AuditCheck> checks);

/// Ascending types compatible with a strongly non-nilpotent complex structure.
/// Dimensions 2 and 4 admit none (empty set); 6 and 8 have explicit lists;
/// other dimensions are unknown (nullopt).
std::optional<std::vector<AscendingType>> snn_admissible_types(std::size_t dim);

std::string format_type(const AscendingType& type);

}  // namespace nilcx

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orient/index.hpp"
#include "orient/topology.hpp"

namespace orient::rules {

enum class GroupFamily {
    U,
    SU,
    SO,
    O,
    Sp,
    Spin,
    Abelian,          // compact abelian; m is the dimension
    ComplexReductive, // e.g. SL(m,C), GL(m,C)
    Generic,
};

const char* family_name(GroupFamily family);

struct GroupDescriptor {
    GroupFamily family = GroupFamily::Generic;
    int m = 1;
    bool connected = false;
    bool simply_connected = false;
    long dim_g = 0;
    std::string z_center; // free-form notes on the centre

    // Canonical descriptor with flags and dimension filled from the family.
    static GroupDescriptor make(GroupFamily family, int m);
    static GroupDescriptor parse(const std::string& text); // e.g. "U(2)", "abelian(3)"
    std::string to_string() const;
};

// Throws ShapeError when the stored flags contradict the family.
void validate(const GroupDescriptor& g);

enum class Status {
    NotOrientable,
    Unknown,
    Orientable,
    OrientableCanonical,
};

const char* status_name(Status status);

struct RuleCitation {
    std::string rule_id;  // stable identifier, e.g. "complex-symbol"
    std::string citation; // literature locator, e.g. "Thm 2.2"
};

struct Verdict {
    Status status = Status::Unknown;
    std::vector<RuleCitation> trail;           // every rule that fired, in priority order
    std::vector<std::string> required_choices; // auxiliary data the verdict depends on
};

struct Scenario {
    topo::ModelPtr model;
    index::OperatorDescriptor op;
    GroupDescriptor group;
    // Overrides the computed complex-symbol detection when set.
    std::optional<bool> force_complex_symbol;
};

// Applies the rule set in fixed priority: the disconnected-obstruction rule
// first (it excludes every positive rule), then canonical-orientation rules,
// then orientability-only rules, then the U/SU/Sp reduction chain. Returns
// Unknown with an empty trail when nothing fires; never guesses.
Verdict evaluate(const Scenario& scenario);

// Static rule table (id -> citation), for trail validation.
const std::vector<RuleCitation>& rule_table();

// Parity bookkeeping for the normalization against the trivial bundle at the
// trivial connection: an orientation of det D is needed when dim g is odd, an
// orientation of g when ind D is odd.
struct StandardOrientationDeps {
    bool needs_det_d_orientation;
    bool needs_lie_algebra_orientation;
};

StandardOrientationDeps standard_orientation_deps(long dim_g, const mpz_class& ind_d);

} // namespace orient::rules

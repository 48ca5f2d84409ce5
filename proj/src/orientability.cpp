#include "orient/orientability.hpp"

#include <algorithm>
#include <array>

namespace orient::rules {

namespace {

struct FamilyInfo {
    GroupFamily family;
    const char* name;
};

constexpr std::array<FamilyInfo, 9> kFamilies{{
    {GroupFamily::U, "U"},
    {GroupFamily::SU, "SU"},
    {GroupFamily::SO, "SO"},
    {GroupFamily::O, "O"},
    {GroupFamily::Sp, "Sp"},
    {GroupFamily::Spin, "Spin"},
    {GroupFamily::Abelian, "abelian"},
    {GroupFamily::ComplexReductive, "complex-reductive"},
    {GroupFamily::Generic, "generic"},
}};

} // namespace

const char* family_name(GroupFamily family) {
    for (const auto& f : kFamilies)
        if (f.family == family) return f.name;
    return "?";
}

GroupDescriptor GroupDescriptor::make(GroupFamily family, int m) {
    GroupDescriptor g;
    g.family = family;
    g.m = m;
    auto reject = [&](const char* why) {
        throw ShapeError(std::string(family_name(family)) + "(" + std::to_string(m) + "): " + why);
    };
    switch (family) {
        case GroupFamily::U:
            if (m < 1) reject("m >= 1 required");
            g.connected = true;
            g.simply_connected = false;
            g.dim_g = long(m) * m;
            g.z_center = "U(1)";
            break;
        case GroupFamily::SU:
            if (m < 2) reject("m >= 2 required (SU(1) has dimension 0)");
            g.connected = true;
            g.simply_connected = true;
            g.dim_g = long(m) * m - 1;
            g.z_center = "Z_" + std::to_string(m);
            break;
        case GroupFamily::SO:
            if (m < 2) reject("m >= 2 required (SO(1) has dimension 0)");
            g.connected = true;
            g.simply_connected = false;
            g.dim_g = long(m) * (m - 1) / 2;
            g.z_center = m % 2 == 0 ? "Z_2" : "trivial";
            break;
        case GroupFamily::O:
            if (m < 2) reject("m >= 2 required (O(1) has dimension 0)");
            g.connected = false;
            g.simply_connected = false;
            g.dim_g = long(m) * (m - 1) / 2;
            g.z_center = "Z_2";
            break;
        case GroupFamily::Sp:
            if (m < 1) reject("m >= 1 required");
            g.connected = true;
            g.simply_connected = true;
            g.dim_g = long(m) * (2 * m + 1);
            g.z_center = "Z_2";
            break;
        case GroupFamily::Spin:
            if (m < 2) reject("m >= 2 required");
            g.connected = true;
            g.simply_connected = (m >= 3);
            g.dim_g = long(m) * (m - 1) / 2;
            g.z_center = m % 2 == 1 ? "Z_2" : "Z_4 or Z_2 x Z_2";
            break;
        case GroupFamily::Abelian:
            if (m < 1) reject("dimension >= 1 required");
            g.connected = true;
            g.simply_connected = false;
            g.dim_g = m;
            g.z_center = "everything";
            break;
        case GroupFamily::ComplexReductive:
            if (m < 1) reject("m >= 1 required");
            g.connected = true;
            g.simply_connected = false;
            g.dim_g = 2L * m * m;
            g.z_center = "C^*";
            break;
        case GroupFamily::Generic:
            g.dim_g = std::max(1, m);
            break;
    }
    return g;
}

void validate(const GroupDescriptor& g) {
    auto fail = [&](const char* why) {
        throw ShapeError("group " + g.to_string() + ": " + why);
    };
    if (g.dim_g < 1) fail("structure groups must have positive dimension");
    switch (g.family) {
        case GroupFamily::SU:
        case GroupFamily::Sp:
            if (!g.connected || !g.simply_connected) fail("must be connected and simply connected");
            break;
        case GroupFamily::U:
            if (!g.connected || g.simply_connected) fail("connected with free fundamental group");
            break;
        case GroupFamily::SO:
            if (!g.connected) fail("must be connected");
            break;
        case GroupFamily::O:
            if (g.connected) fail("has two components");
            break;
        case GroupFamily::Spin:
            if (!g.connected) fail("must be connected");
            if (g.m >= 3 && !g.simply_connected) fail("simply connected for m >= 3");
            break;
        case GroupFamily::Abelian:
            if (!g.connected) fail("tori are connected");
            break;
        case GroupFamily::ComplexReductive:
            if (!g.connected) fail("must be connected");
            break;
        case GroupFamily::Generic: break;
    }
}

std::string GroupDescriptor::to_string() const {
    if (family == GroupFamily::Generic) {
        std::string out = "generic(dim=" + std::to_string(dim_g);
        if (connected) out += ",connected";
        if (simply_connected) out += ",simply-connected";
        return out + ")";
    }
    return std::string(family_name(family)) + "(" + std::to_string(m) + ")";
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')')
        throw ShapeError("cannot parse group descriptor '" + text + "'");
    std::string head = t.substr(0, open);
    std::string args = t.substr(open + 1, t.size() - open - 2);

    auto parse_m = [&text](const std::string& digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ShapeError("cannot parse group descriptor '" + text + "'");
        return std::stoi(digits);
    };
    if (head == "SL" || head == "GL") {
        auto comma = args.find(',');
        if (comma == std::string::npos || args.substr(comma + 1) != "C")
            throw ShapeError("cannot parse group descriptor '" + text + "'");
        int m = parse_m(args.substr(0, comma));
        auto g = make(GroupFamily::ComplexReductive, m);
        g.z_center = head == "SL" ? "Z_m" : "C^*";
        if (head == "SL") {
            g.simply_connected = true;
            g.dim_g = 2L * m * m - 2;
        }
        return g;
    }
    if (head == "generic") {
        GroupDescriptor g;
        g.family = GroupFamily::Generic;
        std::string item;
        std::vector<std::string> items;
        for (char c : args + ",") {
            if (c == ',') {
                if (!item.empty()) items.push_back(item);
                item.clear();
            } else {
                item += c;
            }
        }
        for (const auto& it : items) {
            auto eq = it.find('=');
            std::string key = it.substr(0, eq);
            if (key == "dim")
                g.dim_g = std::stol(it.substr(eq + 1));
            else if (key == "connected")
                g.connected = true;
            else if (key == "simply-connected")
                g.simply_connected = true;
            else
                throw ShapeError("unknown generic group property '" + it + "'");
        }
        if (g.dim_g < 1) throw ShapeError("generic group needs dim=<positive>");
        return g;
    }
    for (const auto& f : kFamilies)
        if (head == f.name) return make(f.family, parse_m(args));
    throw ShapeError("unknown group family '" + head + "'");
}

const char* status_name(Status status) {
    switch (status) {
        case Status::NotOrientable: return "not-orientable";
        case Status::Unknown: return "unknown";
        case Status::Orientable: return "orientable";
        case Status::OrientableCanonical: return "orientable-with-canonical";
    }
    return "?";
}

const std::vector<RuleCitation>& rule_table() {
    static const std::vector<RuleCitation> table = {
        {"disconnected-odd-index", "Rem 2.3"},
        {"complex-symbol", "Thm 2.2"},
        {"even-odd-complex-structure", "Ex 2.1"},
        {"dirac-complex-structure", "Ex 2.2"},
        {"flat-2d-canonical", "Thm 4.1"},
        {"flat-3d-canonical", "Thm 4.2"},
        {"dt-instanton-canonical", "S4.2.8"},
        {"self-adjoint-split", "S2.2.5"},
        {"vafa-witten-canonical", "Thm 4.6"},
        {"abelian-group", "S2.2.3"},
        {"complex-group", "S2.2.4"},
        {"asd4-spinc", "Thm 4.4"},
        {"kapustin-witten-spinc", "Thm 4.7"},
        {"haydys-witten-simply-connected", "Thm 4.8"},
        {"cor-2-12", "Cor 2.12"},
        {"so3-spinc-lift", "Prop 2.6"},
        {"su-from-u", "Ex 2.15"},
        {"u-from-su", "Ex 2.16"},
        {"u-from-sp", "Ex 2.17"},
    };
    return table;
}

namespace {

RuleCitation cite(const char* rule_id) {
    for (const auto& r : rule_table())
        if (r.rule_id == rule_id) return r;
    throw InconsistencyError(std::string("rule id '") + rule_id + "' missing from the rule table");
}

struct Fired {
    Status grade;
    std::vector<RuleCitation> trail;
    std::vector<std::string> choices;
};

Status weaker(Status a, Status b) { return int(a) < int(b) ? a : b; }
Status stronger(Status a, Status b) { return int(a) > int(b) ? a : b; }

bool is_abelian_group(const GroupDescriptor& g) {
    return g.family == GroupFamily::Abelian || (g.family == GroupFamily::U && g.m == 1) ||
           (g.family == GroupFamily::SO && g.m == 2) ||
           (g.family == GroupFamily::Spin && g.m == 2);
}

std::vector<std::string> orientation_choices(const Scenario& sc) {
    auto deps = standard_orientation_deps(sc.group.dim_g, index::untwisted_real_index(sc.op));
    std::vector<std::string> out;
    if (deps.needs_det_d_orientation) out.push_back("orientation of det D");
    if (deps.needs_lie_algebra_orientation) out.push_back("orientation of g");
    return out;
}

// Positive rules that apply directly, without the reduction chain.
std::vector<Fired> base_positive_rules(const Scenario& sc) {
    using index::OperatorKind;
    std::vector<Fired> fired;
    const auto& op = sc.op;
    const auto& g = sc.group;

    bool complex_symbol =
        sc.force_complex_symbol ? *sc.force_complex_symbol : index::has_complex_symbol(op);
    if (complex_symbol) {
        Fired f{Status::OrientableCanonical, {cite("complex-symbol")}, {}};
        switch (op.kind) {
            case OperatorKind::DeRhamEvenOdd:
                f.trail.push_back(cite("even-odd-complex-structure"));
                break;
            case OperatorKind::Dirac:
            case OperatorKind::PositiveDirac:
                f.trail.push_back(cite("dirac-complex-structure"));
                break;
            case OperatorKind::Flat2d: f.trail.push_back(cite("flat-2d-canonical")); break;
            case OperatorKind::Flat3d:
                f.trail.push_back(cite("flat-3d-canonical"));
                if (!g.connected) f.choices.push_back("unit-length 2-form");
                break;
            case OperatorKind::DtInstanton:
                f.trail.push_back(cite("dt-instanton-canonical"));
                break;
            default: break;
        }
        fired.push_back(std::move(f));
    }

    if (op.kind == OperatorKind::VafaWitten)
        fired.push_back(
            Fired{Status::OrientableCanonical,
                  {cite("self-adjoint-split"), cite("vafa-witten-canonical")},
                  {}});

    if (is_abelian_group(g))
        fired.push_back(
            Fired{Status::OrientableCanonical, {cite("abelian-group")}, orientation_choices(sc)});

    if (g.family == GroupFamily::ComplexReductive)
        fired.push_back(Fired{Status::OrientableCanonical, {cite("complex-group")}, {}});

    if (op.kind == OperatorKind::Asd4 && g.connected) {
        Fired f{Status::OrientableCanonical, {cite("asd4-spinc")}, orientation_choices(sc)};
        if (!(g.simply_connected || g.family == GroupFamily::U))
            f.choices.push_back("Spin^c structure");
        fired.push_back(std::move(f));
    }
    if (op.kind == OperatorKind::KapustinWitten && g.connected) {
        Fired f{Status::OrientableCanonical, {cite("kapustin-witten-spinc")},
                orientation_choices(sc)};
        if (!(g.simply_connected || g.family == GroupFamily::U))
            f.choices.push_back("Spin^c structure");
        fired.push_back(std::move(f));
    }
    if (op.kind == OperatorKind::HaydysWitten && g.connected && g.simply_connected)
        fired.push_back(Fired{Status::OrientableCanonical,
                              {cite("haydys-witten-simply-connected")},
                              orientation_choices(sc)});

    if (g.family == GroupFamily::U && topo::betti_profile(op.model).odd_mod2_vanishes)
        fired.push_back(Fired{Status::Orientable, {cite("cor-2-12")}, {}});

    return fired;
}

Scenario with_group(const Scenario& sc, GroupDescriptor g) {
    Scenario out = sc;
    out.group = std::move(g);
    return out;
}

void append_reduced(std::vector<Fired>& fired, const std::vector<Fired>& feeder_fired,
                    const char* reduction_rule, Status cap = Status::OrientableCanonical) {
    for (const auto& f : feeder_fired) {
        Fired out{weaker(f.grade, cap), {cite(reduction_rule)}, f.choices};
        out.trail.insert(out.trail.end(), f.trail.begin(), f.trail.end());
        fired.push_back(std::move(out));
    }
}

// Reduction chain along the acyclic feeder graph Sp(m) -> U(m) -> SU(m) and
// SU(m+1) -> U(m); feeders are evaluated with base rules plus their own
// feeders, never cycling back.
std::vector<Fired> positive_rules_with_reductions(const Scenario& sc) {
    std::vector<Fired> fired = base_positive_rules(sc);
    const auto& g = sc.group;
    if (g.family == GroupFamily::U) {
        append_reduced(fired,
                       base_positive_rules(with_group(sc, GroupDescriptor::make(GroupFamily::SU,
                                                                                g.m + 1))),
                       "u-from-su");
        append_reduced(
            fired, base_positive_rules(with_group(sc, GroupDescriptor::make(GroupFamily::Sp, g.m))),
            "u-from-sp");
    } else if (g.family == GroupFamily::SU) {
        append_reduced(
            fired,
            positive_rules_with_reductions(with_group(sc, GroupDescriptor::make(GroupFamily::U,
                                                                                g.m))),
            "su-from-u");
    } else if (g.family == GroupFamily::SO && g.m == 3) {
        // lifts along Spin^c(3) = U(2); every library model has torsion-free H^3
        append_reduced(
            fired,
            positive_rules_with_reductions(with_group(sc, GroupDescriptor::make(GroupFamily::U, 2))),
            "so3-spinc-lift", Status::Orientable);
    }
    return fired;
}

} // namespace

Verdict evaluate(const Scenario& scenario) {
    Scenario sc = scenario;
    if (!sc.op.model && sc.model) sc.op.model = sc.model;
    if (sc.model && sc.op.model.get() != sc.model.get())
        throw ShapeError("scenario model differs from the operator's model");
    index::require_admissible(sc.op);
    validate(sc.group);

    // the disconnected obstruction excludes every positive rule
    if (sc.group.family == GroupFamily::O && sc.group.m % 2 == 0) {
        mpz_class ind = index::untwisted_real_index(sc.op);
        if (mpz_odd_p(ind.get_mpz_t())) {
            if (!positive_rules_with_reductions(sc).empty())
                throw InconsistencyError(
                    "a positive rule fired alongside the disconnected obstruction");
            return Verdict{Status::NotOrientable, {cite("disconnected-odd-index")}, {}};
        }
    }

    auto fired = positive_rules_with_reductions(sc);
    Verdict verdict;
    for (const auto& f : fired) {
        verdict.status = stronger(verdict.status, f.grade);
        verdict.trail.insert(verdict.trail.end(), f.trail.begin(), f.trail.end());
    }
    // choices only from the rules that realize the final grade
    for (const auto& f : fired)
        if (f.grade == verdict.status)
            for (const auto& c : f.choices)
                if (std::find(verdict.required_choices.begin(), verdict.required_choices.end(),
                              c) == verdict.required_choices.end())
                    verdict.required_choices.push_back(c);
    return verdict;
}

StandardOrientationDeps standard_orientation_deps(long dim_g, const mpz_class& ind_d) {
    return StandardOrientationDeps{dim_g % 2 != 0, mpz_odd_p(ind_d.get_mpz_t()) != 0};
}

} // namespace orient::rules

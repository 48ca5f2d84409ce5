#include "orient/index.hpp"

#include <array>

namespace orient::index {

namespace {

struct KindInfo {
    OperatorKind kind;
    const char* name;
};

constexpr std::array<KindInfo, 12> kKinds{{
    {OperatorKind::DeRhamEvenOdd, "de-rham-even-odd"},
    {OperatorKind::SignatureType, "signature-type"},
    {OperatorKind::Dirac, "dirac"},
    {OperatorKind::PositiveDirac, "positive-dirac"},
    {OperatorKind::Dolbeault, "dolbeault"},
    {OperatorKind::Asd4, "asd4"},
    {OperatorKind::Flat2d, "flat-2d"},
    {OperatorKind::Flat3d, "flat-3d"},
    {OperatorKind::VafaWitten, "vafa-witten"},
    {OperatorKind::KapustinWitten, "kapustin-witten"},
    {OperatorKind::HaydysWitten, "haydys-witten"},
    {OperatorKind::DtInstanton, "dt-instanton"},
}};

} // namespace

const char* kind_name(OperatorKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.name;
    return "?";
}

OperatorKind kind_from_name(const std::string& name) {
    for (const auto& k : kKinds)
        if (name == k.name) return k.kind;
    throw AdmissibilityError("unknown operator kind '" + name + "'");
}

bool admissible(const OperatorDescriptor& op) {
    const auto& m = op.model;
    if (!m) return false;
    const int n = m->dimension();
    switch (op.kind) {
        case OperatorKind::DeRhamEvenOdd: return true;
        case OperatorKind::SignatureType: return m->orientable() && n % 4 == 0;
        case OperatorKind::Dirac: return m->spin();
        case OperatorKind::PositiveDirac: return m->spin() && m->orientable() && n % 4 == 0;
        case OperatorKind::Dolbeault: return m->is_complex() && n % 2 == 0;
        case OperatorKind::Asd4: return m->orientable() && n == 4;
        case OperatorKind::Flat2d: return n == 2;
        case OperatorKind::Flat3d: return n == 3;
        case OperatorKind::VafaWitten: return m->orientable() && n == 4;
        case OperatorKind::KapustinWitten: return m->orientable() && n == 4;
        case OperatorKind::HaydysWitten: return n == 5;
        case OperatorKind::DtInstanton: return m->is_complex() && n == 6;
    }
    return false;
}

void require_admissible(const OperatorDescriptor& op) {
    if (!admissible(op))
        throw AdmissibilityError(std::string("operator ") + kind_name(op.kind) +
                                 " is not admissible on model " +
                                 (op.model ? op.model->name() : "<none>"));
}

bool has_complex_symbol(const OperatorDescriptor& op) {
    const int n = op.model->dimension();
    switch (op.kind) {
        case OperatorKind::DeRhamEvenOdd: return op.model->orientable() && n % 4 == 2;
        case OperatorKind::Dirac: return n % 8 >= 1 && n % 8 <= 6;
        case OperatorKind::PositiveDirac: return n % 8 == 4;
        case OperatorKind::Dolbeault: return true;
        case OperatorKind::Flat2d: return op.model->orientable();
        case OperatorKind::Flat3d: return true; // from a unit-length 2-form
        case OperatorKind::DtInstanton: return true;
        default: return false;
    }
}

topo::CohClass index_density(const OperatorDescriptor& op) {
    require_admissible(op);
    const auto& m = op.model;
    switch (op.kind) {
        case OperatorKind::DeRhamEvenOdd: return m->euler_class();
        case OperatorKind::Dirac:
        case OperatorKind::PositiveDirac: return topo::a_hat_class(m);
        case OperatorKind::Dolbeault: {
            // density of the underlying real operator: the twist hits both the
            // holomorphic and the conjugate summand, so both Todd halves enter;
            // the (-1)^(n/2) compensates the top-degree flip under conjugation
            // and the pairing is symmetric in exact integers
            topo::CohClass td = topo::todd_class(m);
            int top_sign = (m->dimension() / 2) % 2 == 0 ? 1 : -1;
            return td + conjugate_chern_character(td) * top_sign;
        }
        case OperatorKind::SignatureType:
        case OperatorKind::Asd4: {
            mpz_class half_pow;
            mpz_ui_pow_ui(half_pow.get_mpz_t(), 2, unsigned(m->dimension() / 2));
            return (m->euler_class() + topo::l_hat_class(m) * mpq_class(half_pow)) *
                   mpq_class(1, 2);
        }
        default:
            throw AdmissibilityError(std::string("operator ") + kind_name(op.kind) +
                                     " carries no index density");
    }
}

namespace {

mpz_class integral_or_throw(const mpq_class& q, const std::string& what) {
    if (q.get_den() != 1)
        throw InconsistencyError(what + " is not an integer: " + q.get_str());
    return q.get_num();
}

} // namespace

mpz_class untwisted_real_index(const OperatorDescriptor& op) {
    require_admissible(op);
    const auto& m = op.model;
    auto profile = topo::betti_profile(m);
    switch (op.kind) {
        case OperatorKind::DeRhamEvenOdd:
        case OperatorKind::Flat2d: return profile.euler_characteristic;
        case OperatorKind::SignatureType:
        case OperatorKind::Asd4: {
            mpz_class sum = profile.euler_characteristic + *profile.signature;
            if (sum % 2 != 0)
                throw InconsistencyError("chi + sigma is odd on " + m->name());
            return sum / 2;
        }
        case OperatorKind::Dirac:
        case OperatorKind::PositiveDirac:
            return integral_or_throw(topo::integrate(topo::a_hat_class(m)), "A-hat integral");
        case OperatorKind::Dolbeault:
        case OperatorKind::DtInstanton:
            return 2 * integral_or_throw(topo::integrate(topo::todd_class(m)), "Todd integral");
        case OperatorKind::KapustinWitten: return profile.euler_characteristic;
        case OperatorKind::Flat3d:
        case OperatorKind::VafaWitten:
        case OperatorKind::HaydysWitten: return 0;
    }
    return 0;
}

topo::CohClass conjugate_chern_character(const topo::CohClass& ch) {
    topo::CohClass out(ch.model());
    for (const auto& [mono, coef] : ch.terms()) {
        int d = ch.model()->degree_of(mono);
        out.set(mono, d % 4 == 2 ? -coef : coef);
    }
    return out;
}

EulerForm::EulerForm(fgab::IntMatrix matrix, fgab::FgAbGroup group)
    : matrix_(std::move(matrix)), group_(std::move(group)) {
    if (matrix_.rows() != matrix_.cols())
        throw ShapeError("Euler form matrix must be square");
    if (matrix_.rows() != group_.free_rank)
        throw ShapeError("Euler form rank " + std::to_string(matrix_.rows()) +
                         " does not match free rank " + std::to_string(group_.free_rank));
    for (std::size_t h = 0; h < matrix_.rows(); ++h)
        for (std::size_t i = h + 1; i < matrix_.cols(); ++i)
            if (matrix_.at(h, i) != matrix_.at(i, h))
                throw ShapeError("Euler form matrix must be symmetric");
}

mpz_class EulerForm::evaluate(const fgab::GroupElement& x, const fgab::GroupElement& y) const {
    fgab::require_shape(group_, x);
    fgab::require_shape(group_, y);
    mpz_class out = 0;
    for (std::size_t h = 0; h < matrix_.rows(); ++h) {
        if (x.free_coords[h] == 0) continue;
        for (std::size_t i = 0; i < matrix_.cols(); ++i)
            out += matrix_.at(h, i) * x.free_coords[h] * y.free_coords[i];
    }
    return out;
}

EulerForm euler_form(const OperatorDescriptor& op,
                     const std::vector<topo::KClassData>& witnesses) {
    fgab::FgAbGroup free_group{witnesses.size(), {}, {}};
    return euler_form(op, witnesses, free_group);
}

EulerForm euler_form(const OperatorDescriptor& op, const std::vector<topo::KClassData>& witnesses,
                     const fgab::FgAbGroup& group) {
    require_admissible(op);
    if (group.free_rank != witnesses.size())
        throw ShapeError("need one witness per free generator: " +
                         std::to_string(witnesses.size()) + " given, free rank " +
                         std::to_string(group.free_rank));
    topo::CohClass density = index_density(op);
    std::vector<topo::CohClass> ch, ch_conj;
    ch.reserve(witnesses.size());
    for (const auto& w : witnesses) {
        if (w.model.get() != op.model.get())
            throw ShapeError("witness lives on model " + (w.model ? w.model->name() : "<none>") +
                             ", operator on " + op.model->name());
        ch.push_back(topo::char_classes(w).chern_character);
        ch_conj.push_back(conjugate_chern_character(ch.back()));
    }
    fgab::IntMatrix chi(witnesses.size(), witnesses.size());
    for (std::size_t h = 0; h < witnesses.size(); ++h)
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            mpq_class value = topo::integrate(topo::cup(topo::cup(ch[h], ch_conj[i]), density));
            chi.at(h, i) = integral_or_throw(
                value, "index of witness pair (" + std::to_string(h) + "," + std::to_string(i) +
                           ") under " + kind_name(op.kind));
        }
    for (std::size_t h = 0; h < witnesses.size(); ++h)
        for (std::size_t i = h + 1; i < witnesses.size(); ++i)
            if (chi.at(h, i) != chi.at(i, h))
                throw InconsistencyError("index density produced a non-symmetric Euler form");
    return EulerForm(std::move(chi), group);
}

mpz_class ind_p(const EulerForm& form, const fgab::GroupElement& alpha) {
    return form.evaluate(alpha, alpha);
}

} // namespace orient::index

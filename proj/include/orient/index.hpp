#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "orient/fgab.hpp"
#include "orient/topology.hpp"

namespace orient::index {

// The first six kinds carry an index density and feed the Euler form. The
// remaining tags name the gauge-theoretic deformation operators handled by
// the orientability rule engine; they have no density here.
enum class OperatorKind {
    DeRhamEvenOdd,
    SignatureType,
    Dirac,
    PositiveDirac,
    Dolbeault,
    Asd4,
    Flat2d,
    Flat3d,
    VafaWitten,
    KapustinWitten,
    HaydysWitten,
    DtInstanton,
};

const char* kind_name(OperatorKind kind);
OperatorKind kind_from_name(const std::string& name); // throws AdmissibilityError

struct OperatorDescriptor {
    OperatorKind kind;
    topo::ModelPtr model;
};

// Dimension / spin / orientability / complex-structure constraints per kind.
bool admissible(const OperatorDescriptor& op);
void require_admissible(const OperatorDescriptor& op); // throws AdmissibilityError

// Whether this operator's symbol is (isotopic to) a complex-linear one on its
// model, and so induces canonical orientations for every structure group.
bool has_complex_symbol(const OperatorDescriptor& op);

// Index class I with ind_C(D twisted by W) = integral of ch(W) . I:
//   DeRhamEvenOdd            e(TX)
//   Dirac, PositiveDirac     A-hat(TX)
//   Dolbeault                Td(TX)
//   SignatureType, Asd4      (e(TX) + 2^(n/2) Lhat(TX)) / 2, which makes the
//                            untwisted complex index (chi + sigma)/2 on
//                            oriented 4k-models
// Only defined for the six density-carrying kinds.
topo::CohClass index_density(const OperatorDescriptor& op);

// Untwisted real index of the operator itself (the parity input of the
// structure-group obstruction): twice the complex index for the
// complex-linear kinds, zero for the odd-dimensional and self-adjoint-paired
// kinds, the density integral otherwise.
mpz_class untwisted_real_index(const OperatorDescriptor& op);

// Chern character of the conjugate class: degree 2 mod 4 parts flip sign.
topo::CohClass conjugate_chern_character(const topo::CohClass& ch);

// Symmetric integer bilinear form on the free part of K^0, vanishing on
// torsion coordinates.
class EulerForm {
public:
    EulerForm(fgab::IntMatrix matrix, fgab::FgAbGroup group);

    const fgab::IntMatrix& matrix() const { return matrix_; }
    const fgab::FgAbGroup& group() const { return group_; }

    // chi(x, y) through the free coordinates; torsion contributes zero.
    mpz_class evaluate(const fgab::GroupElement& x, const fgab::GroupElement& y) const;

    bool operator==(const EulerForm& other) const = default;

private:
    fgab::IntMatrix matrix_;
    fgab::FgAbGroup group_;
};

// chi_{hi} = ind_C(D twisted by w_h (x) conj(w_i)) computed from the index
// density; one witness per free generator. Every entry is asserted integral.
EulerForm euler_form(const OperatorDescriptor& op, const std::vector<topo::KClassData>& witnesses);
EulerForm euler_form(const OperatorDescriptor& op, const std::vector<topo::KClassData>& witnesses,
                     const fgab::FgAbGroup& group);

// ind_P = chi(alpha, alpha).
mpz_class ind_p(const EulerForm& form, const fgab::GroupElement& alpha);

} // namespace orient::index

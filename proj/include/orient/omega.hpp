#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "orient/fgab.hpp"
#include "orient/index.hpp"

namespace orient::omega {

enum class SwapFlavor {
    TorsorLambda, // product-of-moduli-spaces exchange: (-1)^(ind_P ind_Q)
    TorsorPhi,    // direct-sum exchange: (-1)^(chi(a,b) + chi(a,a) chi(b,b))
};

// The orientation group of the pair (K^0, chi) together with the involution
// character Xi on the 2-torsion subgroup. Elements are pairs (coords, sign)
// in a fixed reference normal form; multiplication follows the explicit
// central-extension law with the 2-primary carry.
class OmegaGroup {
public:
    // xi_generator_signs[j] is Xi on the order-2 element of the j-th
    // 2-primary factor; Xi extends multiplicatively (so it is a morphism by
    // construction).
    OmegaGroup(fgab::FgAbGroup k0, index::EulerForm chi, std::vector<int> xi_generator_signs);

    const fgab::FgAbGroup& k0() const { return k0_; }
    const index::EulerForm& chi() const { return chi_; }
    const std::vector<int>& xi_generator_signs() const { return xi_; }

    // Xi(gamma) for a 2-torsion element gamma.
    int xi(const fgab::GroupElement& gamma) const;

private:
    fgab::FgAbGroup k0_;
    index::EulerForm chi_;
    std::vector<int> xi_;
};

struct OmegaElement {
    fgab::GroupElement coords;
    int sign = +1;

    bool operator==(const OmegaElement& other) const = default;
};

OmegaElement identity_element(const OmegaGroup& g);

// The explicit multiplication: coordinates add; the sign picks up
// (-1)^{sum_{h<i} (chi_hi + chi_hh chi_ii) a'_h a_i} from the free part
// (a from x, a' from y, exactly in that pairing) and Xi(gamma) from the
// 2-primary carry gamma.
OmegaElement multiply(const OmegaGroup& g, const OmegaElement& x, const OmegaElement& y);
OmegaElement inverse(const OmegaGroup& g, const OmegaElement& x);
OmegaElement element_power(const OmegaGroup& g, const OmegaElement& x, long k);

// Exchange signs of the direct-sum isomorphisms. The associativity
// counterpart of either flavor is trivial.
int swap_sign(const index::EulerForm& form, const fgab::GroupElement& alpha,
              const fgab::GroupElement& beta, SwapFlavor flavor);
int direct_sum_assoc_sign(const index::EulerForm& form, const fgab::GroupElement& alpha,
                          const fgab::GroupElement& beta, const fgab::GroupElement& gamma);

// Extracts Xi from an oracle giving the sign of the square of each 2-torsion
// element: (gamma, s) * (gamma, s) = (0, Xi(gamma)). Verifies the oracle is
// multiplicative across the whole 2-torsion subgroup, else throws
// InconsistencyError.
std::vector<int> xi_from_squares(const fgab::FgAbGroup& k0,
                                 const std::function<int(const fgab::GroupElement&)>& square_sign);

// A bijection Omega <-> K^0 x {+-1} compatible with the extension: in
// reference coordinates it acts as (v, s) -> (v, twist(v) * s).
class Trivialization {
public:
    Trivialization(const OmegaGroup* group, std::function<int(const fgab::GroupElement&)> twist)
        : group_(group), twist_(std::move(twist)) {}

    const OmegaGroup& group() const { return *group_; }
    int twist(const fgab::GroupElement& v) const { return twist_(v); }

    std::pair<fgab::GroupElement, int> to_coords(const OmegaElement& x) const;
    OmegaElement from_coords(const fgab::GroupElement& v, int sign) const;

private:
    const OmegaGroup* group_;
    std::function<int(const fgab::GroupElement&)> twist_;
};

// The normal-form trivialization built from generator words: free and
// 2-primary generator orientations are the given sign choices, odd-torsion
// generator orientations are forced by the q-th power condition (both
// candidates are tested; exactly one closes up).
Trivialization normal_form(const OmegaGroup& g, const std::vector<int>& eta_free,
                           const std::vector<int>& zeta_two);

struct TrivializationComparison {
    std::vector<int> eta;  // per free generator
    std::vector<int> zeta; // per 2-primary generator
};

// Recovers the unique signs with L2 o L1^{-1}(v, s) = (v, prod eta_i^{a_i}
// prod zeta_j^{b_j} s), verifying the form on a spanning set; throws
// NonConformingError if L2 o L1^{-1} is not of this shape.
TrivializationComparison compare_trivializations(const Trivialization& l1,
                                                 const Trivialization& l2);

} // namespace orient::omega

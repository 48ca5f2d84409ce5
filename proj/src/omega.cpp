#include "orient/omega.hpp"

namespace orient::omega {

namespace {

mpz_class two_power(unsigned p) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, p);
    return f;
}

int parity_sign(const mpz_class& e) { return mpz_even_p(e.get_mpz_t()) ? 1 : -1; }

long to_long(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw RangeError(std::string(what) + " does not fit a machine word");
    return v.get_si();
}

} // namespace

OmegaGroup::OmegaGroup(fgab::FgAbGroup k0, index::EulerForm chi,
                       std::vector<int> xi_generator_signs)
    : k0_(std::move(k0)), chi_(std::move(chi)), xi_(std::move(xi_generator_signs)) {
    if (chi_.group() != k0_)
        throw ShapeError("Euler form group does not match K^0");
    if (xi_.size() != k0_.two_primary.size())
        throw ShapeError("Xi needs one sign per 2-primary factor: " +
                         std::to_string(xi_.size()) + " given, " +
                         std::to_string(k0_.two_primary.size()) + " factors");
    for (int s : xi_)
        if (s != 1 && s != -1) throw ShapeError("Xi signs must be +1 or -1");
}

int OmegaGroup::xi(const fgab::GroupElement& gamma) const {
    fgab::require_element(k0_, gamma);
    int sign = 1;
    for (std::size_t j = 0; j < k0_.two_primary.size(); ++j) {
        const mpz_class& b = gamma.two_coords[j];
        if (b == 0) continue;
        if (b != two_power(k0_.two_primary[j] - 1))
            throw ShapeError("Xi evaluated off the 2-torsion subgroup");
        sign *= xi_[j];
    }
    for (std::size_t i = 0; i < k0_.free_rank; ++i)
        if (gamma.free_coords[i] != 0) throw ShapeError("Xi evaluated off the 2-torsion subgroup");
    for (std::size_t k = 0; k < k0_.odd_orders.size(); ++k)
        if (gamma.odd_coords[k] != 0) throw ShapeError("Xi evaluated off the 2-torsion subgroup");
    return sign;
}

OmegaElement identity_element(const OmegaGroup& g) {
    return OmegaElement{fgab::zero_element(g.k0()), +1};
}

OmegaElement multiply(const OmegaGroup& g, const OmegaElement& x, const OmegaElement& y) {
    const fgab::FgAbGroup& k0 = g.k0();
    fgab::require_element(k0, x.coords);
    fgab::require_element(k0, y.coords);

    // free-part exponent: sum over h < i of (chi_hi + chi_hh chi_ii) a'_h a_i
    const auto& chi = g.chi().matrix();
    mpz_class exponent = 0;
    for (std::size_t h = 0; h < k0.free_rank; ++h) {
        const mpz_class& yh = y.coords.free_coords[h];
        if (yh == 0) continue;
        for (std::size_t i = h + 1; i < k0.free_rank; ++i)
            exponent += (chi.at(h, i) + chi.at(h, h) * chi.at(i, i)) * yh * x.coords.free_coords[i];
    }
    int sign = parity_sign(exponent) * x.sign * y.sign;

    // 2-primary carry gamma and its Xi value
    for (std::size_t j = 0; j < k0.two_primary.size(); ++j)
        if (x.coords.two_coords[j] + y.coords.two_coords[j] >= two_power(k0.two_primary[j]))
            sign *= g.xi_generator_signs()[j];

    return OmegaElement{fgab::add(k0, x.coords, y.coords), sign};
}

OmegaElement inverse(const OmegaGroup& g, const OmegaElement& x) {
    OmegaElement candidate{fgab::negate(g.k0(), x.coords), +1};
    OmegaElement product = multiply(g, x, candidate);
    // product = (0, f); flipping the candidate sign by f inverts exactly
    candidate.sign = product.sign;
    return candidate;
}

OmegaElement element_power(const OmegaGroup& g, const OmegaElement& x, long k) {
    OmegaElement base = k >= 0 ? x : inverse(g, x);
    long reps = k >= 0 ? k : -k;
    OmegaElement acc = identity_element(g);
    for (long i = 0; i < reps; ++i) acc = multiply(g, acc, base);
    return acc;
}

int swap_sign(const index::EulerForm& form, const fgab::GroupElement& alpha,
              const fgab::GroupElement& beta, SwapFlavor flavor) {
    mpz_class aa = form.evaluate(alpha, alpha);
    mpz_class bb = form.evaluate(beta, beta);
    if (flavor == SwapFlavor::TorsorLambda) return parity_sign(aa * bb);
    return parity_sign(form.evaluate(alpha, beta) + aa * bb);
}

int direct_sum_assoc_sign(const index::EulerForm& form, const fgab::GroupElement& alpha,
                          const fgab::GroupElement& beta, const fgab::GroupElement& gamma) {
    fgab::require_shape(form.group(), alpha);
    fgab::require_shape(form.group(), beta);
    fgab::require_shape(form.group(), gamma);
    return +1;
}

std::vector<int> xi_from_squares(
    const fgab::FgAbGroup& k0,
    const std::function<int(const fgab::GroupElement&)>& square_sign) {
    std::vector<int> signs;
    signs.reserve(k0.two_primary.size());
    auto torsion = fgab::two_torsion(k0);
    for (std::size_t j = 0; j < k0.two_primary.size(); ++j) {
        fgab::GroupElement gen = fgab::zero_element(k0);
        gen.two_coords[j] = two_power(k0.two_primary[j] - 1);
        int s = square_sign(gen);
        if (s != 1 && s != -1) throw InconsistencyError("square oracle returned a non-sign");
        signs.push_back(s);
    }
    // multiplicativity across the whole subgroup
    for (const auto& gamma : torsion) {
        int expected = 1;
        for (std::size_t j = 0; j < k0.two_primary.size(); ++j)
            if (gamma.two_coords[j] != 0) expected *= signs[j];
        if (square_sign(gamma) != expected)
            throw InconsistencyError("square oracle is not a morphism on the 2-torsion subgroup");
    }
    return signs;
}

std::pair<fgab::GroupElement, int> Trivialization::to_coords(const OmegaElement& x) const {
    return {x.coords, twist_(x.coords) * x.sign};
}

OmegaElement Trivialization::from_coords(const fgab::GroupElement& v, int sign) const {
    return OmegaElement{v, twist_(v) * sign};
}

Trivialization normal_form(const OmegaGroup& g, const std::vector<int>& eta_free,
                           const std::vector<int>& zeta_two) {
    const fgab::FgAbGroup& k0 = g.k0();
    if (eta_free.size() != k0.free_rank || zeta_two.size() != k0.two_primary.size())
        throw ShapeError("normal form needs one sign per free and per 2-primary generator");
    for (int s : eta_free)
        if (s != 1 && s != -1) throw ShapeError("generator signs must be +1 or -1");
    for (int s : zeta_two)
        if (s != 1 && s != -1) throw ShapeError("generator signs must be +1 or -1");

    // odd-torsion generator signs are forced: exactly one choice has order q_k
    std::vector<int> nu_signs;
    for (std::size_t k = 0; k < k0.odd_orders.size(); ++k) {
        fgab::GroupElement nu = fgab::zero_element(k0);
        nu.odd_coords[k] = 1;
        long q = to_long(k0.odd_orders[k], "odd torsion order");
        int chosen = 0, matches = 0;
        for (int s : {+1, -1}) {
            if (element_power(g, OmegaElement{nu, s}, q) == identity_element(g)) {
                chosen = s;
                ++matches;
            }
        }
        if (matches != 1)
            throw InconsistencyError("odd generator power condition did not pin a unique sign");
        nu_signs.push_back(chosen);
    }

    auto word_sign = [&g, eta_free, zeta_two, nu_signs](const fgab::GroupElement& v) -> int {
        const fgab::FgAbGroup& grp = g.k0();
        fgab::require_shape(grp, v);
        OmegaElement acc = identity_element(g);
        for (std::size_t i = 0; i < grp.free_rank; ++i) {
            if (v.free_coords[i] == 0) continue;
            fgab::GroupElement lambda = fgab::zero_element(grp);
            lambda.free_coords[i] = 1;
            acc = multiply(g, acc,
                           element_power(g, OmegaElement{lambda, eta_free[i]},
                                         to_long(v.free_coords[i], "free coordinate")));
        }
        for (std::size_t j = 0; j < grp.two_primary.size(); ++j) {
            if (v.two_coords[j] == 0) continue;
            fgab::GroupElement mu = fgab::zero_element(grp);
            mu.two_coords[j] = 1;
            acc = multiply(g, acc,
                           element_power(g, OmegaElement{mu, zeta_two[j]},
                                         to_long(v.two_coords[j], "2-primary coordinate")));
        }
        for (std::size_t k = 0; k < grp.odd_orders.size(); ++k) {
            if (v.odd_coords[k] == 0) continue;
            fgab::GroupElement nu = fgab::zero_element(grp);
            nu.odd_coords[k] = 1;
            acc = multiply(g, acc,
                           element_power(g, OmegaElement{nu, nu_signs[k]},
                                         to_long(v.odd_coords[k], "odd coordinate")));
        }
        // acc = (v, t); the trivialization maps (v, s) -> (v, t*s)
        return acc.sign;
    };
    return Trivialization(&g, word_sign);
}

TrivializationComparison compare_trivializations(const Trivialization& l1,
                                                 const Trivialization& l2) {
    const OmegaGroup& g = l1.group();
    const fgab::FgAbGroup& k0 = g.k0();
    if (!(l2.group().k0() == k0))
        throw ShapeError("trivializations compare over different groups");
    auto tau = [&](const fgab::GroupElement& v) -> int {
        auto [coords, s] = l2.to_coords(l1.from_coords(v, +1));
        if (!(coords == v))
            throw NonConformingError("trivialization comparison moved coordinates");
        return s;
    };

    TrivializationComparison out;
    std::vector<fgab::GroupElement> free_gens, two_gens, odd_gens;
    for (std::size_t i = 0; i < k0.free_rank; ++i) {
        fgab::GroupElement e = fgab::zero_element(k0);
        e.free_coords[i] = 1;
        out.eta.push_back(tau(e));
        free_gens.push_back(std::move(e));
    }
    for (std::size_t j = 0; j < k0.two_primary.size(); ++j) {
        fgab::GroupElement e = fgab::zero_element(k0);
        e.two_coords[j] = 1;
        out.zeta.push_back(tau(e));
        two_gens.push_back(std::move(e));
    }
    for (std::size_t k = 0; k < k0.odd_orders.size(); ++k) {
        fgab::GroupElement e = fgab::zero_element(k0);
        e.odd_coords[k] = 1;
        odd_gens.push_back(std::move(e));
    }

    auto predicted = [&out, &k0](const fgab::GroupElement& v) -> int {
        int s = 1;
        for (std::size_t i = 0; i < k0.free_rank; ++i)
            if (out.eta[i] == -1 && mpz_odd_p(v.free_coords[i].get_mpz_t())) s = -s;
        for (std::size_t j = 0; j < k0.two_primary.size(); ++j)
            if (out.zeta[j] == -1 && mpz_odd_p(v.two_coords[j].get_mpz_t())) s = -s;
        return s;
    };
    auto verify = [&](const fgab::GroupElement& v) {
        if (tau(v) != predicted(v))
            throw NonConformingError(
                "trivialization comparison is not of the generator-sign form");
    };

    // spanning set: generators, inverses, doubles, and all pairwise sums
    std::vector<fgab::GroupElement> span{fgab::zero_element(k0)};
    for (const auto& list : {free_gens, two_gens, odd_gens})
        for (const auto& e : list) {
            span.push_back(e);
            span.push_back(fgab::negate(k0, e));
            span.push_back(fgab::add(k0, e, e));
        }
    std::vector<fgab::GroupElement> gens;
    for (const auto& list : {free_gens, two_gens, odd_gens})
        gens.insert(gens.end(), list.begin(), list.end());
    for (const auto& a : gens)
        for (const auto& b : gens) span.push_back(fgab::add(k0, a, b));
    for (const auto& v : span) verify(v);
    return out;
}

} // namespace orient::omega

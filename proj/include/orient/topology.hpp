#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orient/errors.hpp"

namespace orient::topo {

class ManifoldModel;
using ModelPtr = std::shared_ptr<const ManifoldModel>;

// Exponent vector over the model's generators, e_i < nilpotence_i.
using Monomial = std::vector<int>;

struct Generator {
    std::string symbol;
    int degree;     // cohomological degree
    int nilpotence; // g^nilpotence = 0
};

// Cohomology class on a fixed model: sparse map monomial -> rational
// coefficient. Zero coefficients are never stored.
class CohClass {
public:
    CohClass() = default;
    explicit CohClass(ModelPtr model) : model_(std::move(model)) {}
    CohClass(ModelPtr model, const mpq_class& scalar);

    const ModelPtr& model() const { return model_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    mpq_class coefficient(const Monomial& m) const;
    void set(const Monomial& m, const mpq_class& c);

    CohClass operator+(const CohClass& other) const;
    CohClass operator-(const CohClass& other) const;
    CohClass operator*(const mpq_class& scalar) const;
    CohClass& operator+=(const CohClass& other);

    bool operator==(const CohClass& other) const;

    // Homogeneous piece of the given cohomological degree.
    CohClass degree_part(int degree) const;
    // Largest degree with a nonzero term, -1 for the zero class.
    int top_degree() const;
    std::string to_string() const;

private:
    void require_same_model(const CohClass& other) const;

    ModelPtr model_;
    std::map<Monomial, mpq_class> terms_;
};

// Graded-commutative product with Koszul signs and nilpotence truncation.
CohClass cup(const CohClass& a, const CohClass& b);
// Coefficient of the fundamental top monomial (0 if no top component).
mpq_class integrate(const CohClass& a);
std::pair<CohClass, mpq_class> cup_and_integrate(const CohClass& a, const CohClass& b);
// exp(a) = sum a^j / j! for a class with no degree-0 part; terminates by
// nilpotence of positive-degree classes.
CohClass exp_class(const CohClass& a);
CohClass power(const CohClass& a, unsigned k);

// Model manifold with an exact monomial-basis cohomology ring. Instances are
// immutable; build through build_model.
class ManifoldModel : public std::enable_shared_from_this<ManifoldModel> {
public:
    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    const std::vector<Generator>& generators() const { return gens_; }
    bool orientable() const { return orientable_; }
    bool spin() const { return spin_; }
    bool is_complex() const { return is_complex_; }

    const std::vector<long>& betti() const { return betti_; }
    const std::vector<long>& mod2_betti() const { return mod2_betti_; }
    const Monomial& fundamental_monomial() const { return fundamental_; }

    // Total tangent classes. total_chern is only meaningful when is_complex().
    const CohClass& total_chern() const { return total_chern_; }
    const CohClass& total_pontryagin() const { return total_pontryagin_; }
    const CohClass& euler_class() const { return euler_class_; }

    int degree_of(const Monomial& m) const;
    std::vector<Monomial> basis(int degree) const;
    std::vector<Monomial> all_monomials() const;
    CohClass zero() const;
    CohClass scalar(const mpq_class& c) const;
    // Single generator as a class.
    CohClass generator_class(std::size_t index) const;

    friend ModelPtr build_model(const std::string& descriptor);

private:
    ManifoldModel() = default;
    void finalize(); // computes betti numbers and the fundamental monomial

    std::string name_;
    int dimension_ = 0;
    std::vector<Generator> gens_;
    bool orientable_ = true, spin_ = false, is_complex_ = false;
    std::vector<long> betti_, mod2_betti_;
    Monomial fundamental_;
    CohClass total_chern_, total_pontryagin_, euler_class_;
};

// Descriptor grammar: "S<n>" (n <= 8), "CP<n>" (n <= 3), "T<n>" (n <= 8),
// or binary products joined by "x", associating left: "S2xS2xT3" is
// (S2 x S2) x T3. A "^" after the family name is accepted and ignored.
ModelPtr build_model(const std::string& descriptor);

// K-theory class on a model: rank plus Chern classes c_1..c_k, each a
// CohClass of degree 2i. Rank may be <= 0 for virtual classes.
struct KClassData {
    ModelPtr model;
    mpz_class rank;
    std::vector<CohClass> chern; // chern[i] = c_{i+1}

    // Rank-r class with vanishing Chern classes, data supplied through
    // degree n.
    static KClassData trivial(const ModelPtr& model, const mpz_class& rank);
};

void validate(const KClassData& k);

struct CharClasses {
    CohClass chern_character; // of the K-class
    CohClass a_hat;           // of the tangent bundle
    CohClass l_class;         // of the tangent bundle
};

// Chern character by Newton's identities from c_1..c_k, truncated at the
// model dimension; A-hat and L from the tangent Pontryagin classes. Throws
// IncompleteDataError if Chern data is missing in a needed degree.
CharClasses char_classes(const KClassData& k);

// Multiplicative-sequence expansion: given the total Pontryagin class of the
// model and the Taylor coefficients f_1..f_m of an even genus series
// f(y) = 1 + f_1 y + ..., returns prod_i f(y_i) with e_j(y) = p_j.
CohClass genus_class(const ModelPtr& model, const CohClass& total_pontryagin,
                     const std::vector<mpq_class>& series_tail);

// Taylor tails (f_1..f_terms) of the classical genus series, derived from
// factorial series without hand-entered constants.
std::vector<mpq_class> a_hat_series(unsigned terms);
std::vector<mpq_class> l_series(unsigned terms);
// (sqrt(y)/2)/tanh(sqrt(y)/2); the 2^(n/2)-rescaled L used by the
// signature-operator index density.
std::vector<mpq_class> l_hat_series(unsigned terms);

CohClass a_hat_class(const ModelPtr& model);
CohClass l_class(const ModelPtr& model);
CohClass l_hat_class(const ModelPtr& model);
// Todd class via exp(c_1/2) * A-hat; complex models only.
CohClass todd_class(const ModelPtr& model);

struct BettiProfile {
    mpz_class euler_characteristic;
    std::optional<mpz_class> signature; // orientable 4k-models only
    bool odd_mod2_vanishes;
};

BettiProfile betti_profile(const ModelPtr& model);

} // namespace orient::topo

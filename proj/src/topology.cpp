#include "orient/topology.hpp"

#include <algorithm>
#include <sstream>

namespace orient::topo {

CohClass::CohClass(ModelPtr model, const mpq_class& scalar) : model_(std::move(model)) {
    if (scalar != 0) terms_[Monomial(model_->generators().size(), 0)] = scalar;
}

mpq_class CohClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void CohClass::set(const Monomial& m, const mpq_class& c) {
    if (m.size() != model_->generators().size())
        throw ShapeError("monomial length does not match generator count");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0 || m[i] >= model_->generators()[i].nilpotence)
            throw ShapeError("monomial exponent out of range for generator " +
                             model_->generators()[i].symbol);
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void CohClass::require_same_model(const CohClass& other) const {
    if (model_.get() != other.model_.get())
        throw ShapeError("cohomology classes live on different models");
}

CohClass CohClass::operator+(const CohClass& other) const {
    CohClass out = *this;
    out += other;
    return out;
}

CohClass& CohClass::operator+=(const CohClass& other) {
    require_same_model(other);
    for (const auto& [m, c] : other.terms_) {
        mpq_class sum = coefficient(m) + c;
        if (sum == 0)
            terms_.erase(m);
        else
            terms_[m] = sum;
    }
    return *this;
}

CohClass CohClass::operator-(const CohClass& other) const {
    return *this + other * mpq_class(-1);
}

CohClass CohClass::operator*(const mpq_class& scalar) const {
    CohClass out(model_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * scalar;
    return out;
}

bool CohClass::operator==(const CohClass& other) const {
    return model_.get() == other.model_.get() && terms_ == other.terms_;
}

CohClass CohClass::degree_part(int degree) const {
    CohClass out(model_);
    for (const auto& [m, c] : terms_)
        if (model_->degree_of(m) == degree) out.terms_[m] = c;
    return out;
}

int CohClass::top_degree() const {
    int top = -1;
    for (const auto& [m, c] : terms_) top = std::max(top, model_->degree_of(m));
    return top;
}

std::string CohClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << model_->generators()[i].symbol;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

// Koszul sign for merging two canonical monomials: each odd-degree factor of
// b moves left past the odd-degree factors of a with larger generator index.
int koszul_sign(const std::vector<Generator>& gens, const Monomial& a, const Monomial& b) {
    long swaps = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (b[i] == 0 || gens[i].degree % 2 == 0) continue;
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[j].degree % 2 != 0) swaps += static_cast<long>(b[i]) * a[j];
    }
    return swaps % 2 == 0 ? 1 : -1;
}

} // namespace

CohClass cup(const CohClass& a, const CohClass& b) {
    if (!a.model() || !b.model()) throw ShapeError("cup product on uninitialized class");
    if (a.model().get() != b.model().get())
        throw ShapeError("cup product across different models");
    const auto& gens = a.model()->generators();
    CohClass out(a.model());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m(gens.size());
            bool dead = false;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                m[i] = ma[i] + mb[i];
                if (m[i] >= gens[i].nilpotence) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            mpq_class term = ca * cb * koszul_sign(gens, ma, mb);
            mpq_class sum = out.coefficient(m) + term;
            out.set(m, sum);
        }
    return out;
}

mpq_class integrate(const CohClass& a) {
    return a.coefficient(a.model()->fundamental_monomial());
}

std::pair<CohClass, mpq_class> cup_and_integrate(const CohClass& a, const CohClass& b) {
    CohClass product = cup(a, b);
    return {product, integrate(product)};
}

CohClass exp_class(const CohClass& a) {
    if (!a.degree_part(0).is_zero())
        throw ShapeError("exp of a class with a degree-0 part");
    CohClass result = a.model()->scalar(1);
    CohClass term = a.model()->scalar(1);
    for (unsigned j = 1; !term.is_zero() && j <= unsigned(a.model()->dimension()) + 1; ++j) {
        term = cup(term, a) * mpq_class(mpz_class(1), mpz_class(j));
        result += term;
    }
    return result;
}

CohClass power(const CohClass& a, unsigned k) {
    CohClass result = a.model()->scalar(1);
    for (unsigned i = 0; i < k; ++i) result = cup(result, a);
    return result;
}

int ManifoldModel::degree_of(const Monomial& m) const {
    int deg = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) deg += m[i] * gens_[i].degree;
    return deg;
}

std::vector<Monomial> ManifoldModel::all_monomials() const {
    std::vector<Monomial> out{Monomial(gens_.size(), 0)};
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        std::vector<Monomial> next;
        next.reserve(out.size() * gens_[i].nilpotence);
        for (const auto& m : out)
            for (int e = 0; e < gens_[i].nilpotence; ++e) {
                Monomial copy = m;
                copy[i] = e;
                next.push_back(std::move(copy));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> ManifoldModel::basis(int degree) const {
    std::vector<Monomial> out;
    for (auto& m : all_monomials())
        if (degree_of(m) == degree) out.push_back(m);
    return out;
}

CohClass ManifoldModel::zero() const { return CohClass(shared_from_this()); }

CohClass ManifoldModel::scalar(const mpq_class& c) const {
    return CohClass(shared_from_this(), c);
}

CohClass ManifoldModel::generator_class(std::size_t index) const {
    CohClass out(shared_from_this());
    Monomial m(gens_.size(), 0);
    m[index] = 1;
    out.set(m, 1);
    return out;
}

void ManifoldModel::finalize() {
    betti_.assign(dimension_ + 1, 0);
    for (const auto& m : all_monomials()) {
        int d = degree_of(m);
        if (d > dimension_)
            throw InconsistencyError("monomial basis exceeds model dimension");
        ++betti_[d];
    }
    mod2_betti_ = betti_; // integral cohomology of every library model is free
    fundamental_.assign(gens_.size(), 0);
    for (std::size_t i = 0; i < gens_.size(); ++i) fundamental_[i] = gens_[i].nilpotence - 1;
    if (degree_of(fundamental_) != dimension_)
        throw InconsistencyError("fundamental monomial degree mismatch");
}

namespace {

// Negates the degree 2 mod 4 parts; total Chern class of the conjugate bundle.
CohClass conj_complex(const CohClass& c) {
    CohClass out(c.model());
    for (const auto& [m, coef] : c.terms()) {
        int d = c.model()->degree_of(m);
        out.set(m, d % 4 == 2 ? -coef : coef);
    }
    return out;
}

// 1 - p_1 + p_2 - ... = conj(c) * c, so p_k = (-1)^k [conj(c) * c]_{4k}.
CohClass pontryagin_from_chern(const CohClass& total_chern) {
    const ModelPtr& model = total_chern.model();
    CohClass q = cup(conj_complex(total_chern), total_chern);
    CohClass p = model->zero();
    for (int k = 0; 4 * k <= model->dimension(); ++k)
        p += q.degree_part(4 * k) * mpq_class(k % 2 == 0 ? 1 : -1);
    return p;
}

CohClass embed(const CohClass& c, const ModelPtr& target, std::size_t offset) {
    CohClass out(target);
    const std::size_t total = target->generators().size();
    for (const auto& [m, coef] : c.terms()) {
        Monomial big(total, 0);
        for (std::size_t i = 0; i < m.size(); ++i) big[offset + i] = m[i];
        out.set(big, coef);
    }
    return out;
}

struct FactorSpec {
    char family; // 'S', 'C' (CP), 'T'
    int n;
};

FactorSpec parse_factor(const std::string& tok) {
    std::string t = tok;
    t.erase(std::remove(t.begin(), t.end(), '^'), t.end());
    auto fail = [&] { throw UnsupportedModelError("unsupported model descriptor '" + tok + "'"); };
    std::string family;
    std::size_t i = 0;
    while (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) family += t[i++];
    if (i >= t.size()) fail();
    int n = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail();
        n = n * 10 + (t[i] - '0');
    }
    if (family == "S" && n >= 1 && n <= 8) return {'S', n};
    if (family == "CP" && n >= 1 && n <= 3) return {'C', n};
    if (family == "T" && n >= 1 && n <= 8) return {'T', n};
    fail();
    return {};
}

} // namespace

ModelPtr build_model(const std::string& descriptor) {
    std::string d;
    for (char c : descriptor)
        if (!std::isspace(static_cast<unsigned char>(c))) d += c;
    if (d.empty()) throw UnsupportedModelError("empty model descriptor");

    std::vector<std::string> tokens;
    std::string cur;
    for (char c : d) {
        if (c == 'x') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);

    auto build_one = [](const std::string& tok) -> std::shared_ptr<ManifoldModel> {
        FactorSpec f = parse_factor(tok);
        std::shared_ptr<ManifoldModel> m(new ManifoldModel());
        if (f.family == 'S') {
            m->name_ = "S" + std::to_string(f.n);
            m->dimension_ = f.n;
            m->gens_ = {{"y", f.n, 2}};
            m->spin_ = true;
            m->is_complex_ = false;
            m->finalize();
            m->total_pontryagin_ = m->scalar(1);
            m->total_chern_ = m->zero();
            m->euler_class_ = m->generator_class(0) * mpq_class(f.n % 2 == 0 ? 2 : 0);
        } else if (f.family == 'C') {
            m->name_ = "CP" + std::to_string(f.n);
            m->dimension_ = 2 * f.n;
            m->gens_ = {{"x", 2, f.n + 1}};
            m->spin_ = (f.n % 2 == 1);
            m->is_complex_ = true;
            m->finalize();
            CohClass one_plus_x = m->scalar(1) + m->generator_class(0);
            m->total_chern_ = power(one_plus_x, unsigned(f.n + 1));
            m->total_pontryagin_ = pontryagin_from_chern(m->total_chern_);
            m->euler_class_ = m->total_chern_.degree_part(m->dimension_);
        } else {
            m->name_ = "T" + std::to_string(f.n);
            m->dimension_ = f.n;
            m->gens_.reserve(std::size_t(f.n));
            for (int i = 1; i <= f.n; ++i) m->gens_.push_back({"e" + std::to_string(i), 1, 2});
            m->spin_ = true;
            m->is_complex_ = (f.n % 2 == 0); // complex torus, trivial tangent
            m->finalize();
            m->total_pontryagin_ = m->scalar(1);
            m->total_chern_ = m->is_complex_ ? m->scalar(1) : m->zero();
            m->euler_class_ = m->zero();
        }
        return m;
    };

    auto make_product = [](const ModelPtr& a, const ModelPtr& b) -> ModelPtr {
        std::shared_ptr<ManifoldModel> m(new ManifoldModel());
        m->name_ = a->name() + "x" + b->name();
        m->dimension_ = a->dimension() + b->dimension();
        m->gens_ = a->generators();
        for (const auto& g : b->generators()) m->gens_.push_back(g);
        // canonical symbols g1..gk; base symbols may collide across factors
        for (std::size_t i = 0; i < m->gens_.size(); ++i)
            m->gens_[i].symbol = "g" + std::to_string(i + 1);
        m->spin_ = a->spin() && b->spin();
        m->orientable_ = a->orientable() && b->orientable();
        m->is_complex_ = a->is_complex() && b->is_complex();
        m->finalize();

        const std::size_t off = a->generators().size();
        m->total_pontryagin_ =
            cup(embed(a->total_pontryagin(), m, 0), embed(b->total_pontryagin(), m, off));
        m->euler_class_ = cup(embed(a->euler_class(), m, 0), embed(b->euler_class(), m, off));
        m->total_chern_ =
            m->is_complex_ ? cup(embed(a->total_chern(), m, 0), embed(b->total_chern(), m, off))
                           : m->zero();
        return m;
    };

    ModelPtr model = build_one(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); ++i)
        model = make_product(model, build_one(tokens[i]));
    return model;
}

KClassData KClassData::trivial(const ModelPtr& model, const mpz_class& rank) {
    KClassData k{model, rank, {}};
    for (int i = 1; 2 * i <= model->dimension(); ++i) k.chern.push_back(model->zero());
    return k;
}

void validate(const KClassData& k) {
    if (!k.model) throw ShapeError("K-class without a model");
    for (std::size_t i = 0; i < k.chern.size(); ++i) {
        const CohClass& c = k.chern[i];
        if (c.model() && c.model().get() != k.model.get())
            throw ShapeError("Chern class on a different model");
        int expected = 2 * int(i + 1);
        for (const auto& [m, coef] : c.terms())
            if (k.model->degree_of(m) != expected)
                throw ShapeError("c_" + std::to_string(i + 1) + " must be homogeneous of degree " +
                                 std::to_string(expected));
    }
}

namespace {

// Rational power series in one variable, coefficients by ascending power,
// truncated to a fixed number of terms.
using Series = std::vector<mpq_class>;

Series series_mul(const Series& a, const Series& b, std::size_t terms) {
    Series out(terms, mpq_class(0));
    for (std::size_t i = 0; i < std::min(a.size(), terms); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < terms && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_inverse(const Series& a, std::size_t terms) {
    if (a.empty() || a[0] != 1)
        throw InconsistencyError("series inversion requires unit constant term");
    Series out(terms, mpq_class(0));
    out[0] = 1;
    for (std::size_t k = 1; k < terms; ++k) {
        mpq_class acc = 0;
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) acc += a[i] * out[k - i];
        out[k] = -acc;
    }
    return out;
}

Series series_log(const Series& a, std::size_t terms) {
    // log(1+u) = u - u^2/2 + u^3/3 - ...
    Series u = a;
    u.resize(terms, mpq_class(0));
    u[0] = 0;
    Series out(terms, mpq_class(0));
    Series upow = u;
    for (std::size_t k = 1; k < terms; ++k) {
        mpq_class inv_k(1);
        inv_k /= mpq_class(long(k));
        for (std::size_t i = 0; i < terms; ++i)
            out[i] += (k % 2 == 1 ? inv_k : -inv_k) * upow[i];
        upow = series_mul(upow, u, terms);
    }
    return out;
}

mpq_class factorial_inv(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return mpq_class(mpz_class(1), f);
}

mpq_class pow4_inv(unsigned k) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 4, k);
    return mpq_class(mpz_class(1), f);
}

std::vector<mpq_class> series_tail(const Series& f, unsigned terms) {
    std::vector<mpq_class> tail;
    for (unsigned k = 1; k <= terms; ++k) tail.push_back(k < f.size() ? f[k] : mpq_class(0));
    return tail;
}

} // namespace

std::vector<mpq_class> a_hat_series(unsigned terms) {
    // sinh(z)/z at z = sqrt(y)/2: sum y^k / (4^k (2k+1)!); A-hat is its inverse
    std::size_t len = terms + 1;
    Series h(len);
    for (unsigned k = 0; k < len; ++k) h[k] = pow4_inv(k) * factorial_inv(2 * k + 1);
    return series_tail(series_inverse(h, len), terms);
}

std::vector<mpq_class> l_series(unsigned terms) {
    // sqrt(y)/tanh(sqrt(y)) = cosh(sqrt y)/(sinh(sqrt y)/sqrt y)
    std::size_t len = terms + 1;
    Series num(len), den(len);
    for (unsigned k = 0; k < len; ++k) {
        num[k] = factorial_inv(2 * k);
        den[k] = factorial_inv(2 * k + 1);
    }
    return series_tail(series_mul(num, series_inverse(den, len), len), terms);
}

std::vector<mpq_class> l_hat_series(unsigned terms) {
    // (sqrt(y)/2)/tanh(sqrt(y)/2)
    std::size_t len = terms + 1;
    Series num(len), den(len);
    for (unsigned k = 0; k < len; ++k) {
        num[k] = pow4_inv(k) * factorial_inv(2 * k);
        den[k] = pow4_inv(k) * factorial_inv(2 * k + 1);
    }
    return series_tail(series_mul(num, series_inverse(den, len), len), terms);
}

CohClass genus_class(const ModelPtr& model, const CohClass& total_pontryagin,
                     const std::vector<mpq_class>& series_tail_coeffs) {
    const unsigned max_k = unsigned(model->dimension() / 4);
    // g = log f as a series in y
    Series f(series_tail_coeffs.size() + 1, mpq_class(0));
    f[0] = 1;
    for (std::size_t i = 0; i < series_tail_coeffs.size(); ++i) f[i + 1] = series_tail_coeffs[i];
    Series g = series_log(f, max_k + 1);

    // power sums of the Pontryagin roots via Newton's identities
    std::vector<CohClass> p(max_k + 1, model->zero());
    for (unsigned k = 1; k <= max_k; ++k) p[k] = total_pontryagin.degree_part(int(4 * k));
    std::vector<CohClass> s(max_k + 1, model->zero());
    for (unsigned k = 1; k <= max_k; ++k) {
        CohClass acc = p[k] * mpq_class(k % 2 == 1 ? long(k) : -long(k));
        for (unsigned i = 1; i < k; ++i)
            acc += cup(p[i], s[k - i]) * mpq_class(i % 2 == 1 ? 1 : -1);
        s[k] = acc;
    }

    CohClass log_total = model->zero();
    for (unsigned k = 1; k <= max_k && k < g.size(); ++k) log_total += s[k] * g[k];
    return exp_class(log_total);
}

CohClass a_hat_class(const ModelPtr& model) {
    return genus_class(model, model->total_pontryagin(), a_hat_series(unsigned(model->dimension() / 4)));
}

CohClass l_class(const ModelPtr& model) {
    return genus_class(model, model->total_pontryagin(), l_series(unsigned(model->dimension() / 4)));
}

CohClass l_hat_class(const ModelPtr& model) {
    return genus_class(model, model->total_pontryagin(), l_hat_series(unsigned(model->dimension() / 4)));
}

CohClass todd_class(const ModelPtr& model) {
    if (!model->is_complex())
        throw AdmissibilityError("Todd class requires a complex model");
    CohClass half_c1 = model->total_chern().degree_part(2) * mpq_class(1, 2);
    return cup(exp_class(half_c1), a_hat_class(model));
}

CharClasses char_classes(const KClassData& k) {
    validate(k);
    const ModelPtr& model = k.model;
    const unsigned needed = unsigned(model->dimension() / 2);
    if (k.chern.size() < needed)
        throw IncompleteDataError("K-class supplies c_1..c_" + std::to_string(k.chern.size()) +
                                  " but degree " + std::to_string(model->dimension()) +
                                  " needs c_" + std::to_string(needed));

    auto c = [&](unsigned i) -> CohClass {
        if (i == 0) return model->scalar(1);
        if (i <= k.chern.size() && k.chern[i - 1].model()) return k.chern[i - 1];
        return model->zero();
    };

    // Newton: s_k = sum_{i<k} (-1)^{i-1} c_i s_{k-i} + (-1)^{k-1} k c_k
    std::vector<CohClass> s(needed + 1, model->zero());
    CohClass ch = model->scalar(mpq_class(k.rank));
    mpq_class kfact = 1;
    for (unsigned n = 1; n <= needed; ++n) {
        CohClass acc = c(n) * mpq_class(n % 2 == 1 ? long(n) : -long(n));
        for (unsigned i = 1; i < n; ++i)
            acc += cup(c(i), s[n - i]) * mpq_class(i % 2 == 1 ? 1 : -1);
        s[n] = acc;
        kfact *= mpq_class(long(n));
        ch += s[n] * (mpq_class(1) / kfact);
    }
    return {ch, a_hat_class(model), l_class(model)};
}

BettiProfile betti_profile(const ModelPtr& model) {
    BettiProfile out{0, std::nullopt, true};
    const auto& b = model->betti();
    for (std::size_t i = 0; i < b.size(); ++i)
        out.euler_characteristic += (i % 2 == 0 ? b[i] : -b[i]);
    for (std::size_t i = 1; i < model->mod2_betti().size(); i += 2)
        if (model->mod2_betti()[i] != 0) out.odd_mod2_vanishes = false;
    if (model->orientable() && model->dimension() % 4 == 0) {
        mpq_class sig = integrate(l_class(model));
        if (sig.get_den() != 1)
            throw InconsistencyError("L-genus integral is not an integer: " + sig.get_str());
        out.signature = sig.get_num();
    }
    return out;
}

} // namespace orient::topo

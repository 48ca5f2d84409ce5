#include "orient/fgab.hpp"

#include <algorithm>
#include <sstream>

namespace orient::fgab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ShapeError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not equal rows*cols = " + std::to_string(rows_ * cols_));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const mpz_class& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const mpz_class& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(cols_) +
                         " vs " + std::to_string(other.rows_));
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

mpz_class IntMatrix::det_cofactor() const {
    if (rows_ != cols_)
        throw ShapeError("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    if (rows_ == 1) return at(0, 0);
    mpz_class det = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (at(0, j) == 0) continue;
        IntMatrix minor(rows_ - 1, cols_ - 1);
        for (std::size_t r = 1; r < rows_; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        mpz_class term = at(0, j) * minor.det_cofactor();
        if (j % 2 == 0) det += term; else det -= term;
    }
    return det;
}

mpz_class FgAbGroup::torsion_order() const {
    mpz_class order = 1;
    for (unsigned p : two_primary) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), 2, p);
        order *= f;
    }
    for (const auto& q : odd_orders) order *= q;
    return order;
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " x ";
        first = false;
    };
    if (free_rank == 1) { sep(); os << "Z"; }
    else if (free_rank > 1) { sep(); os << "Z^" << free_rank; }
    for (unsigned p : two_primary) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), 2, p);
        sep();
        os << "Z_" << f.get_str();
    }
    for (const auto& q : odd_orders) { sep(); os << "Z_" << q.get_str(); }
    return os.str();
}

bool GroupElement::is_zero() const {
    auto all_zero = [](const std::vector<mpz_class>& v) {
        return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
    };
    return all_zero(free_coords) && all_zero(two_coords) && all_zero(odd_coords);
}

namespace {

mpz_class two_power(unsigned p) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 2, p);
    return f;
}

mpz_class reduce_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); // nonnegative remainder
    return r;
}

} // namespace

GroupElement make_element(const FgAbGroup& g, std::vector<mpz_class> free_coords,
                          std::vector<mpz_class> two_coords,
                          std::vector<mpz_class> odd_coords) {
    if (two_coords.empty()) two_coords.assign(g.two_primary.size(), mpz_class(0));
    if (odd_coords.empty()) odd_coords.assign(g.odd_orders.size(), mpz_class(0));
    GroupElement e{std::move(free_coords), std::move(two_coords), std::move(odd_coords)};
    require_shape(g, e);
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        e.two_coords[j] = reduce_mod(e.two_coords[j], two_power(g.two_primary[j]));
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k)
        e.odd_coords[k] = reduce_mod(e.odd_coords[k], g.odd_orders[k]);
    return e;
}

GroupElement zero_element(const FgAbGroup& g) {
    return GroupElement{std::vector<mpz_class>(g.free_rank, mpz_class(0)),
                        std::vector<mpz_class>(g.two_primary.size(), mpz_class(0)),
                        std::vector<mpz_class>(g.odd_orders.size(), mpz_class(0))};
}

void require_shape(const FgAbGroup& g, const GroupElement& x) {
    if (x.free_coords.size() != g.free_rank || x.two_coords.size() != g.two_primary.size() ||
        x.odd_coords.size() != g.odd_orders.size())
        throw ShapeError("element coordinate shape (" + std::to_string(x.free_coords.size()) +
                         "," + std::to_string(x.two_coords.size()) + "," +
                         std::to_string(x.odd_coords.size()) + ") does not match group " +
                         g.to_string());
}

void require_element(const FgAbGroup& g, const GroupElement& x) {
    require_shape(g, x);
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        if (x.two_coords[j] < 0 || x.two_coords[j] >= two_power(g.two_primary[j]))
            throw ShapeError("2-primary residue out of canonical range");
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k)
        if (x.odd_coords[k] < 0 || x.odd_coords[k] >= g.odd_orders[k])
            throw ShapeError("odd residue out of canonical range");
}

GroupElement add(const FgAbGroup& g, const GroupElement& x, const GroupElement& y) {
    require_element(g, x);
    require_element(g, y);
    GroupElement out = zero_element(g);
    for (std::size_t i = 0; i < g.free_rank; ++i)
        out.free_coords[i] = x.free_coords[i] + y.free_coords[i];
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        out.two_coords[j] =
            reduce_mod(x.two_coords[j] + y.two_coords[j], two_power(g.two_primary[j]));
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k)
        out.odd_coords[k] = reduce_mod(x.odd_coords[k] + y.odd_coords[k], g.odd_orders[k]);
    return out;
}

GroupElement negate(const FgAbGroup& g, const GroupElement& x) {
    require_element(g, x);
    GroupElement out = zero_element(g);
    for (std::size_t i = 0; i < g.free_rank; ++i) out.free_coords[i] = -x.free_coords[i];
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        out.two_coords[j] = reduce_mod(-x.two_coords[j], two_power(g.two_primary[j]));
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k)
        out.odd_coords[k] = reduce_mod(-x.odd_coords[k], g.odd_orders[k]);
    return out;
}

GroupElement scale(const FgAbGroup& g, const mpz_class& c, const GroupElement& x) {
    require_element(g, x);
    GroupElement out = zero_element(g);
    for (std::size_t i = 0; i < g.free_rank; ++i) out.free_coords[i] = c * x.free_coords[i];
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        out.two_coords[j] = reduce_mod(c * x.two_coords[j], two_power(g.two_primary[j]));
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k)
        out.odd_coords[k] = reduce_mod(c * x.odd_coords[k], g.odd_orders[k]);
    return out;
}

namespace {

// Splits each invariant factor d > 1 into 2-power and odd prime-power parts
// by trial division. Orders are desk-scale.
void split_invariant_factor(const mpz_class& d, std::vector<unsigned>& two_primary,
                            std::vector<mpz_class>& odd_orders) {
    mpz_class rest = d;
    unsigned p2 = 0;
    while (mpz_even_p(rest.get_mpz_t())) {
        rest /= 2;
        ++p2;
    }
    if (p2 > 0) two_primary.push_back(p2);
    mpz_class f = 3;
    while (f * f <= rest) {
        if (rest % f == 0) {
            mpz_class power = 1;
            while (rest % f == 0) {
                rest /= f;
                power *= f;
            }
            odd_orders.push_back(power);
        }
        f += 2;
    }
    if (rest > 1) odd_orders.push_back(rest);
}

} // namespace

SnfResult snf_decompose(const IntMatrix& presentation) {
    const std::size_t m = presentation.rows(), n = presentation.cols();
    SnfResult res{presentation, IntMatrix::identity(m), IntMatrix::identity(n), {}};
    IntMatrix& s = res.snf;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t rank_bound = std::min(m, n);
    std::size_t t = 0;
    for (; t < rank_bound; ++t) {
        for (;;) {
            // smallest nonzero pivot in the trailing submatrix, to control growth
            bool found = false;
            std::size_t pi = t, pj = t;
            mpz_class best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s.at(i, j) == 0) continue;
                    mpz_class a = abs(s.at(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done; // trailing submatrix is zero

            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(i, t).get_mpz_t(), s.at(t, t).get_mpz_t());
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(t, j).get_mpz_t(), s.at(t, t).get_mpz_t());
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue; // smaller remainders appeared, re-pivot

            // divisibility: fold in any trailing entry the pivot does not divide
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
done:

    FgAbGroup& g = res.group;
    std::size_t nonzero_diag = 0;
    for (std::size_t i = 0; i < rank_bound; ++i) {
        const mpz_class& d = s.at(i, i);
        if (d == 0) continue;
        ++nonzero_diag;
        if (d > 1) split_invariant_factor(d, g.two_primary, g.odd_orders);
    }
    g.free_rank = m - nonzero_diag;
    std::sort(g.two_primary.begin(), g.two_primary.end());
    std::sort(g.odd_orders.begin(), g.odd_orders.end());
    return res;
}

std::vector<GroupElement> two_torsion(const FgAbGroup& g) {
    const std::size_t count = g.two_primary.size();
    if (count >= 8 * sizeof(std::size_t))
        throw RangeError("2-torsion subgroup too large to enumerate");
    std::vector<GroupElement> out;
    out.reserve(std::size_t(1) << count);
    for (std::size_t mask = 0; mask < (std::size_t(1) << count); ++mask) {
        GroupElement e = zero_element(g);
        for (std::size_t j = 0; j < count; ++j)
            if (mask & (std::size_t(1) << j)) e.two_coords[j] = two_power(g.two_primary[j] - 1);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<GroupElement> enumerate_elements(const FgAbGroup& g, std::size_t max_order) {
    if (g.free_rank > 0) throw RangeError("cannot enumerate an infinite group");
    mpz_class order = g.torsion_order();
    if (order > static_cast<unsigned long>(max_order))
        throw RangeError("group order " + order.get_str() + " exceeds enumeration bound");
    std::vector<GroupElement> out{zero_element(g)};
    auto extend = [&out](std::size_t coord_index, bool two_part, const mpz_class& modulus) {
        std::vector<GroupElement> next;
        next.reserve(out.size() * mpz_get_ui(modulus.get_mpz_t()));
        for (const auto& e : out)
            for (mpz_class r = 0; r < modulus; ++r) {
                GroupElement copy = e;
                (two_part ? copy.two_coords : copy.odd_coords)[coord_index] = r;
                next.push_back(std::move(copy));
            }
        out = std::move(next);
    };
    for (std::size_t j = 0; j < g.two_primary.size(); ++j)
        extend(j, true, two_power(g.two_primary[j]));
    for (std::size_t k = 0; k < g.odd_orders.size(); ++k) extend(k, false, g.odd_orders[k]);
    return out;
}

} // namespace orient::fgab

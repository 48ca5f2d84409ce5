#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orient/errors.hpp"

namespace orient::fgab {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<mpz_class>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<mpz_class>& entries() const { return entries_; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const mpz_class& c);
    // col i += c * col j
    void add_col_multiple(std::size_t i, std::size_t j, const mpz_class& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    IntMatrix multiply(const IntMatrix& other) const;
    // Determinant by cofactor expansion; square matrices only. Exponential in
    // size, intended as an independent cross-check at small sizes.
    mpz_class det_cofactor() const;

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

// Finitely generated abelian group Z^r x prod Z_{2^{p_j}} x prod Z_{q_k},
// with the q_k odd and > 1. Factor lists are sorted ascending.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<unsigned> two_primary; // exponents p_j >= 1
    std::vector<mpz_class> odd_orders; // odd q_k > 1

    bool operator==(const FgAbGroup& other) const = default;

    bool is_trivial() const {
        return free_rank == 0 && two_primary.empty() && odd_orders.empty();
    }
    // Torsion subgroup order (1 for free groups).
    mpz_class torsion_order() const;
    std::string to_string() const; // e.g. "Z^2 x Z_4 x Z_3"
};

// Element of an FgAbGroup in coordinates: free part over Z, torsion residues
// in canonical range [0, modulus).
struct GroupElement {
    std::vector<mpz_class> free_coords;
    std::vector<mpz_class> two_coords;
    std::vector<mpz_class> odd_coords;

    bool operator==(const GroupElement& other) const = default;
    bool is_zero() const;
};

// Builds an element, reducing torsion coordinates into canonical range.
GroupElement make_element(const FgAbGroup& g, std::vector<mpz_class> free_coords,
                          std::vector<mpz_class> two_coords = {},
                          std::vector<mpz_class> odd_coords = {});
GroupElement zero_element(const FgAbGroup& g);

// Throws ShapeError unless x has the coordinate shape of g.
void require_shape(const FgAbGroup& g, const GroupElement& x);
// Shape plus canonical residue ranges; operations assume this invariant.
void require_element(const FgAbGroup& g, const GroupElement& x);

GroupElement add(const FgAbGroup& g, const GroupElement& x, const GroupElement& y);
GroupElement negate(const FgAbGroup& g, const GroupElement& x);
GroupElement scale(const FgAbGroup& g, const mpz_class& c, const GroupElement& x);

struct SnfResult {
    IntMatrix snf; // U * input * V, diagonal with divisibility chain
    IntMatrix u;   // unimodular row transform
    IntMatrix v;   // unimodular column transform
    FgAbGroup group; // cokernel of the presentation, primary-decomposed
};

// Smith normal form by integer Gaussian elimination with smallest-pivot
// selection. Total on any integer matrix; the group is the cokernel of the
// presentation map Z^cols -> Z^rows.
SnfResult snf_decompose(const IntMatrix& presentation);

// All elements gamma with 2*gamma = 0; exactly 2^|two_primary| of them,
// enumerated with bit j of the counter selecting b_j = 2^(p_j - 1).
std::vector<GroupElement> two_torsion(const FgAbGroup& g);

// Enumerates every element of a finite group (throws RangeError if the group
// is infinite or has order > max_order). Test and CLI helper.
std::vector<GroupElement> enumerate_elements(const FgAbGroup& g, std::size_t max_order);

} // namespace orient::fgab

#pragma once

// Shapes of standard monomials, the polynomial tableau count W_n and the
// shape-level membership criteria for powers of determinantal ideals.

#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/problem.hpp"

namespace detmult {

/// Row lengths a_1 >= ... >= a_p >= 1 of a Young diagram. Parts are sorted
/// on construction; zero or negative parts are rejected.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    long boxes() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

/// (r_1, ..., r_m): r_i rows of length exactly i, for diagrams whose rows are
/// at most m long.
class RowCounts {
public:
    explicit RowCounts(std::vector<long> counts);
    /// Throws DomainError if a part of `s` exceeds m.
    static RowCounts from_shape(const Shape& s, int m);

    int m() const { return static_cast<int>(r_.size()); }
    /// r_i, 1-based.
    long r(int i) const { return r_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<long>& counts() const { return r_; }
    /// B_i = r_m + r_{m-1} + ... + r_{m-i+1}, for i = 1..m.
    long B(int i) const;
    long rows() const;
    long boxes() const;

    Shape to_shape() const;

    friend bool operator==(const RowCounts&, const RowCounts&) = default;

private:
    std::vector<long> r_;
};

/// Number of standard tableaux on {1..n} (rows strictly increasing, columns
/// weakly increasing) of the shape encoded by `rc`, from the closed product
/// formula in the B_i. Throws DomainError if n < rc.m().
Integer W(int n, const RowCounts& rc);

/// Exhaustive count of the same quantity; refuses more than 16 boxes or an
/// alphabet larger than 8.
Integer count_tableaux_bruteforce(const Shape& s, int n);

/// Number of standard monomials of the given shape: pairs of tableaux for a
/// generic matrix, doubled rows for a symmetric matrix, doubled row lengths
/// for pfaffians. Throws DomainError if a part exceeds the kind's bound.
Integer standard_monomial_count(const MatrixKind& kind, const RowCounts& rc);

/// sum_i max(0, a_i - t + 1) >= r with all parts within the kind's bound.
bool in_symbolic_power(const Shape& s, int t, long r, const MatrixKind& kind);

/// Membership in the integral closure of the s_pow-th power of I_t, as an
/// intersection of symbolic powers of the I_j.
bool in_closure_power(const Shape& s, int t, long s_pow, const MatrixKind& kind);

enum class Layer { j_layer, eps_layer };

/// eps_layer: the monomial lies in the saturation of the closure of
/// I_t^{s+1} but not in that closure. j_layer additionally requires
/// membership in the closure of I_t^s. Conditions are stated on the reduced
/// parts (before doubling for the square kinds).
bool in_diagram_layer(const Shape& s, int t, long s_pow, Layer layer, const MatrixKind& kind);

/// Same criterion for a shape given by row counts bounded by the kind.
bool in_diagram_layer(const RowCounts& rc, int t, long s_pow, Layer layer);

}  // namespace detmult

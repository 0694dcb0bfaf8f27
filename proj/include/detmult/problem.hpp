#pragma once

#include <string>
#include <string_view>

namespace detmult {

/// Which family of matrices of indeterminates the ideal comes from.
enum class KindType { generic, symmetric, pfaffian };

std::string_view to_string(KindType k);
/// Accepts "generic", "symmetric", "pfaffian"; throws DomainError otherwise.
KindType parse_kind(std::string_view name);

/// A generic m x n matrix (m <= n), a generic symmetric n x n matrix or a
/// generic skew-symmetric n x n matrix. For the square kinds `m` mirrors `n`.
struct MatrixKind {
    KindType type = KindType::generic;
    int m = 1;
    int n = 1;

    static MatrixKind generic(int m, int n);
    static MatrixKind symmetric(int n);
    static MatrixKind pfaffian(int n);

    /// Largest admissible row length of a shape: m, n or floor(n/2).
    int part_bound() const;
    /// Krull dimension of the polynomial ring: mn, n(n+1)/2 or n(n-1)/2.
    int ring_dimension() const;

    std::string describe() const;

    friend bool operator==(const MatrixKind&, const MatrixKind&) = default;
};

/// The ideal I_t of t-minors (or 2t-pfaffians) of a matrix kind.
struct ProblemSpec {
    MatrixKind kind;
    int t = 1;

    /// Number of integration variables (m, n or floor(n/2)).
    int variable_count() const { return kind.part_bound(); }
    int ring_dimension() const { return kind.ring_dimension(); }
    /// 1 for skew-symmetric matrices of odd size, else 0.
    int delta() const;
    /// The analytic spread is maximal: 0 < t < variable_count(), or t = 1
    /// when there is a single variable (then I_t is the maximal ideal).
    bool in_valid_range() const { return t > 0 && (t < variable_count() || (t == 1 && variable_count() == 1)); }
    /// t = 1 with a single integration variable; the integrals degenerate.
    bool single_variable() const { return t == 1 && variable_count() == 1; }

    std::string describe() const;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

}  // namespace detmult

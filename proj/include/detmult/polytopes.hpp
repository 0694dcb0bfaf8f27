#pragma once

// Rational H-polytopes, the ordered integration regions, exact vertex
// enumeration and a deterministic pulling triangulation.

#include <string>
#include <vector>

#include "detmult/exactnum.hpp"
#include "detmult/linalg.hpp"

namespace detmult {

/// <normal, x> <= offset
struct Halfspace {
    Point normal;
    Rational offset;

    bool satisfied_by(const Point& x) const;
    bool tight_at(const Point& x) const;
};

class HPolytope {
public:
    explicit HPolytope(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::vector<Halfspace>& rows() const { return rows_; }

    /// Adds <normal, x> <= offset; throws DomainError on a length mismatch.
    void add(Point normal, Rational offset);
    /// Adds <normal, x> >= offset.
    void add_lower(Point normal, const Rational& offset);

    bool contains(const Point& x) const;

private:
    std::size_t dim_;
    std::vector<Halfspace> rows_;
};

/// A d-simplex given by d+1 affinely independent vertices in R^d.
class Simplex {
public:
    explicit Simplex(std::vector<Point> vertices);

    static Simplex standard(std::size_t dim);

    std::size_t dim() const { return vertices_.size() - 1; }
    const std::vector<Point>& vertices() const { return vertices_; }
    /// Columns are v_i - v_0, i = 1..d.
    Matrix edge_matrix() const;
    /// |det(edge matrix)| = d! * volume.
    Rational abs_determinant() const { return abs_det_; }
    Rational volume() const;

private:
    std::vector<Point> vertices_;
    Rational abs_det_;
};

struct Triangulation {
    std::vector<Simplex> simplices;
    HPolytope source;

    Rational volume() const;
};

/// {0 <= z_1 <= ... <= z_m <= 1, sum z = t} projected to (z_1..z_{m-1}) by
/// substituting z_m = t - (z_1 + ... + z_{m-1}). Requires m >= 2, 0 < t < m.
HPolytope ordered_slice_region(int m, int t);

/// {0 <= z_1 <= ... <= z_m <= 1, z_m + t - 1 <= sum z <= t} in R^m.
HPolytope ordered_epsilon_region(int m, int t);

/// {0 <= z_1 <= ... <= z_m, sum z <= 1} in R^m.
HPolytope ordered_unit_simplex_region(int m);

/// [0,1]^d.
HPolytope unit_cube(std::size_t dim);

/// Exact vertex set, sorted lexicographically. Empty for an infeasible
/// system; throws DomainError when the system admits a recession direction.
std::vector<Point> enumerate_vertices(const HPolytope& h);

/// Pulling triangulation from the lexicographically smallest vertex,
/// recursively over facets. Throws DomainError for empty or
/// lower-dimensional input.
Triangulation triangulate(const HPolytope& h);

Rational volume(const HPolytope& h);

/// {"dim":..,"inequalities":[[..normal..,offset]..],"vertices":[..],
///  "simplices":[[[..]..]..]} with every number as a rational string.
std::string triangulation_json(const Triangulation& tri);

}  // namespace detmult

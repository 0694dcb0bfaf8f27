#include "detmult/polytopes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace detmult {

namespace {

Rational dot(const Point& a, const Point& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point unit(std::size_t dim, std::size_t i, int value = 1) {
    Point p(dim);
    p[i] = value;
    return p;
}

/// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Point> raw_vertices(std::size_t dim, const std::vector<Halfspace>& rows) {
    std::set<Point> found;
    if (dim == 0) {
        bool ok = true;
        for (const auto& r : rows) ok = ok && r.offset.sign() >= 0;
        if (ok) found.insert(Point{});
        return {found.begin(), found.end()};
    }
    for_each_subset(rows.size(), dim, [&](const std::vector<std::size_t>& idx) {
        Matrix a;
        Point b;
        for (std::size_t i : idx) {
            a.push_back(rows[i].normal);
            b.push_back(rows[i].offset);
        }
        auto x = solve_unique(std::move(a), std::move(b));
        if (!x) return;
        for (const auto& r : rows)
            if (!r.satisfied_by(*x)) return;
        found.insert(std::move(*x));
    });
    return {found.begin(), found.end()};
}

bool has_recession_direction(const HPolytope& h) {
    const std::size_t d = h.dim();
    std::vector<Halfspace> cone;
    for (const auto& r : h.rows()) cone.push_back({r.normal, 0});
    for (std::size_t i = 0; i < d; ++i) {
        cone.push_back({unit(d, i), 1});
        cone.push_back({unit(d, i, -1), 1});
    }
    const Point origin(d);
    for (const auto& v : raw_vertices(d, cone))
        if (v != origin) return true;
    return false;
}

int affine_dimension(const std::vector<Point>& pts, const std::vector<std::size_t>& subset) {
    if (subset.empty()) return -1;
    Matrix diffs;
    const Point& base = pts[subset.front()];
    for (std::size_t k = 1; k < subset.size(); ++k) {
        Point row(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) row[i] = pts[subset[k]][i] - base[i];
        diffs.push_back(std::move(row));
    }
    return rank(std::move(diffs));
}

struct PullingContext {
    const std::vector<Point>& vertices;
    // For each facet-defining row, the sorted indices of the vertices on it.
    std::vector<std::vector<std::size_t>> facet_vertex_sets;

    // Simplices (as sorted vertex index lists) triangulating the face spanned
    // by `face`, which has dimension k.
    std::vector<std::vector<std::size_t>> pull(const std::vector<std::size_t>& face, int k) const {
        if (static_cast<int>(face.size()) == k + 1) return {face};
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> facets;
        for (const auto& on_row : facet_vertex_sets) {
            std::vector<std::size_t> f;
            std::set_intersection(face.begin(), face.end(), on_row.begin(), on_row.end(),
                                  std::back_inserter(f));
            if (f.size() == face.size() || f.empty() || f.front() == apex) continue;
            if (affine_dimension(vertices, f) != k - 1) continue;
            facets.insert(std::move(f));
        }
        std::vector<std::vector<std::size_t>> out;
        for (const auto& f : facets) {
            for (auto s : pull(f, k - 1)) {
                s.insert(s.begin(), apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    }
};

}  // namespace

bool Halfspace::satisfied_by(const Point& x) const { return dot(normal, x) <= offset; }
bool Halfspace::tight_at(const Point& x) const { return dot(normal, x) == offset; }

void HPolytope::add(Point normal, Rational offset) {
    if (normal.size() != dim_) throw DomainError("halfspace normal has wrong length");
    rows_.push_back({std::move(normal), std::move(offset)});
}

void HPolytope::add_lower(Point normal, const Rational& offset) {
    for (auto& c : normal) c = -c;
    add(std::move(normal), -offset);
}

bool HPolytope::contains(const Point& x) const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Halfspace& r) { return r.satisfied_by(x); });
}

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DomainError("simplex without vertices");
    const std::size_t d = vertices_.size() - 1;
    for (const auto& v : vertices_)
        if (v.size() != d) throw DomainError("simplex vertex has wrong dimension");
    abs_det_ = abs(determinant(edge_matrix()));
    if (d > 0 && abs_det_.is_zero()) throw DomainError("degenerate simplex");
    if (d == 0) abs_det_ = 1;
}

Simplex Simplex::standard(std::size_t dim) {
    std::vector<Point> v{Point(dim)};
    for (std::size_t i = 0; i < dim; ++i) v.push_back(unit(dim, i));
    return Simplex(std::move(v));
}

Matrix Simplex::edge_matrix() const {
    const std::size_t d = dim();
    Matrix a(d, Point(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a[i][j] = vertices_[j + 1][i] - vertices_[0][i];
    return a;
}

Rational Simplex::volume() const { return abs_det_ / Rational(factorial(static_cast<long>(dim()))); }

Rational Triangulation::volume() const {
    Rational v;
    for (const auto& s : simplices) v += s.volume();
    return v;
}

HPolytope ordered_slice_region(int m, int t) {
    if (m < 2) throw DomainError("slice region needs m >= 2");
    if (t <= 0 || t >= m) throw DomainError("slice region needs 0 < t < m");
    const std::size_t d = static_cast<std::size_t>(m - 1);
    HPolytope h(d);
    h.add(unit(d, 0, -1), 0);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        Point n(d);
        n[i] = 1;
        n[i + 1] = -1;
        h.add(std::move(n), 0);
    }
    // z_{m-1} <= z_m = t - sum
    Point last(d, Rational(1));
    last[d - 1] = 2;
    h.add(std::move(last), t);
    // z_m <= 1
    h.add(Point(d, Rational(-1)), 1 - t);
    return h;
}

HPolytope ordered_epsilon_region(int m, int t) {
    if (m < 2) throw DomainError("epsilon region needs m >= 2");
    if (t <= 0 || t >= m) throw DomainError("epsilon region needs 0 < t < m");
    const std::size_t d = static_cast<std::size_t>(m);
    HPolytope h(d);
    h.add(unit(d, 0, -1), 0);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        Point n(d);
        n[i] = 1;
        n[i + 1] = -1;
        h.add(std::move(n), 0);
    }
    h.add(unit(d, d - 1), 1);
    // z_m + t - 1 <= sum
    Point lower(d, Rational(-1));
    lower[d - 1] = 0;
    h.add(std::move(lower), 1 - t);
    h.add(Point(d, Rational(1)), t);
    return h;
}

HPolytope ordered_unit_simplex_region(int m) {
    if (m < 1) throw DomainError("region needs m >= 1");
    const std::size_t d = static_cast<std::size_t>(m);
    HPolytope h(d);
    h.add(unit(d, 0, -1), 0);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        Point n(d);
        n[i] = 1;
        n[i + 1] = -1;
        h.add(std::move(n), 0);
    }
    h.add(Point(d, Rational(1)), 1);
    return h;
}

HPolytope unit_cube(std::size_t dim) {
    HPolytope h(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        h.add(unit(dim, i, -1), 0);
        h.add(unit(dim, i), 1);
    }
    return h;
}

std::vector<Point> enumerate_vertices(const HPolytope& h) {
    if (has_recession_direction(h)) throw DomainError("unbounded polyhedron");
    return raw_vertices(h.dim(), h.rows());
}

Triangulation triangulate(const HPolytope& h) {
    const auto vertices = enumerate_vertices(h);
    if (vertices.empty()) throw DomainError("cannot triangulate an empty polytope");
    std::vector<std::size_t> all(vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const int d = static_cast<int>(h.dim());
    if (affine_dimension(vertices, all) != d)
        throw DomainError("cannot triangulate a lower-dimensional polytope");

    PullingContext ctx{vertices, {}};
    // Rows that do not define a facet are redundant and dropped.
    std::set<std::vector<std::size_t>> seen;
    for (const auto& row : h.rows()) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (row.tight_at(vertices[i])) on.push_back(i);
        if (affine_dimension(vertices, on) != d - 1) continue;
        if (seen.insert(on).second) ctx.facet_vertex_sets.push_back(std::move(on));
    }
    std::sort(ctx.facet_vertex_sets.begin(), ctx.facet_vertex_sets.end());

    Triangulation tri{{}, h};
    for (const auto& idx : ctx.pull(all, d)) {
        std::vector<Point> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(vertices[i]);
        tri.simplices.emplace_back(std::move(pts));
    }
    return tri;
}

Rational volume(const HPolytope& h) { return triangulate(h).volume(); }

std::string triangulation_json(const Triangulation& tri) {
    using nlohmann::json;
    auto point_json = [](const Point& p) {
        json a = json::array();
        for (const auto& c : p) a.push_back(c.to_string());
        return a;
    };
    json ineq = json::array();
    for (const auto& r : tri.source.rows()) {
        json row = point_json(r.normal);
        row.push_back(r.offset.to_string());
        ineq.push_back(std::move(row));
    }
    json verts = json::array();
    for (const auto& v : enumerate_vertices(tri.source)) verts.push_back(point_json(v));
    json simplices = json::array();
    for (const auto& s : tri.simplices) {
        json sj = json::array();
        for (const auto& v : s.vertices()) sj.push_back(point_json(v));
        simplices.push_back(std::move(sj));
    }
    json out{{"dim", tri.source.dim()},
             {"inequalities", std::move(ineq)},
             {"vertices", std::move(verts)},
             {"simplices", std::move(simplices)},
             {"volume", tri.volume().to_string()}};
    return out.dump();
}

}  // namespace detmult

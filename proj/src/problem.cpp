#include "detmult/problem.hpp"

#include "detmult/errors.hpp"

namespace detmult {

std::string_view to_string(KindType k) {
    switch (k) {
        case KindType::generic: return "generic";
        case KindType::symmetric: return "symmetric";
        case KindType::pfaffian: return "pfaffian";
    }
    return "?";
}

KindType parse_kind(std::string_view name) {
    if (name == "generic") return KindType::generic;
    if (name == "symmetric") return KindType::symmetric;
    if (name == "pfaffian") return KindType::pfaffian;
    throw DomainError("unknown matrix kind '" + std::string(name) + "'");
}

MatrixKind MatrixKind::generic(int m, int n) {
    if (m < 1 || m > n) throw DomainError("generic matrix needs 1 <= m <= n");
    return {KindType::generic, m, n};
}

MatrixKind MatrixKind::symmetric(int n) {
    if (n < 2) throw DomainError("symmetric matrix needs n >= 2");
    return {KindType::symmetric, n, n};
}

MatrixKind MatrixKind::pfaffian(int n) {
    if (n < 2) throw DomainError("skew-symmetric matrix needs n >= 2");
    return {KindType::pfaffian, n, n};
}

int MatrixKind::part_bound() const {
    switch (type) {
        case KindType::generic: return m;
        case KindType::symmetric: return n;
        case KindType::pfaffian: return n / 2;
    }
    return 0;
}

int MatrixKind::ring_dimension() const {
    switch (type) {
        case KindType::generic: return m * n;
        case KindType::symmetric: return n * (n + 1) / 2;
        case KindType::pfaffian: return n * (n - 1) / 2;
    }
    return 0;
}

std::string MatrixKind::describe() const {
    if (type == KindType::generic)
        return "generic " + std::to_string(m) + "x" + std::to_string(n);
    return std::string(to_string(type)) + " " + std::to_string(n) + "x" + std::to_string(n);
}

int ProblemSpec::delta() const {
    return kind.type == KindType::pfaffian && kind.n % 2 == 1 ? 1 : 0;
}

std::string ProblemSpec::describe() const {
    return kind.describe() + ", t=" + std::to_string(t);
}

}  // namespace detmult

#pragma once

#include <stdexcept>
#include <string>

namespace detmult {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested quantity exists but is not computed by this library
/// (e.g. the degree of the Grassmannian coordinate ring).
class OutOfScope : public DomainError {
public:
    using DomainError::DomainError;
};

/// An enumeration-based routine was asked to run beyond its size cap.
class ScaleRefused : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace detmult

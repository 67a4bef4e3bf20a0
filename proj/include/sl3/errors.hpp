#pragma once

#include <stdexcept>

namespace sl3 {

/// Raised when a computation needs a number outside Q(i) (an irrational
/// eigenvalue, a missing square or cube root).
class FieldExtensionRequired : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotTraceless : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotSolvable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDimension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An abstract type the classification does not cover. Surfaced, never coerced.
class UnrecognizedType : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A post-hoc self-check failed. Always a bug, never a property of the input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sl3

#pragma once

#include <stdexcept>
#include <string>

namespace mpg {

/// Raised when a parameter pair would produce more vertices than the configured cap.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's hypothesis (girth, family, ell, ...) does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mpg

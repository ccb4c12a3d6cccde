#pragma once

#include <stdexcept>
#include <string>

namespace superhomology {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document or literal.
class ParseError : public Error {
public:
    using Error::Error;
};

class UnboundParameter : public Error {
public:
    explicit UnboundParameter(const std::string& name)
        : Error("unbound parameter: " + name), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A parameter value violates the algebra family's admissibility constraint.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class UnknownAlgebra : public Error {
public:
    explicit UnknownAlgebra(const std::string& name) : Error("unknown algebra: " + name) {}
};

} // namespace superhomology

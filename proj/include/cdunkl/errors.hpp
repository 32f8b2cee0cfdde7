#ifndef CDUNKL_ERRORS_HPP
#define CDUNKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdunkl
{

// Bad argument: index out of range, wrong vector length, non-positive tolerance, ...
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Input lies outside the set where an operator is defined.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Some Γ argument ν_k + n + 1 hit a nonpositive integer.
class GammaPoleError : public DomainError
{
public:
    using DomainError::DomainError;
};

// The eigen-recursion denominator n + k_{n mod m} vanished at exponent `index`.
class SingularRecursionError : public DomainError
{
public:
    SingularRecursionError(const std::string &what, int index) : DomainError(what), m_index(index) {}

    int index() const noexcept
    {
        return m_index;
    }

private:
    int m_index;
};

class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An invariant the algebra guarantees was observed broken (e.g. a negative exponent).
class ConsistencyError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace cdunkl

#endif

#ifndef SUPERCHAR_ERRORS_HPP
#define SUPERCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superchar
{

// Raised when caller-supplied data violates a documented precondition
// (malformed partition, out-of-hook diagram, mismatched variable tables...).
class invalid_input : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal algebraic assumption fails, e.g. a division that
// must be exact leaves a remainder.
class internal_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace superchar

#endif

#ifndef SQFSYM_ERROR_HPP
#define SQFSYM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqfsym {

class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// Invalid argument: bad family parameters, out-of-range vertex, ambient mismatch.
class ParameterError : public Error
{
    public:
        using Error::Error;
};

/// Operation undefined on this value (e.g. minimal primes of the zero ideal).
class DomainError : public Error
{
    public:
        using Error::Error;
};

/// Request exceeds what this library computes (e.g. enumeration beyond 6 vertices).
class CapabilityError : public Error
{
    public:
        using Error::Error;
};

/**
 * Malformed textual input.  `position` is a byte offset for graph6 input
 * and a 1-based line number for edge lists.
 */
class ParseError : public Error
{
    public:
        ParseError(const std::string& what, std::size_t position)
            : Error(what), position_(position)
        {
        }

        std::size_t position() const noexcept { return position_; }

    private:
        std::size_t position_;
};

}   // namespace sqfsym

#endif

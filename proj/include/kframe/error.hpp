#ifndef KFRAME_ERROR_HPP
#define KFRAME_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kframe
{

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

#define KFRAME_DEFINE_ERROR(Name)                                                                  \
    class Name : public Error                                                                      \
    {                                                                                              \
    public:                                                                                        \
        using Error::Error;                                                                        \
    }

KFRAME_DEFINE_ERROR(InvalidModulus);
KFRAME_DEFINE_ERROR(RingMismatch);
KFRAME_DEFINE_ERROR(NotInvertible);
KFRAME_DEFINE_ERROR(IndexOutOfRange);
KFRAME_DEFINE_ERROR(SignatureMismatch);
KFRAME_DEFINE_ERROR(TruncationMismatch);
KFRAME_DEFINE_ERROR(NotUnitNormalized);
KFRAME_DEFINE_ERROR(InvalidExpansion);
KFRAME_DEFINE_ERROR(UnsupportedSignature);
KFRAME_DEFINE_ERROR(NotInverse);
KFRAME_DEFINE_ERROR(BoundaryNotFixed);
KFRAME_DEFINE_ERROR(NotSymplectic);
KFRAME_DEFINE_ERROR(EmptyCurveList);
KFRAME_DEFINE_ERROR(PreconditionViolation);
KFRAME_DEFINE_ERROR(ConfigError);

#undef KFRAME_DEFINE_ERROR

} // namespace kframe

#endif

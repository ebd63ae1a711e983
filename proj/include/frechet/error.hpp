#ifndef FRECHET_ERROR_HPP
#define FRECHET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frechet {

/// Base class of every error raised by the library. `name()` is a stable
/// identifier (e.g. "DimensionMismatch") that the CLI prints on stderr.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FRECHET_DEFINE_ERROR(Type)                                      \
    class Type : public error {                                         \
    public:                                                             \
        explicit Type(const std::string& what) : error(#Type, what) {}  \
    }

FRECHET_DEFINE_ERROR(DimensionMismatch);
FRECHET_DEFINE_ERROR(InvalidArgument);
FRECHET_DEFINE_ERROR(EmptyInput);
FRECHET_DEFINE_ERROR(NonFiniteValue);
FRECHET_DEFINE_ERROR(InvalidWeights);
FRECHET_DEFINE_ERROR(OpenCurve);
FRECHET_DEFINE_ERROR(NotAnAtom);
FRECHET_DEFINE_ERROR(ReducedLawsDiffer);
FRECHET_DEFINE_ERROR(ZeroDeviation);
FRECHET_DEFINE_ERROR(UnsortedInput);
FRECHET_DEFINE_ERROR(NotSymmetric);
FRECHET_DEFINE_ERROR(NotPositiveSemidefinite);
FRECHET_DEFINE_ERROR(AbsoluteContinuityViolation);
FRECHET_DEFINE_ERROR(NonConvergence);
FRECHET_DEFINE_ERROR(RationalizationFailure);
FRECHET_DEFINE_ERROR(EnumerationCapExceeded);
FRECHET_DEFINE_ERROR(ParseError);

#undef FRECHET_DEFINE_ERROR

}  // namespace frechet

#endif  // FRECHET_ERROR_HPP

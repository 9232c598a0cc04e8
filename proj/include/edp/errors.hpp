#ifndef EDP_ERRORS_HPP
#define EDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edp {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeCapExceeded : Error {
    explicit DegreeCapExceeded(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedComplexAbscissa : Error {
    explicit UnsupportedComplexAbscissa(const std::string& msg) : Error(msg) {}
};

struct ZeroRealPart : Error {
    explicit ZeroRealPart(const std::string& msg) : Error(msg) {}
};

struct NotPTForm : Error {
    explicit NotPTForm(const std::string& msg) : Error(msg) {}
};

struct NegativeDiscriminant : Error {
    explicit NegativeDiscriminant(const std::string& msg) : Error(msg) {}
};

struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& msg) : Error(msg) {}
};

struct ZeroNorm : Error {
    explicit ZeroNorm(const std::string& msg) : Error(msg) {}
};

struct NoSignChange : Error {
    explicit NoSignChange(const std::string& msg) : Error(msg) {}
};

struct MaxIterations : Error {
    explicit MaxIterations(const std::string& msg) : Error(msg) {}
};

struct EndpointNotDecaying : Error {
    explicit EndpointNotDecaying(const std::string& msg) : Error(msg) {}
};

} // namespace edp

#endif

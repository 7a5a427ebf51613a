#ifndef ENTROVAR_ERROR_HPP
#define ENTROVAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace entrovar {

enum class ErrorKind {
    NegativeEntry,
    SumNotOne,
    AllZero,
    ParseError,
    ZeroProbability,
    SupportTooSmall,
    DomainError,
    IndexOutOfRange,
    DegenerateInput,
    ResourceBudget,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Library-wide exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace entrovar

#endif

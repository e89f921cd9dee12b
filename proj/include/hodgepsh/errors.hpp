#pragma once

#include <stdexcept>
#include <string>

namespace hodgepsh {

// Base for every error raised by the library; `code()` is a stable tag used in reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define HODGEPSH_ERROR(Name)                                                   \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

HODGEPSH_ERROR(InvalidHodgeNumber);
HODGEPSH_ERROR(InvalidKind);
HODGEPSH_ERROR(DimensionError);
HODGEPSH_ERROR(NotNilpotent);
HODGEPSH_ERROR(SplittingFailure);
HODGEPSH_ERROR(NoLeadingTerm);
HODGEPSH_ERROR(ConstructionFailure);
HODGEPSH_ERROR(OutsideChart);
HODGEPSH_ERROR(NotApplicable);
HODGEPSH_ERROR(AmbiguousClassification);
HODGEPSH_ERROR(DivergenceViolation);
HODGEPSH_ERROR(PshViolation);
HODGEPSH_ERROR(DominanceViolation);
HODGEPSH_ERROR(NonnegativityViolation);
HODGEPSH_ERROR(InvalidInput);

#undef HODGEPSH_ERROR

// Raised by jet/log-poly evaluation; carries |f| at the offending node.
class SingularEvaluation : public Error {
public:
    explicit SingularEvaluation(double magnitude, const std::string& where = "")
        : Error("SingularEvaluation",
                (where.empty() ? std::string() : where + ": ") + "|f| = " + std::to_string(magnitude)),
          magnitude_(magnitude) {}
    double magnitude() const { return magnitude_; }

private:
    double magnitude_;
};

}  // namespace hodgepsh

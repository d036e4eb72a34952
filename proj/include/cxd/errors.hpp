#ifndef CXD_ERRORS_HPP
#define CXD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cxd {

// Every failure the library reports, one code per contract-level error.
enum class Err {
    EmptyPrompt,
    LexiconMissing,
    EntityMismatch,
    InconsistentInputs,
    BackendFailure,
    UnsatisfiableBudget,
    LayoutInfeasible,
    ShapeMismatch,
    EmptyPlan,
    MissingImage,
    Timeout,
    BadStatus,
    MalformedReply,
    InvalidArgument,
    ConfigError,
};

const char* err_name(Err code);

class CxdError : public std::runtime_error {
public:
    CxdError(Err code, const std::string& message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

// Transport-level failure; keeps the status line and raw body for diagnosis.
class BackendError : public CxdError {
public:
    BackendError(Err code, const std::string& message, int status = 0, std::string body = {})
        : CxdError(code, message), status_(status), body_(std::move(body)) {}

    int status() const { return status_; }
    const std::string& body() const { return body_; }

private:
    int status_;
    std::string body_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
    throw CxdError(code, message);
}

}  // namespace cxd

#endif

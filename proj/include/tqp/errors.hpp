#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tqp {

// Base for all domain errors. `name()` is the stable error identifier the
// CLI reports; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

struct UnsupportedFormat : Error {
    explicit UnsupportedFormat(const std::string& message) : Error("UnsupportedFormat", message) {}
};

struct TruncatedInput : Error {
    explicit TruncatedInput(const std::string& message) : Error("TruncatedInput", message) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& message) : Error("InvalidArgument", message) {}
};

struct FrameTooSmall : Error {
    explicit FrameTooSmall(const std::string& message) : Error("FrameTooSmall", message) {}
};

struct UnsupportedVersion : Error {
    explicit UnsupportedVersion(const std::string& message) : Error("UnsupportedVersion", message) {}
};

struct ChainModelMismatch : Error {
    explicit ChainModelMismatch(const std::string& message) : Error("ChainModelMismatch", message) {}
};

struct FeatureShapeMismatch : Error {
    explicit FeatureShapeMismatch(const std::string& message) : Error("FeatureShapeMismatch", message) {}
};

struct EmptyDataset : Error {
    explicit EmptyDataset(const std::string& message) : Error("EmptyDataset", message) {}
};

} // namespace tqp

#pragma once

#include <stdexcept>
#include <string>

namespace baerlab {

// Error codes map onto CLI exit codes: input problems exit 2, cap hits exit 3.

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& what) : std::runtime_error(what), code(std::move(c)) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error("CapExceeded", what) {}
};
struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& what) : Error("InvalidSpec", what) {}
};
struct EmptySubset : Error {
    explicit EmptySubset(const std::string& what) : Error("EmptySubset", what) {}
};
struct NotSubmodule : Error {
    explicit NotSubmodule(const std::string& what) : Error("NotSubmodule", what) {}
};
struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& what) : Error("NotIdempotent", what) {}
};
struct ZeroElement : Error {
    explicit ZeroElement(const std::string& what) : Error("ZeroElement", what) {}
};
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what) : Error("PreconditionFailed", what) {}
};
struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& what) : Error("HypothesisFailed", what) {}
};
struct NotEssential : Error {
    explicit NotEssential(const std::string& what) : Error("NotEssential", what) {}
};
struct UnknownCheck : Error {
    explicit UnknownCheck(const std::string& what) : Error("UnknownCheck", what) {}
};
struct NoModuleStructure : Error {
    explicit NoModuleStructure(const std::string& what) : Error("NoModuleStructure", what) {}
};

}  // namespace baerlab

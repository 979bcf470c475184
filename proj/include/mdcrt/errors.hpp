#pragma once

#include <stdexcept>
#include <string>

namespace mdcrt {

// Domain errors carry a stable machine-readable name next to the message;
// the CLI maps them to exit code 1 and echoes the name in the error document.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "matrix is singular")
        : Error("SingularMatrix", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
        : Error("DimensionMismatch", msg) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& msg = "congruence system has no solution")
        : Error("NoSolution", msg) {}
};

struct InvalidOverride : Error {
    explicit InvalidOverride(const std::string& msg)
        : Error("InvalidOverride", msg) {}
};

struct ReconstructionFailed : Error {
    explicit ReconstructionFailed(const std::string& msg = "all correction combinations exhausted")
        : Error("ReconstructionFailed", msg) {}
};

struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& msg)
        : Error("InconsistentSystem", msg) {}
};

struct NoCommonDifference : Error {
    explicit NoCommonDifference(const std::string& msg = "no common difference remainder exists")
        : Error("NoCommonDifference", msg) {}
};

struct NoPeaks : Error {
    explicit NoPeaks(const std::string& msg = "spectrum has no peaks above the noise floor")
        : Error("NoPeaks", msg) {}
};

struct DetectionMismatch : Error {
    explicit DetectionMismatch(const std::string& msg)
        : Error("DetectionMismatch", msg) {}
};

}  // namespace mdcrt

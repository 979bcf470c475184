#pragma once

#include <json.hpp>

#include <string>

#include "mdcrt/freqsim.hpp"
#include "mdcrt/multivec.hpp"

namespace mdcrt {

using nlohmann::json;

/// Input/schema violation; carries a JSON-pointer-style path. CLI exit 2.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& msg)
        : Error("SchemaError", path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Integers arrive as exact JSON integers or as decimal strings (required
/// beyond 53-bit-safe magnitude); emitted the same way.
Int parse_int(const json& j, const std::string& path);
json int_to_json(const Int& x);

IntVector parse_vector(const json& j, const std::string& path);
json vector_to_json(const IntVector& v);

/// Row-major array-of-arrays, rectangular and square.
IntMatrix parse_matrix(const json& j, const std::string& path);
json matrix_to_json(const IntMatrix& m);

ModuliSet parse_moduli(const json& j, const std::string& path);

/// Arrays of arrays of vectors; duplicates within one set collapse (sets are
/// unordered), first-occurrence order is preserved.
std::vector<std::vector<IntVector>> parse_residue_sets(const json& j, const std::string& path);

/// [{"subset": [1-based indices], "basis": matrix}, ...]
std::map<SubsetKey, IntMatrix> parse_overrides(const json& j, const std::string& path,
                                               int gamma);

json range_to_json(const DeterminableRange& range);
json audit_to_json(const std::vector<AuditEvent>& events);

}  // namespace mdcrt

#include "mdcrt/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace mdcrt {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

bool decimal_literal(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Int parse_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            Int r;
            mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                       &j.get_ref<const json::number_unsigned_t&>());
            return r;
        }
        long long v = j.get<long long>();
        Int r;
        mpz_set_si(r.get_mpz_t(), static_cast<long>(v >> 32));
        r <<= 32;
        r += static_cast<unsigned long>(v & 0xffffffffULL);
        return r;
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (!decimal_literal(s)) throw SchemaError(path, "not a decimal integer string");
        return Int(s);
    }
    throw SchemaError(path, "expected an integer (number or decimal string)");
}

json int_to_json(const Int& x) {
    if (abs(x) <= kSafeMax) return json(x.get_si());
    return json(x.get_str());
}

IntVector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array");
    IntVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_int(j[i], path + "/" + std::to_string(i)));
    return v;
}

json vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntMatrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw SchemaError(path + "/0", "expected an array row");
    const std::size_t cols = j[0].size();
    if (cols != rows) throw SchemaError(path, "matrix must be square");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        if (!j[r].is_array()) throw SchemaError(rp, "expected an array row");
        if (j[r].size() != cols) throw SchemaError(rp, "ragged row");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = parse_int(j[r][c], rp + "/" + std::to_string(c));
    }
    return m;
}

json matrix_to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m.at(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

ModuliSet parse_moduli(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array");
    ModuliSet ms;
    for (std::size_t i = 0; i < j.size(); ++i)
        ms.moduli.push_back(parse_matrix(j[i], path + "/" + std::to_string(i)));
    const std::size_t d = ms.moduli.front().rows();
    for (std::size_t i = 0; i < ms.moduli.size(); ++i)
        if (ms.moduli[i].rows() != d)
            throw SchemaError(path + "/" + std::to_string(i), "moduli dims differ");
    return ms;
}

std::vector<std::vector<IntVector>> parse_residue_sets(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of sets");
    std::vector<std::vector<IntVector>> sets;
    for (std::size_t s = 0; s < j.size(); ++s) {
        const std::string sp = path + "/" + std::to_string(s);
        if (!j[s].is_array() || j[s].empty())
            throw SchemaError(sp, "expected a non-empty array of vectors");
        std::vector<IntVector> one;
        for (std::size_t i = 0; i < j[s].size(); ++i) {
            IntVector v = parse_vector(j[s][i], sp + "/" + std::to_string(i));
            if (std::find(one.begin(), one.end(), v) == one.end()) one.push_back(std::move(v));
        }
        sets.push_back(std::move(one));
    }
    return sets;
}

std::map<SubsetKey, IntMatrix> parse_overrides(const json& j, const std::string& path,
                                               int gamma) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of overrides");
    std::map<SubsetKey, IntMatrix> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string ip = path + "/" + std::to_string(i);
        if (!j[i].is_object() || !j[i].contains("subset") || !j[i].contains("basis"))
            throw SchemaError(ip, "expected {subset, basis}");
        SubsetKey key;
        const json& sub = j[i]["subset"];
        if (!sub.is_array() || sub.empty()) throw SchemaError(ip + "/subset", "expected indices");
        for (std::size_t k = 0; k < sub.size(); ++k) {
            Int idx = parse_int(sub[k], ip + "/subset/" + std::to_string(k));
            if (idx < 1 || idx > gamma)
                throw SchemaError(ip + "/subset/" + std::to_string(k), "index out of range");
            key.push_back(static_cast<int>(idx.get_si()) - 1);
        }
        std::sort(key.begin(), key.end());
        out.emplace(std::move(key), parse_matrix(j[i]["basis"], ip + "/basis"));
    }
    return out;
}

json range_to_json(const DeterminableRange& range) {
    json out;
    out["eta"] = range.eta;
    out["alpha"] = range.alpha;
    out["size"] = range.points.size();
    json pts = json::array();
    for (const IntVector& p : range.points) pts.push_back(vector_to_json(p));
    out["points"] = std::move(pts);
    json subs = json::array();
    for (const auto& [key, basis] : range.subset_lcrms) {
        json e;
        json idx = json::array();
        for (int k : key) idx.push_back(k + 1);
        e["subset"] = std::move(idx);
        e["basis"] = matrix_to_json(basis);
        subs.push_back(std::move(e));
    }
    out["subset_lcrms"] = std::move(subs);
    return out;
}

json audit_to_json(const std::vector<AuditEvent>& events) {
    json out = json::array();
    for (const AuditEvent& ev : events) {
        json e;
        switch (ev.kind) {
            case AuditEvent::Kind::TupleChosen: {
                e["event"] = "tuple";
                json t = json::array();
                for (const IntVector& v : ev.tuple) t.push_back(vector_to_json(v));
                e["residues"] = std::move(t);
                break;
            }
            case AuditEvent::Kind::Candidate: {
                e["event"] = "candidate";
                e["via"] = ev.subset.empty() ? "full" : "subset";
                if (!ev.subset.empty()) e["sets"] = ev.subset;
                if (!ev.candidate.empty()) e["value"] = vector_to_json(ev.candidate);
                if (!ev.range_point.empty()) e["range_point"] = vector_to_json(ev.range_point);
                e["outcome"] = ev.outcome;
                break;
            }
            case AuditEvent::Kind::Correction:
                e["event"] = "correction";
                e["set"] = ev.set_index;
                e["removed"] = vector_to_json(ev.removed);
                e["added"] = vector_to_json(ev.added);
                break;
            case AuditEvent::Kind::DirectSet:
                e["event"] = "direct_set";
                e["set"] = ev.set_index;
                break;
            case AuditEvent::Kind::RoundFailed:
                e["event"] = "round_failed";
                break;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace mdcrt

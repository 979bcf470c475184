#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mdcrt/json_io.hpp"

using namespace mdcrt;

namespace {

json load_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("", "cannot open input file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw SchemaError("", "cannot open output file: " + out_path);
        out << text;
    }
}

void emit_csv(const std::vector<IntVector>& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("", "cannot open csv file: " + path);
    if (points.empty()) return;
    for (std::size_t i = 0; i < points.front().size(); ++i)
        out << (i ? "," : "") << "x" << (i + 1);
    out << "\n";
    for (const IntVector& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].get_str();
        out << "\n";
    }
}

std::map<SubsetKey, IntMatrix> gather_overrides(const json& in, const std::string& file,
                                                int gamma) {
    std::map<SubsetKey, IntMatrix> out;
    if (in.contains("overrides")) out = parse_overrides(in["overrides"], "/overrides", gamma);
    if (!file.empty()) {
        json j = load_input(file);
        for (auto& [k, v] : parse_overrides(j, "/", gamma)) out.insert_or_assign(k, v);
    }
    return out;
}

int require_rho(const json& in, int flag_rho) {
    if (flag_rho > 0) return flag_rho;
    if (in.contains("rho")) {
        Int r = parse_int(in["rho"], "/rho");
        if (r < 1) throw SchemaError("/rho", "rho must be positive");
        return static_cast<int>(r.get_si());
    }
    throw SchemaError("/rho", "rho required (field or --rho)");
}

json run_lcrm(const json& in) {
    if (!in.contains("moduli")) throw SchemaError("/moduli", "required");
    ModuliSet ms = parse_moduli(in["moduli"], "/moduli");
    ms.validate();
    IntMatrix r = lcrm(ms.moduli);
    json out;
    out["basis"] = matrix_to_json(r);
    out["det"] = int_to_json(det(r));
    return out;
}

json run_fpd(const json& in, const std::string& csv) {
    if (!in.contains("modulus")) throw SchemaError("/modulus", "required");
    IntMatrix m = parse_matrix(in["modulus"], "/modulus");
    Fpd f = fpd(m);
    json out;
    out["size"] = int_to_json(f.size());
    json pts = json::array();
    for (const IntVector& p : f.points()) pts.push_back(vector_to_json(p));
    out["points"] = std::move(pts);
    if (!csv.empty()) emit_csv(f.points(), csv);
    return out;
}

json run_rem(const json& in) {
    if (!in.contains("vector") || !in.contains("modulus"))
        throw SchemaError("/", "vector and modulus required");
    IntVector f = parse_vector(in["vector"], "/vector");
    IntMatrix m = parse_matrix(in["modulus"], "/modulus");
    DivisionResult r = vector_remainder(f, m);
    json out;
    out["quotient"] = vector_to_json(r.quotient);
    out["remainder"] = vector_to_json(r.remainder);
    return out;
}

json run_crt(const json& in) {
    if (!in.contains("congruences")) throw SchemaError("/congruences", "required");
    const json& cj = in["congruences"];
    if (!cj.is_array() || cj.empty())
        throw SchemaError("/congruences", "expected a non-empty array");
    std::vector<Congruence> sys;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string p = "/congruences/" + std::to_string(i);
        if (!cj[i].is_object() || !cj[i].contains("residue") || !cj[i].contains("modulus"))
            throw SchemaError(p, "expected {residue, modulus}");
        sys.push_back({parse_matrix(cj[i]["modulus"], p + "/modulus"),
                       parse_vector(cj[i]["residue"], p + "/residue")});
    }
    CrtSolution sol = solve(sys);
    json out;
    out["value"] = vector_to_json(sol.value);
    out["modulus"] = matrix_to_json(sol.combined_modulus);
    return out;
}

json run_neta(const json& in, int flag_rho, const std::string& ov_file,
              const std::string& csv) {
    if (!in.contains("moduli")) throw SchemaError("/moduli", "required");
    ModuliSet ms = parse_moduli(in["moduli"], "/moduli");
    int rho = require_rho(in, flag_rho);
    DeterminableRange range =
        compute_range(ms, rho, gather_overrides(in, ov_file, static_cast<int>(ms.gamma())));
    if (!csv.empty()) emit_csv(range.points, csv);
    return range_to_json(range);
}

json run_solve_multi(const json& in, int flag_rho, const std::string& ov_file) {
    if (!in.contains("moduli") || !in.contains("sets"))
        throw SchemaError("/", "moduli and sets required");
    ModuliSet ms = parse_moduli(in["moduli"], "/moduli");
    int rho = require_rho(in, flag_rho);
    ResidueSetSystem sys{parse_residue_sets(in["sets"], "/sets"), rho};
    if (sys.sets.size() != ms.gamma())
        throw SchemaError("/sets", "one residue set per modulus required");
    DeterminableRange range =
        compute_range(ms, rho, gather_overrides(in, ov_file, static_cast<int>(ms.gamma())));
    ReconstructionOutcome out = reconstruct(ms, sys, range);
    std::vector<IntVector> sorted_vecs = out.vectors;
    std::sort(sorted_vecs.begin(), sorted_vecs.end());
    json doc;
    json vecs = json::array();
    for (const IntVector& v : sorted_vecs) vecs.push_back(vector_to_json(v));
    doc["vectors"] = std::move(vecs);
    doc["crt_invocations"] = out.crt_invocations;
    doc["rounds"] = audit_to_json(out.rounds);
    return doc;
}

json run_solve_pair(const json& in) {
    if (!in.contains("moduli") || !in.contains("sets"))
        throw SchemaError("/", "moduli and sets required");
    PairSystem ps;
    ps.ms = parse_moduli(in["moduli"], "/moduli");
    ps.sets = parse_residue_sets(in["sets"], "/sets");
    if (ps.sets.size() != ps.ms.gamma())
        throw SchemaError("/sets", "one residue set per modulus required");
    IntMatrix r = in.contains("lcrm") ? parse_matrix(in["lcrm"], "/lcrm") : lcrm(ps.ms.moduli);
    PairSolution sol = reconstruct_pair(ps, r);
    json out;
    out["d_star"] = vector_to_json(sol.d_star);
    out["vectors"] = json::array({vector_to_json(sol.first), vector_to_json(sol.second)});
    return out;
}

json run_check_condition(const json& in) {
    if (!in.contains("moduli") || !in.contains("difference"))
        throw SchemaError("/", "moduli and difference required");
    ModuliSet ms = parse_moduli(in["moduli"], "/moduli");
    IntVector d = parse_vector(in["difference"], "/difference");
    json out;
    out["satisfied"] = check_condition(ms, d);
    return out;
}

json run_onedim(const json& in) {
    if (!in.contains("moduli")) throw SchemaError("/moduli", "required");
    const json& mj = in["moduli"];
    if (!mj.is_array() || mj.empty()) throw SchemaError("/moduli", "expected integer array");
    std::vector<Int> ms;
    for (std::size_t i = 0; i < mj.size(); ++i)
        ms.push_back(parse_int(mj[i], "/moduli/" + std::to_string(i)));
    OneDimProblem p(std::move(ms));
    std::vector<Int> cond = onedim_condition_set(p);
    OneDimPriorSets prior = onedim_prior_sets(p);

    auto to_arr = [](const std::vector<Int>& xs) {
        json a = json::array();
        for (const Int& x : xs) a.push_back(int_to_json(x));
        return a;
    };
    auto strict_subset = [&](const std::vector<Int>& xs) {
        if (xs.empty()) return false;
        for (const Int& x : xs)
            if (std::find(cond.begin(), cond.end(), x) == cond.end()) return false;
        return xs.size() < cond.size();
    };
    json out;
    out["M"] = int_to_json(p.M);
    out["condition_set"] = to_arr(cond);
    out["prop4"] = to_arr(prior.prop4);
    out["prop5"] = to_arr(prior.prop5);
    out["prop6"] = to_arr(prior.prop6);
    out["strict_subset"] = strict_subset(prior.prop4) &&
                           (prior.prop5.empty() || strict_subset(prior.prop5)) &&
                           (prior.prop6.empty() || strict_subset(prior.prop6));
    return out;
}

json run_simulate(const json& in, unsigned long seed, double threshold, bool prior,
                  const std::string& ov_file) {
    if (!in.contains("moduli") || !in.contains("tones"))
        throw SchemaError("/", "moduli and tones required");
    ModuliSet ms = parse_moduli(in["moduli"], "/moduli");
    SignalSpec spec;
    spec.dim = ms.dim();
    const json& tj = in["tones"];
    if (!tj.is_array() || tj.empty()) throw SchemaError("/tones", "expected a non-empty array");
    for (std::size_t i = 0; i < tj.size(); ++i) {
        const std::string p = "/tones/" + std::to_string(i);
        if (!tj[i].is_object() || !tj[i].contains("frequency"))
            throw SchemaError(p, "expected {frequency, amplitude?}");
        Tone t;
        t.frequency = parse_vector(tj[i]["frequency"], p + "/frequency");
        t.amplitude = 1.0;
        if (tj[i].contains("amplitude")) {
            const json& aj = tj[i]["amplitude"];
            if (aj.is_number()) {
                t.amplitude = aj.get<double>();
            } else if (aj.is_array() && aj.size() == 2 && aj[0].is_number() && aj[1].is_number()) {
                t.amplitude = Complex(aj[0].get<double>(), aj[1].get<double>());
            } else {
                throw SchemaError(p + "/amplitude", "expected number or [re, im]");
            }
        }
        spec.tones.push_back(std::move(t));
    }
    if (in.contains("noise_sigma")) {
        if (!in["noise_sigma"].is_number()) throw SchemaError("/noise_sigma", "expected number");
        spec.noise_sigma = in["noise_sigma"].get<double>();
        if (spec.noise_sigma < 0) throw SchemaError("/noise_sigma", "must be nonnegative");
    }
    EndToEndOptions opts;
    opts.threshold_ratio = threshold;
    opts.prior_pair = prior;
    opts.lcrm_overrides = gather_overrides(in, ov_file, static_cast<int>(ms.gamma()));
    EndToEndResult res = end_to_end(spec, ms, seed, opts);

    json out;
    std::vector<IntVector> rec = res.frequencies;
    std::sort(rec.begin(), rec.end());
    json freqs = json::array();
    for (const IntVector& f : rec) freqs.push_back(vector_to_json(f));
    out["recovered"] = std::move(freqs);
    json sets = json::array();
    for (const auto& sj : res.residue_sets) {
        json s = json::array();
        for (const IntVector& r : sj) s.push_back(vector_to_json(r));
        sets.push_back(std::move(s));
    }
    out["residue_sets"] = std::move(sets);
    if (res.d_star) out["d_star"] = vector_to_json(*res.d_star);
    return out;
}

json run_bound(const json& in) {
    if (!in.contains("gamma") || !in.contains("rho"))
        throw SchemaError("/", "gamma and rho required");
    Int g = parse_int(in["gamma"], "/gamma");
    Int r = parse_int(in["rho"], "/rho");
    if (r < 1 || g < r) throw SchemaError("/", "need gamma >= rho >= 1");
    json out;
    out["gamma"] = int_to_json(g);
    out["rho"] = int_to_json(r);
    out["bound"] = int_to_json(
        crt_invocation_bound(static_cast<int>(g.get_si()), static_cast<int>(r.get_si())));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized multidimensional CRT toolbox"};
    app.require_subcommand(1);

    std::string input_path, out_path, csv_path, overrides_file;
    int rho = 0;
    unsigned long seed = 0;
    double threshold = 0.5;
    bool prior = false;

    const char* names[] = {"lcrm",       "fpd",        "rem",           "crt",
                           "neta",       "solve-multi", "solve-pair",    "check-condition",
                           "onedim-compare", "simulate", "bound"};
    for (const char* n : names) {
        CLI::App* sub = app.add_subcommand(n);
        sub->add_option("input", input_path, "job JSON file ('-' or empty reads stdin)");
        sub->add_option("--out", out_path, "write the result document here instead of stdout");
        if (std::string(n) == "fpd" || std::string(n) == "neta")
            sub->add_option("--csv", csv_path, "also emit the point cloud as CSV");
        if (std::string(n) == "neta" || std::string(n) == "solve-multi" ||
            std::string(n) == "simulate") {
            sub->add_option("--rho", rho, "number of unknown vectors");
            sub->add_option("--overrides", overrides_file, "lcrm override file");
        }
        if (std::string(n) == "simulate") {
            sub->add_option("--seed", seed, "noise / replay seed");
            sub->add_option("--threshold", threshold, "peak detection ratio (0, 1]");
            sub->add_flag("--prior", prior, "use the two-vector prior-information solver");
        }
    }

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();

    try {
        json in = load_input(input_path);
        if (!in.is_object()) throw SchemaError("/", "job document must be an object");
        json out;
        if (cmd == "lcrm") out = run_lcrm(in);
        else if (cmd == "fpd") out = run_fpd(in, csv_path);
        else if (cmd == "rem") out = run_rem(in);
        else if (cmd == "crt") out = run_crt(in);
        else if (cmd == "neta") out = run_neta(in, rho, overrides_file, csv_path);
        else if (cmd == "solve-multi") out = run_solve_multi(in, rho, overrides_file);
        else if (cmd == "solve-pair") out = run_solve_pair(in);
        else if (cmd == "check-condition") out = run_check_condition(in);
        else if (cmd == "onedim-compare") out = run_onedim(in);
        else if (cmd == "simulate") out = run_simulate(in, seed, threshold, prior, overrides_file);
        else if (cmd == "bound") out = run_bound(in);
        emit(out, out_path);
        return 0;
    } catch (const SchemaError& e) {
        json err{{"error", e.name()}, {"message", e.what()}, {"path", e.path()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        json err{{"error", e.name()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", "InternalError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}

#include "neardist/cli.hpp"

#include "neardist/acceptance.hpp"
#include "neardist/constructions.hpp"
#include "neardist/errors.hpp"
#include "neardist/io.hpp"
#include "neardist/spectrum.hpp"
#include "neardist/verification.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace neardist {

namespace {

const std::vector<std::string> kCommands{"generate", "analyze", "verify", "turan", "mdk", "reproduce"};
const std::vector<std::string> kChecks{"k-distance", "weak-eps", "schuette", "certify"};

std::vector<std::string> split_checks(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text.empty() ? std::string("weak-eps") : text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            return kChecks;
        }
        out.push_back(item);
    }
    return out;
}

void require(bool cond, const std::string& what) {
    if (!cond) {
        throw InputError(what);
    }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
    } else {
        write_file_atomic(cfg.out, text);
    }
}

std::string witness_text(const MdkWitness& w) {
    auto list = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s + ")";
    };
    return "e=" + std::to_string(w.e) + " f=" + std::to_string(w.f) + " ell=" + std::to_string(w.ell) +
           " e_parts=" + list(w.e_parts) + " p_parts=" + list(w.p_parts) + " q_total=" + std::to_string(w.q_total) +
           " q_parts=" + list(w.q_parts);
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    ConstructionRequest req;
    req.construction = cfg.construction;
    req.d = cfg.d.value_or(2);
    req.k = cfg.k.value_or(1);
    req.n = static_cast<std::size_t>(cfg.n.value_or(0));
    req.eps = cfg.eps.value_or(0.1);
    req.eps1 = cfg.eps1;
    req.scale = cfg.scale;
    req.ratio = cfg.ratio.value_or(1e4);
    req.length = cfg.length.value_or(1.0);
    req.t1 = cfg.t1;
    req.t2 = cfg.t2;
    const Construction c = build_construction(req);
    emit_pointset(c.points, cfg.out);
    const std::string meta = c.metadata().dump(2) + "\n";
    write_file_atomic(cfg.out + ".meta.json", meta);
    out << meta;
    return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const PointSet p = parse_pointset(cfg.in);
    const bool multiplicative = cfg.eps.has_value() && !cfg.length.has_value();
    const WindowMode mode = multiplicative ? WindowMode::multiplicative : WindowMode::additive;
    const double width = multiplicative ? *cfg.eps : cfg.length.value_or(1.0);
    const BoundKind bound = cfg.bound.empty() ? (multiplicative ? BoundKind::turan_dk : BoundKind::turan_m)
                                              : parse_bound_kind(cfg.bound);
    const SpectrumReport rep = spectrum_report(p, cfg.k.value_or(2), mode, width, bound);
    emit(cfg, out, rep.to_json().dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const PointSet p = parse_pointset(cfg.in);
    const int k = cfg.k.value_or(2);
    const double eps = cfg.eps.value_or(0.1);
    nlohmann::json verdict;
    verdict["n"] = p.size();
    verdict["dim"] = p.dim();
    bool all_ok = true;
    for (const auto& check : split_checks(cfg.check)) {
        nlohmann::json j;
        if (check == "k-distance") {
            const auto v = verify_k_distance_set(p, k);
            j = {{"ok", v.ok}, {"k", k}, {"clusters", v.clusters.to_json()}};
        } else if (check == "weak-eps") {
            const auto v = verify_weak_eps_k(p, eps);
            j = {{"ok", v.window_count <= static_cast<std::size_t>(k)}, {"k", k}, {"eps", eps},
                 {"window_count", v.window_count}, {"anchors", v.anchors}};
        } else if (check == "schuette") {
            const bool ok = check_schuette(p);
            j = {{"ok", ok}, {"ratio", max_min_ratio(p)}, {"bound", schuette_bound(static_cast<int>(p.dim()))}};
        } else if (check == "certify") {
            const int d = cfg.d.value_or(static_cast<int>(p.dim()));
            const auto tree = certify_decomposition(p, d, k, eps, cfg.ratio_threshold.value_or(10.0));
            j = {{"ok", tree.ok()}, {"failures", tree.failures()}, {"tree", tree.to_json()}};
        } else {
            throw InputError("unknown check '" + check + "'");
        }
        all_ok = all_ok && j["ok"].get<bool>();
        verdict["checks"][check] = j;
    }
    verdict["ok"] = all_ok;
    emit(cfg, out, verdict.dump(2) + "\n");
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    const auto rows = run_acceptance(cfg.seed);
    emit(cfg, out, acceptance_markdown(rows));
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const CriterionResult& r) { return r.passed; });
    return ok ? kExitOk : kExitCheckFailed;
}

nlohmann::json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace

void RunConfig::validate() const {
    require(std::find(kCommands.begin(), kCommands.end(), command) != kCommands.end(),
            "unknown command '" + command + "'");
    if (d) require(*d >= 1, "--d must be >= 1");
    if (k) require(*k >= 1, "--k must be >= 1");
    if (n) require(*n >= 0, "--n must be >= 0");
    if (eps) require(*eps > 0.0, "--eps must be positive");
    if (length) require(*length > 0.0, "--length must be positive");
    if (command == "generate") {
        require(!construction.empty(), "generate needs --construction");
        const auto& names = construction_names();
        require(std::find(names.begin(), names.end(), construction) != names.end(),
                "unknown construction '" + construction + "'");
        require(!out.empty(), "generate needs --out");
    } else if (command == "analyze" || command == "verify") {
        require(!in.empty(), command + " needs --in");
        if (command == "analyze") {
            require(!k || *k <= 8, "analyze supports k <= 8");
        } else {
            for (const auto& c : split_checks(check)) {
                require(std::find(kChecks.begin(), kChecks.end(), c) != kChecks.end(), "unknown check '" + c + "'");
            }
        }
    } else if (command == "turan") {
        require(n.has_value() && s.has_value(), "turan needs --n and --s");
        require(*s >= 2, "--s must be >= 2");
    } else if (command == "mdk") {
        require(d.has_value() && k.has_value(), "mdk needs --d and --k");
    }
}

int run(const RunConfig& config, std::ostream& out) {
    try {
        config.validate();
        if (config.command == "generate") {
            return cmd_generate(config, out);
        }
        if (config.command == "analyze") {
            return cmd_analyze(config, out);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out);
        }
        if (config.command == "turan") {
            out << turan_number(*config.n, *config.s) << "\n";
            return kExitOk;
        }
        if (config.command == "mdk") {
            const MdkResult r = maximize_m(*config.d, *config.k);
            out << r.value << "\n" << witness_text(r.witness) << "\n";
            return kExitOk;
        }
        return cmd_reproduce(config, out);
    } catch (const ParseError& e) {
        auto j = error_json("parse", e.what());
        j["error"]["line"] = e.line();
        out << j.dump() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        out << error_json("input", e.what()).dump() << "\n";
        return kExitInputError;
    } catch (const EmptyResultError& e) {
        out << error_json("input", e.what()).dump() << "\n";
        return kExitInputError;
    } catch (const UnsupportedError& e) {
        out << error_json("unsupported", e.what()).dump() << "\n";
        return kExitUnsupported;
    } catch (const ResourceError& e) {
        out << error_json("resource", e.what()).dump() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        out << error_json("internal", e.what()).dump() << "\n";
        return kExitInputError;
    }
}

} // namespace neardist

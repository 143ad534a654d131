#include "lef/jobs.hpp"

#include <sstream>
#include <vector>

#include "lef/identities.hpp"
#include "lef/lefschetz.hpp"

namespace lef {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(const JobConfig& cfg, const std::string& key, int fallback) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) return fallback;
    try {
        size_t pos = 0;
        int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(0, 0, "malformed integer for '" + key + "': " + it->second);
    }
}

Rational to_rational(const JobConfig& cfg, const std::string& key, const Rational& fallback) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) return fallback;
    try {
        return Rational::parse(it->second);
    } catch (const std::exception&) {
        throw ConfigError(0, 0, "malformed rational for '" + key + "': " + it->second);
    }
}

SymbolDatum symbol_from(const JobConfig& cfg) {
    std::string c = cfg.get("complex", "de_rham");
    int j = to_int(cfg, "j", 0);
    int lift = cfg.get("lift", "+") == "-" ? -1 : +1;
    if (c == "de_rham" || c == "derham" || c == "de-rham")
        return SymbolDatum::classical(ComplexKind::DE_RHAM);
    if (c == "signature") return SymbolDatum::classical(ComplexKind::SIGNATURE);
    if (c == "dolbeault") return SymbolDatum::classical(ComplexKind::DOLBEAULT, j);
    if (c == "spin") return SymbolDatum::classical(ComplexKind::SPIN, 0, lift);
    throw ConfigError(0, 0, "unknown complex: " + c);
}

size_t current_index(const std::vector<FixedComponentModel>& comps, const std::string& name) {
    for (size_t i = 0; i < comps[0].currents.size(); ++i)
        if (comps[0].currents[i].name() == name) return i;
    throw ConfigError(0, 0, "unknown current: " + name);
}

nlohmann::json genus_job(const JobConfig& cfg) {
    std::string space = cfg.need("space");
    int q = to_int(cfg, "q", 2);
    std::string genus = cfg.get("genus", "ahat");
    SpaceModel m;
    if (space == "cp")
        m = build_cp(q);
    else if (space == "kp")
        m = build_kp(q - 1);
    else
        throw ConfigError(0, 0, "unknown builder: " + space);
    if (genus != "ahat" && genus != "lgenus")
        throw ConfigError(0, 0, "unknown genus: " + genus);
    QSeries f = named_series(genus, m.ring->degree_cap() + 4);
    Rational v = integrate(genus_of_total_class(f, *m.tangent_class)).to_rational();
    return {{"job", "genus"}, {"space", m.name}, {"genus", genus}, {"value", v.str()}};
}

nlohmann::json lefschetz_job(const JobConfig& cfg) {
    int k = to_int(cfg, "k", 1);
    auto comps = build_universal_example(k);
    SymbolDatum sym = symbol_from(cfg);
    size_t ci = current_index(comps, cfg.get("current", "1"));
    std::string route_name = cfg.get("route", "general");
    Route route = route_name == "strict"   ? Route::STRICT
                  : route_name == "basic3" ? Route::BASIC3
                                           : Route::GENERAL;
    Cyclotomic total = lefschetz_total(comps, sym, ci, route);
    nlohmann::json j{{"job", "lefschetz"},
                     {"space", "universal k=" + std::to_string(k)},
                     {"complex", sym.complex_name()},
                     {"current", comps[0].currents[ci].name()},
                     {"route", route_name},
                     {"value", cyclotomic_to_json(total)}};
    if (cfg.params.count("kappa")) {
        long kappa = to_int(cfg, "kappa", 8);
        j["integrality"] = {{"kappa", kappa},
                            {"verdict", is_cyclotomic_integer(total, kappa)}};
    } else {
        j["integrality"] = nullptr;
    }
    return j;
}

nlohmann::json rigidity_job(const JobConfig& cfg) {
    Rational s = to_rational(cfg, "s", Rational(1));
    SpaceModel z1 = product(build_atiyah_Z(s), build_circle());
    Current dvol = Current::basic_form(z1.ring->base_ring()->var("w"), "dvol");
    RigidityReport r = rigidity_obstruction(z1, dvol);
    return {{"job", "rigidity"},
            {"space", z1.name},
            {"s", s.str()},
            {"value", cyclotomic_to_json(r.value)},
            {"verdict", r.verdict()}};
}

nlohmann::json verify_job(const JobConfig& cfg) {
    std::string id = cfg.need("identity");
    IdentityResult r;
    if (id == "coth-cancellation")
        r = verify_coth_cancellation(to_int(cfg, "n", 4));
    else if (id == "coth-bernoulli")
        r = verify_coth_bernoulli(to_int(cfg, "truncation", 19));
    else if (id == "sqrt")
        r = verify_sqrt_claim(to_int(cfg, "n", 30));
    else if (id == "ahat-cp")
        r = verify_ahat_cp(to_int(cfg, "q_max", 8));
    else if (id == "ahat-kp")
        r = verify_ahat_kp(to_int(cfg, "q_max", 6));
    else if (id == "ch-w")
        r = verify_ch_W(to_int(cfg, "k_max", 4));
    else
        throw ConfigError(0, 0, "unknown identity: " + id);
    nlohmann::json j = r.to_json();
    j["job"] = "verify";
    return j;
}

nlohmann::json bott_taubes_job(const JobConfig& cfg) {
    int k = to_int(cfg, "k", 1);
    int n = to_int(cfg, "n", 0);
    int q_order = to_int(cfg, "max_n", 4);
    bool spin = cfg.get("variant", "lgenus") == "spin";
    auto comps = build_universal_example(k);
    size_t ci = current_index(comps, cfg.get("current", "1"));
    Cyclotomic total(0);
    for (const auto& c : comps)
        total += bott_taubes_value(c, n, c.currents[ci], q_order, spin);
    return {{"job", "bott-taubes"},
            {"space", "universal k=" + std::to_string(k)},
            {"n", n},
            {"variant", spin ? "spin" : "lgenus"},
            {"value", cyclotomic_to_json(total.canonical())}};
}

nlohmann::json integrality_job(const JobConfig& cfg) {
    int k = to_int(cfg, "k", 1);
    long kappa = to_int(cfg, "kappa", 8);
    auto comps = build_universal_example(k);
    SymbolDatum sym = symbol_from(cfg);
    LefschetzReport r = integrality_characteristic_number(comps, sym, std::nullopt, kappa);
    nlohmann::json j = r.to_json();
    j["job"] = "integrality";
    j["space"] = "universal k=" + std::to_string(k);
    return j;
}

}  // namespace

const std::string& JobConfig::need(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw ConfigError(0, 0, "missing required key: " + key);
    return it->second;
}

std::string JobConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

JobKind job_kind_from_name(const std::string& name) {
    if (name == "genus") return JobKind::GENUS;
    if (name == "lefschetz") return JobKind::LEFSCHETZ;
    if (name == "rigidity") return JobKind::RIGIDITY;
    if (name == "verify") return JobKind::VERIFY;
    if (name == "bott-taubes") return JobKind::BOTT_TAUBES;
    if (name == "integrality") return JobKind::INTEGRALITY;
    throw ConfigError(0, 0, "unknown job kind: " + name);
}

JobConfig parse_config(const std::string& text) {
    JobConfig cfg;
    bool have_job = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (trim(line).empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, 1, "expected `key = value`, got: " + trim(line));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        int vcol = static_cast<int>(eq) + 2;
        if (key.empty()) throw ConfigError(lineno, 1, "empty key");
        if (value.empty()) throw ConfigError(lineno, vcol, "empty value for key: " + key);
        if (key == "job") {
            try {
                cfg.kind = job_kind_from_name(value);
            } catch (const ConfigError& e) {
                throw ConfigError(lineno, vcol, e.what());
            }
            have_job = true;
            continue;
        }
        if (key == "theta") {
            Rational t;
            try {
                t = Rational::parse(value);
            } catch (const std::exception&) {
                throw ConfigError(lineno, vcol, "malformed rational: " + value);
            }
            if (!(Rational(0) < t) || !(t < Rational(1)))
                throw ConfigError(lineno, vcol, "θ must lie in (0,π)");
        }
        cfg.params[key] = value;
    }
    if (!have_job) throw ConfigError(lineno, 1, "missing `job = ...` line");
    return cfg;
}

JobConfig parse_job_args(JobKind kind, const std::vector<std::string>& tokens) {
    JobConfig cfg;
    cfg.kind = kind;
    for (const auto& t : tokens) {
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(0, 0, "expected key=value argument, got: " + t);
        std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(0, 0, "malformed key=value argument: " + t);
        if (key == "theta") {
            Rational r;
            try {
                r = Rational::parse(value);
            } catch (const std::exception&) {
                throw ConfigError(0, 0, "malformed rational: " + value);
            }
            if (!(Rational(0) < r) || !(r < Rational(1)))
                throw ConfigError(0, 0, "θ must lie in (0,π)");
        }
        cfg.params[key] = value;
    }
    return cfg;
}

nlohmann::json run_job(const JobConfig& cfg) {
    switch (cfg.kind) {
        case JobKind::GENUS: return genus_job(cfg);
        case JobKind::LEFSCHETZ: return lefschetz_job(cfg);
        case JobKind::RIGIDITY: return rigidity_job(cfg);
        case JobKind::VERIFY: return verify_job(cfg);
        case JobKind::BOTT_TAUBES: return bott_taubes_job(cfg);
        case JobKind::INTEGRALITY: return integrality_job(cfg);
    }
    throw std::logic_error("unreachable job kind");
}

bool report_failed(const nlohmann::json& report) {
    if (report.contains("verdict")) {
        const auto& v = report["verdict"];
        if (v.is_boolean() && !v.get<bool>()) return true;
    }
    if (report.contains("integrality") && report["integrality"].is_object() &&
        report["integrality"].contains("verdict") &&
        !report["integrality"]["verdict"].get<bool>())
        return true;
    return false;
}

namespace {

bool looks_like_cyclotomic(const nlohmann::json& v) {
    return v.is_object() && v.contains("conductor") && v.contains("coeffs");
}

std::string approx_of(const nlohmann::json& v) {
    std::vector<Rational> coeffs;
    for (const auto& c : v["coeffs"]) coeffs.push_back(Rational::parse(c.get<std::string>()));
    Cyclotomic z = Cyclotomic::from_poly(v["conductor"].get<long>(), std::move(coeffs));
    auto e = z.embed();
    std::ostringstream out;
    out.precision(6);
    out << e.real();
    if (e.imag() >= 0)
        out << " + " << e.imag() << "i";
    else
        out << " - " << -e.imag() << "i";
    return out.str();
}

void render_entry(std::ostringstream& out, const std::string& prefix,
                  const nlohmann::json& v) {
    if (looks_like_cyclotomic(v)) {
        out << prefix << ": conductor " << v["conductor"].get<long>() << ", coeffs [";
        bool first = true;
        for (const auto& c : v["coeffs"]) {
            if (!first) out << ", ";
            out << c.get<std::string>();
            first = false;
        }
        out << "]  ~ " << approx_of(v) << " (approx)\n";
        return;
    }
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            render_entry(out, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        return;
    }
    if (v.is_null()) {
        out << prefix << ": -\n";
        return;
    }
    if (v.is_string()) {
        out << prefix << ": " << v.get<std::string>() << "\n";
        return;
    }
    out << prefix << ": " << v.dump() << "\n";
}

}  // namespace

std::string render_table(const nlohmann::json& report) {
    std::ostringstream out;
    render_entry(out, "", report);
    return out.str();
}

}  // namespace lef

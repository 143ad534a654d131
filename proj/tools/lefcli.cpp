#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lef/jobs.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lef::ConfigError(0, 0, "cannot open config file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << content;
    }
    fs::rename(tmp, path);
}

/// Runs one job; prints the table, optionally writes JSON. Returns exit code.
int run_one(const lef::JobConfig& cfg, const std::string& json_path) {
    nlohmann::json report = lef::run_job(cfg);
    std::cout << lef::render_table(report);
    if (!json_path.empty()) write_atomic(json_path, report.dump(2) + "\n");
    return lef::report_failed(report) ? 1 : 0;
}

int run_subcommand(lef::JobKind kind, const std::string& config_path,
                   const std::vector<std::string>& tokens, const std::string& json_path,
                   int truncation, int max_n) {
    lef::JobConfig cfg;
    if (!config_path.empty()) {
        cfg = lef::parse_config(read_file(config_path));
        if (cfg.kind != kind)
            throw lef::ConfigError(0, 0, "config job kind does not match the subcommand");
        for (const auto& t : tokens) {
            auto extra = lef::parse_job_args(kind, {t});
            for (const auto& [k, v] : extra.params) cfg.params[k] = v;
        }
    } else {
        cfg = lef::parse_job_args(kind, tokens);
    }
    if (truncation > 0 && !cfg.params.count("truncation"))
        cfg.params["truncation"] = std::to_string(truncation);
    if (max_n > 0 && !cfg.params.count("max_n"))
        cfg.params["max_n"] = std::to_string(max_n);
    return run_one(cfg, json_path);
}

int run_batch(const std::string& dir, const std::string& json_dir) {
    std::vector<fs::path> configs;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".cfg")
            configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    if (configs.empty()) throw lef::ConfigError(0, 0, "no .cfg files in: " + dir);
    int worst = 0;
    for (const auto& p : configs) {
        std::cout << "== " << p.filename().string() << " ==\n";
        lef::JobConfig cfg = lef::parse_config(read_file(p.string()));
        nlohmann::json report = lef::run_job(cfg);
        std::cout << lef::render_table(report);
        fs::path out = json_dir.empty() ? p : fs::path(json_dir) / p.filename();
        out.replace_extension(".json");
        write_atomic(out.string(), report.dump(2) + "\n");
        if (lef::report_failed(report)) worst = 1;
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic-class and Lefschetz-number calculator for foliations"};
    app.require_subcommand(1);

    std::string config_path, json_path, batch_dir, batch_json_dir;
    int truncation = 0, max_n = 0;
    app.add_option("--json", json_path, "write the machine report to PATH");
    app.add_option("--truncation", truncation, "series truncation order");
    app.add_option("--max-n", max_n, "q-order for Bott-Taubes expansions");

    struct Sub {
        const char* name;
        const char* desc;
        lef::JobKind kind;
    };
    const Sub subs[] = {
        {"genus", "integrated genus of a model space (space=cp|kp q=Q genus=ahat|lgenus)",
         lef::JobKind::GENUS},
        {"lefschetz", "Lefschetz number of the universal example "
                      "(k=K complex=... current=... [kappa=K] [route=...])",
         lef::JobKind::LEFSCHETZ},
        {"rigidity", "rigidity obstruction of the Atiyah model (s=p/q)",
         lef::JobKind::RIGIDITY},
        {"verify", "exact identity verification (identity=... n=...)",
         lef::JobKind::VERIFY},
        {"bott-taubes", "q-expansion coefficients (k=K n=N [max_n=Q])",
         lef::JobKind::BOTT_TAUBES},
        {"integrality", "integrality characteristic number (k=K complex=... kappa=K)",
         lef::JobKind::INTEGRALITY},
    };

    std::vector<std::string> tokens;
    for (const auto& s : subs) {
        auto* cmd = app.add_subcommand(s.name, s.desc);
        cmd->fallthrough();  // let --json/--truncation/--max-n follow the subcommand
        cmd->add_option("--config", config_path, "read the job from a config file");
        cmd->add_option("args", tokens, "key=value job parameters");
        lef::JobKind kind = s.kind;
        cmd->callback([&, kind] {
            std::exit(run_subcommand(kind, config_path, tokens, json_path, truncation, max_n));
        });
    }

    auto* batch = app.add_subcommand("batch", "run every .cfg job in a directory");
    batch->add_option("dir", batch_dir, "directory of .cfg files")->required();
    batch->add_option("--out", batch_json_dir, "directory for the .json reports");
    batch->callback([&] { std::exit(run_batch(batch_dir, batch_json_dir)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const lef::ConfigError& e) {
        std::cerr << "config error";
        if (e.line() > 0) std::cerr << " (line " << e.line() << ", col " << e.col() << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lef/jobs.hpp"

using namespace lef;

TEST_CASE("parse_config") {
    JobConfig cfg = parse_config(
        "# universal example job\n"
        "job = lefschetz\n"
        "k = 2\n"
        "complex = spin   # with the + lift\n"
        "lift = +\n"
        "current = eta1*beta1\n"
        "kappa = 8\n");
    CHECK(cfg.kind == JobKind::LEFSCHETZ);
    CHECK(cfg.need("k") == "2");
    CHECK(cfg.need("complex") == "spin");
    CHECK(cfg.get("route", "general") == "general");
}

TEST_CASE("parse_config diagnostics") {
    try {
        parse_config("job = lefschetz\nnot a key value line\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 1);
    }
    try {
        parse_config("job = lefschetz\ntheta = 0\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()) == "θ must lie in (0,π)");
    }
    CHECK_THROWS_AS(parse_config("job = dance\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("k = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("job = verify\ntheta = x/y\n"), ConfigError);
}

TEST_CASE("genus jobs") {
    JobConfig cfg = parse_job_args(JobKind::GENUS, {"space=cp", "q=3", "genus=ahat"});
    auto j = run_job(cfg);
    CHECK(j["value"] == "0/1");
    CHECK(j["space"] == "CP_3");
    CHECK_FALSE(report_failed(j));

    auto j2 = run_job(parse_job_args(JobKind::GENUS, {"space=cp", "q=4"}));
    CHECK(j2["value"] == "3/128");
    auto j3 = run_job(parse_job_args(JobKind::GENUS, {"space=kp", "q=4"}));
    CHECK(j3["value"] == "0/1");
    CHECK_THROWS_AS(run_job(parse_job_args(JobKind::GENUS, {"space=hp", "q=2"})),
                    ConfigError);
    CHECK_THROWS_AS(run_job(parse_job_args(JobKind::GENUS, {"space=cp", "q=two"})),
                    ConfigError);
}

TEST_CASE("lefschetz job reproduces the signature value") {
    auto j = run_job(parse_job_args(JobKind::LEFSCHETZ,
                                    {"k=1", "complex=signature", "current=1", "kappa=8"}));
    CHECK(j["value"]["conductor"] == 4);
    std::vector<std::string> coeffs = j["value"]["coeffs"];
    CHECK(coeffs == std::vector<std::string>{"0/1", "-2/1"});
    CHECK(j["integrality"]["verdict"] == true);
    CHECK_FALSE(report_failed(j));
    // every route agrees through the CLI surface
    for (const char* route : {"strict", "general", "basic3"}) {
        auto jr = run_job(parse_job_args(
            JobKind::LEFSCHETZ,
            {"k=2", "complex=dolbeault", "j=1", "current=1", std::string("route=") + route}));
        std::vector<std::string> c = jr["value"]["coeffs"];
        CHECK(c == std::vector<std::string>{"-1/1", "1/1"});
    }
    CHECK_THROWS_AS(
        run_job(parse_job_args(JobKind::LEFSCHETZ, {"k=1", "current=eta9*beta9"})),
        ConfigError);
}

TEST_CASE("rigidity and integrality jobs") {
    auto j = run_job(parse_job_args(JobKind::RIGIDITY, {"s=2"}));
    CHECK(j["verdict"] == "OBSTRUCTED");
    std::vector<std::string> c = j["value"]["coeffs"];
    CHECK(c == std::vector<std::string>{"-1/12"});

    auto bad = run_job(parse_job_args(JobKind::INTEGRALITY,
                                      {"k=1", "complex=signature", "kappa=2"}));
    CHECK(bad["integrality"]["verdict"] == false);
    CHECK(report_failed(bad));
}

TEST_CASE("verify jobs and failure signaling") {
    auto ok = run_job(parse_job_args(JobKind::VERIFY, {"identity=coth-cancellation", "n=4"}));
    CHECK(ok["verdict"] == true);
    CHECK_FALSE(report_failed(ok));
    CHECK_THROWS_AS(run_job(parse_job_args(JobKind::VERIFY, {"identity=zeta"})), ConfigError);
    CHECK_THROWS_AS(run_job(parse_job_args(JobKind::VERIFY, {})), ConfigError);
}

TEST_CASE("bott-taubes job") {
    auto j = run_job(parse_job_args(JobKind::BOTT_TAUBES, {"k=1", "n=0"}));
    std::vector<std::string> c = j["value"]["coeffs"];
    CHECK(c == std::vector<std::string>{"2/1"});
}

TEST_CASE("reports are byte-stable") {
    for (auto tokens : {std::vector<std::string>{"k=2", "complex=spin", "lift=-",
                                                 "current=eta1*beta1", "kappa=8"}}) {
        auto a = run_job(parse_job_args(JobKind::LEFSCHETZ, tokens)).dump(2);
        auto b = run_job(parse_job_args(JobKind::LEFSCHETZ, tokens)).dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("render_table flags approximations") {
    auto j = run_job(parse_job_args(JobKind::LEFSCHETZ, {"k=1", "complex=signature"}));
    std::string t = render_table(j);
    CHECK(t.find("(approx)") != std::string::npos);
    CHECK(t.find("conductor 4") != std::string::npos);
    CHECK(render_table(j) == t);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using markov::cli::dispatch;
using markov::cli::op_registry;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string data_dir = MARKOV_DATA_DIR;

}  // namespace

TEST_CASE("every operation has exactly one binding") {
    const std::vector<std::string> ops = {
        "convergents", "periodic_value", "surd_cf", "f_value", "markov_value", "lagrange_value",
        "approximation_diagnostics", "khintchine_levy_estimate", "vieta_children", "enumerate_triples",
        "lagrange_number", "unicity_report", "validate", "cylinder_cover", "thickness_bound",
        "minkowski_sum_cover", "gap_lemma_certificate", "hall_density_check", "cover_dim_upper",
        "cover_dim_lower", "thermo_dimension", "dimension_function_lower", "spectrum_below_3",
        "named_constants", "form_minimum", "dynamical_spectra"};
    const std::set<std::string> subcommands = {"cf", "tree", "cover", "sumset", "dim", "dcurve", "spectra"};
    for (const auto& op : ops) {
        CAPTURE(op);
        int count = 0;
        for (const auto& b : op_registry())
            if (b.op == op) ++count;
        CHECK(count == 1);
    }
    CHECK(op_registry().size() == ops.size());
    for (const auto& b : op_registry()) {
        CAPTURE(b.op);
        CHECK(subcommands.count(b.subcommand) == 1);
        REQUIRE(!b.example.empty());
        CHECK(b.example.front() == b.subcommand);
    }
}

TEST_CASE("every registry example runs") {
    for (const auto& b : op_registry()) {
        CAPTURE(b.op);
        Run r = run(b.example);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        json j = json::parse(r.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("command").get<std::string>().rfind(b.subcommand, 0) == 0);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    Run unknown = run({"bogus"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
    CHECK(run({"cf", "nosuchaction"}).code == 1);
    CHECK(run({"cf", "surd", "--surd", "3/2"}).code == 2);
    CHECK(run({"cf", "f", "--word", "(0)* | (1)*"}).code == 2);
    CHECK(run({"cover", "validate", "--spec", "alphabet=1; forbidden=1"}).code == 2);
    CHECK(run({"spectra", "form", "--a", "1", "--b", "1", "--c", "-1"}).code == 2);
    CHECK(run({"--budget", "1000", "cover", "cylinders", "--spec", "C(4)", "--depth", "12"}).code == 3);
    CHECK(run({"tree", "--zmax", "0"}).code == 2);
    CHECK(run({"tree", "--zmax", "abc"}).code == 2);
    CHECK(run({"tree", "--nosuchflag"}).code == 1);
}

TEST_CASE("documented examples") {
    json tree = json::parse(run({"tree", "--zmax", "5"}).out);
    CHECK(tree.at("triples").size() == 3);

    Run constants = run({"spectra", "constants", "--precision", "40"});
    CHECK(constants.out.find("3.2930442439") != std::string::npos);

    json dim = json::parse(run({"dim", "--spec", data_dir + "/X.spec", "--method", "thermo", "--wordlen", "8"}).out);
    CHECK(std::abs(std::stod(dim.at("point").get<std::string>()) - 0.4816) <= 0.005);

    json k = json::parse(run({"dim", "--spec", data_dir + "/K.spec", "--method", "cover", "--depth", "8"}).out);
    CHECK(std::stod(k.at("lower").get<std::string>()) > 0.353);
    CHECK(std::stod(k.at("upper").get<std::string>()) < 0.35792);

    Run csv = run({"cover", "cylinders", "--spec", "alphabet=1,2", "--depth", "1", "--format", "csv"});
    CHECK(csv.out == "depth,index,word,lo,hi\n1,0,2,1/3,1/2\n1,1,1,1/2,1\n");
}

TEST_CASE("output is deterministic") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "markov_cli_test";
    fs::create_directories(dir);
    const std::vector<std::vector<std::string>> commands = {
        {"cf", "kl", "--samples", "300", "--depth", "200", "--seed", "7"},
        {"spectra", "dyn", "--spec", "X", "--f-table", "truncated:2", "--max-period", "5"},
        {"cover", "cylinders", "--spec", data_dir + "/X.spec", "--depth", "6", "--format", "csv"},
        {"dcurve", "--tmin", "3", "--tmax", "3.5", "--steps", "4", "--wordlen", "6"},
    };
    for (const auto& cmd : commands) {
        std::vector<std::string> a = cmd, b = cmd;
        a.insert(a.end(), {"--out", (dir / "a.out").string()});
        b.insert(b.end(), {"--out", (dir / "b.out").string(), "--threads", "4"});
        REQUIRE(run(a).code == 0);
        REQUIRE(run(b).code == 0);
        CHECK(!slurp(dir / "a.out").empty());
        CHECK(slurp(dir / "a.out") == slurp(dir / "b.out"));
    }
    fs::remove_all(dir);
}

#include "delpezzo/catalog.hpp"
#include "delpezzo/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace dp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("delpezzo-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string &args, const std::string &env = "env -u DELPEZZO_CATALOG")
{
    fs::path o = scratch() / "stdout", e = scratch() / "stderr";
    std::string cmd = env + " '" + std::string(DELPEZZO_CLI_PATH) + "' " + args + " > '" + o.string() + "' 2> '" +
                      e.string() + "'";
    int st = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = slurp(o);
    r.err = slurp(e);
    return r;
}

fs::path write_file(const std::string &name, const std::string &text)
{
    fs::path p = scratch() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

bool has(const std::string &s, const std::string &x) { return s.find(x) != std::string::npos; }

} // namespace

TEST_CASE("validate")
{
    Run r = run("validate");
    CHECK(r.code == kOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["families"] == 35);
    CHECK(j["diagnostics"].empty());
}

TEST_CASE("family 22 on n >= 3 carries both headline facts")
{
    Run r = run("family 22 --ray 3 --format json");
    CHECK(r.code == kOk);
    auto j = nlohmann::json::parse(r.out);
    auto &rep = j["reports"][0];
    CHECK(rep["family"] == 22);
    CHECK(rep["verdict"] == "noCylinderCertified");
    CHECK(rep["stability"]["status"] == "kUnstable");
    CHECK(rep["stability"]["source"] == "criterion");
    CHECK(rep["stability"]["certificate"]["verdict"] == "holds");
    for (const auto &c : rep["cases"])
        CHECK(c["holds"] == true);

    Run md = run("family 22 --ray 3 --format md");
    CHECK(md.code == kOk);
    CHECK(has(md.out, "### No. 22"));
    CHECK(has(md.out, "noCylinderCertified"));
}

TEST_CASE("family 1 at n = 2 is not certified")
{
    Run r = run("family 1 --n 2");
    CHECK(r.code == kVerdictFailure);
    CHECK(has(r.out, "notCertified"));
}

TEST_CASE("usage errors")
{
    CHECK(run("").code == kUsage);
    CHECK(run("family 22 --n 4 --ray 3").code == kUsage);
    CHECK(run("family 99").code == kUsage);
    CHECK(run("family 1 --n 0").code == kUsage);
    CHECK(run("oracle --oracle-range 9..3").code == kUsage);
    CHECK(run("validate --format xml").code == kUsage);
    CHECK(run("--help").code == kOk);
}

TEST_CASE("catalog errors")
{
    fs::path bad = write_file("bad.json", "{ \"format\": ");
    Run r = run("validate --catalog '" + bad.string() + "'");
    CHECK(r.code == kCatalogError);
    CHECK(has(r.err, "line"));
    CHECK(run("validate --catalog /nonexistent.json").code == kCatalogError);
}

TEST_CASE("diagnostics make validate exit 1")
{
    auto doc = nlohmann::json::parse(embedded_catalog_text());
    for (auto &f : doc["families"])
        if (f["no"] == 24)
            f["index"] = "3";
    fs::path p = write_file("index.json", doc.dump());
    Run r = run("validate --catalog '" + p.string() + "'");
    CHECK(r.code == kVerdictFailure);
    CHECK(has(r.out, "Table 1 I-column mismatch (expected 2)"));

    Run env = run("validate", "DELPEZZO_CATALOG='" + p.string() + "'");
    CHECK(env.code == kVerdictFailure);
    // an explicit path wins over the environment
    fs::path good = write_file("good.json", std::string(embedded_catalog_text()));
    CHECK(run("validate --catalog '" + good.string() + "'", "DELPEZZO_CATALOG='" + p.string() + "'").code == kOk);
}

TEST_CASE("report covers every family")
{
    Run r = run("report");
    CHECK(r.code == kOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["reports"].size() == 35);
    CHECK(j["stability"].size() == 35);
    CHECK(j["dstar"].size() == 10);
    for (const auto &rep : j["reports"]) {
        int no = rep["family"];
        if (no <= 22) {
            CHECK(rep["verdict"] == "noCylinderCertified");
            CHECK(rep["stability"]["status"] == "kUnstable");
        } else {
            CHECK(rep["verdict"] == "noCylinderByAlpha");
        }
    }
}

TEST_CASE("oracle")
{
    Run r = run("oracle --oracle-range 3..200 --family 1,22");
    CHECK(r.code == kOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["clean"] == true);
    CHECK_FALSE(j["cases"].empty());
}

TEST_CASE("output is deterministic and --out writes the same bytes")
{
    Run a = run("report --format md");
    Run b = run("report --format md");
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    fs::path p = scratch() / "report.md";
    Run c = run("report --format md --out '" + p.string() + "'");
    CHECK(c.code == kOk);
    CHECK(c.out.empty());
    CHECK(slurp(p) == a.out);
}

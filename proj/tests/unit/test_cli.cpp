#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"

namespace fs = std::filesystem;
using pbec::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "pbec");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "pbec_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& p, const std::string& s)
{
    std::ofstream(p) << s;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

// row whose first column equals x
std::vector<double> row_at(const std::string& csv, const std::string& x)
{
    std::stringstream ss(csv);
    std::string line;
    while (std::getline(ss, line)) {
        const auto cells = split(line);
        if (!cells.empty() && cells[0] == x) {
            std::vector<double> v;
            for (const auto& c : cells) v.push_back(std::stod(c));
            return v;
        }
    }
    return {};
}

} // namespace

TEST_SUITE("cli_tool")
{
    TEST_CASE("bounds: header, golden rows and determinism")
    {
        const Result a = call({"bounds", "--q", "2", "--fix-T", "0.25", "--steps", "51"});
        REQUIRE(a.code == 0);
        CHECK(a.out.rfind("x,classical_gv,classical_h,gv,h,r2lvl,r3lvl\n", 0) == 0);
        const auto mid = row_at(a.out, "0.5");
        REQUIRE(mid.size() == 7);
        CHECK(std::abs(mid[3] - 0.18872) < 1e-4);
        CHECK(std::abs(mid[6] - 0.09436) < 1e-4);
        CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 52);
        CHECK(call({"bounds", "--q", "2", "--fix-T", "0.25", "--steps", "51"}).out == a.out);

        const Result b = call({"bounds", "--fix-W", "0.3", "--steps", "101"});
        REQUIRE(b.code == 0);
        const auto half = row_at(b.out, "0.5");
        REQUIRE(half.size() == 7);
        CHECK(std::abs(half[3] - 0.4) < 1e-12);
        CHECK(std::abs(half[4] - 0.7) < 1e-12);

        const Result z = call({"bounds", "--fix-T", "0", "--steps", "5"});
        std::stringstream ss(z.out);
        std::string line;
        std::getline(ss, line);
        while (std::getline(ss, line)) {
            const auto cells = split(line);
            for (std::size_t i = 1; i < cells.size(); ++i) CHECK(cells[i] == "1");
        }

        const fs::path out = scratch("sweep.csv");
        CHECK(call({"bounds", "--fix-T", "0.25", "--out", out.string()}).code == 0);
        std::ifstream in(out);
        std::stringstream file;
        file << in.rdbuf();
        CHECK(file.str() == a.out);
    }

    TEST_CASE("bounds: parameter and I/O errors")
    {
        CHECK(call({"bounds"}).code == 2);
        CHECK(call({"bounds", "--fix-T", "0.2", "--fix-W", "0.2"}).code == 2);
        CHECK(call({"bounds", "--fix-T", "1.5"}).code == 2);
        CHECK(call({"bounds", "--fix-T", "0.2", "--steps", "1"}).code == 2);
        CHECK(call({"bounds", "--fix-T", "0.2", "--out", "/nonexistent-dir/x.csv"}).code == 4);
        CHECK(call({"nonsense"}).code == 2);
        CHECK(call({"--help"}).code == 0);
    }

    TEST_CASE("construct then verify in both modes")
    {
        const fs::path code = scratch("c74.code");
        fs::remove(code.string() + ".gcc.json");
        const Result c = call({"construct", "--q", "2", "--n", "7", "--m", "4", "--t", "1", "--w", "1", "--levels", "3", "--out", code.string()});
        REQUIRE(c.code == 0);
        CHECK(c.out.find("certificate: valid") != std::string::npos);
        CHECK(fs::exists(code.string() + ".gcc.json"));

        const fs::path ch = scratch("ch74.json");
        write(ch, R"({"q": 2, "n": 7, "m": 4, "w": 1, "E1": {"ball": 0}, "E2": {"ball": 1}})");
        const Result v = call({"verify", code.string(), ch.string()});
        CHECK(v.code == 0);
        CHECK(v.out.find("CERTIFIED") != std::string::npos);
        const Result o = call({"verify", code.string(), ch.string(), "--oracle"});
        CHECK(o.code == 0);
        CHECK(o.out.find("ORACLE-TRUE") != std::string::npos);

        // the 2-level build of the same instance has no larger rate
        const Result two = call({"construct", "--q", "2", "--n", "7", "--m", "4", "--t", "1", "--w", "1", "--levels", "2"});
        CHECK(two.code == 0);
        auto dim = [](const std::string& s) { return std::stoul(s.substr(s.find("dimension ") + 10)); };
        CHECK(dim(two.out) <= dim(c.out));
    }

    TEST_CASE("construct from a channel file")
    {
        const fs::path ch = scratch("box.json");
        write(ch, R"({"q": 5, "n": 3, "m": 3, "w": 1, "E1": {"box": 0}, "E2": {"box": 1}})");
        const fs::path code = scratch("box.code");
        const Result c = call({"construct", "--channel", ch.string(), "--levels", "2", "--out", code.string()});
        CHECK(c.code == 0);
        CHECK(call({"verify", code.string(), ch.string()}).code == 0);
        CHECK(call({"verify", code.string(), ch.string(), "--oracle"}).code == 0);
    }

    TEST_CASE("construct errors")
    {
        CHECK(call({"construct", "--q", "2", "--n", "7", "--m", "4", "--t", "1", "--w", "5"}).code == 2);
        CHECK(call({"construct", "--q", "6", "--n", "7", "--m", "4", "--t", "1", "--w", "1"}).code == 2);
        CHECK(call({"construct", "--q", "2", "--n", "7", "--m", "4", "--t", "1", "--w", "1", "--levels", "4"}).code == 2);
        CHECK(call({"construct", "--channel", "/nonexistent/ch.json"}).code == 4);
    }

    TEST_CASE("verify verdicts on Example 2 and the full space")
    {
        const fs::path ch = scratch("heset.json");
        write(ch, R"({"q": 2, "n": 4, "m": 2, "w": 1, "E1": {"explicit": [[0,0,0,0]]}, "E2": {"ball": 1}})");
        const fs::path ex2 = scratch("ex2.code");
        write(ex2, "2 8 4\nshape 4 2\n1 1 1 1 0 0 0 0\n0 0 0 0 1 1 1 1\n0 1 0 1 0 1 0 1\n0 0 1 1 0 0 1 1\n");
        const Result a = call({"verify", ex2.string(), ch.string()});
        CHECK(a.code == 0);
        CHECK(a.out.find("ORACLE-TRUE") != std::string::npos);

        const fs::path full = scratch("full.code");
        std::string s = "2 8 8\n";
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) s += (i == j ? "1 " : "0 ");
            s += "\n";
        }
        write(full, s);
        const Result b = call({"verify", full.string(), ch.string()});
        CHECK(b.code == 1);
        CHECK(b.out.find("ORACLE-FALSE") != std::string::npos);

        // a channel too large for the default budget
        const fs::path huge = scratch("huge.json");
        write(huge, R"({"q": 2, "n": 20, "m": 6, "w": 3, "E1": {"ball": 0}, "E2": {"ball": 10}})");
        const fs::path ones = scratch("ones.code");
        std::string row = "2 120 1\nshape 20 6\n";
        for (int i = 0; i < 120; ++i) row += "1 ";
        write(ones, row + "\n");
        const Result c = call({"verify", ones.string(), huge.string()});
        CHECK(c.code == 3);
        CHECK(c.out.find("UNKNOWN(budget)") != std::string::npos);

        CHECK(call({"verify", ex2.string(), huge.string()}).code == 2);
        CHECK(call({"verify", "/nonexistent.code", ch.string()}).code == 4);
        const fs::path broken = scratch("broken.json");
        write(broken, "{\"q\": 2, \"n\": ");
        CHECK(call({"verify", ex2.string(), broken.string()}).code == 2);
    }

    TEST_CASE("examples")
    {
        for (const auto& name : pbec::cli::example_names()) {
            const Result r = call({"example", name});
            CAPTURE(name);
            CHECK(r.code == 0);
            CHECK(r.out.find("[FAIL]") == std::string::npos);
        }
        const Result e4 = call({"example", "e4"});
        CHECK(e4.out.find("0.878") != std::string::npos);
        CHECK(call({"example", "nope"}).code == 2);
    }
}

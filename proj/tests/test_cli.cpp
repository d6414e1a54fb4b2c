#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args)
{
    const std::string cmd = std::string(HEXATILE_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<nlohmann::json> json_lines(const std::string& s)
{
    std::vector<nlohmann::json> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        if (!line.empty())
            out.push_back(nlohmann::json::parse(line));
    return out;
}

std::string tmp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("hexatile_cli_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Cli, CountMacMahon)
{
    const CliRun r = run("count --a 2 --b 2 --c 2 --d 0 --p 0 --parity even --method det");
    ASSERT_EQ(r.code, 0);
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].at("value"), "20");
    EXPECT_EQ(lines[0].at("sign"), 1);
    EXPECT_EQ(lines[0].at("matrix_dim"), 2);
    EXPECT_EQ(lines[0].at("method"), "det");
    EXPECT_GE(lines[0].at("elapsed_ms").get<double>(), 0.0);
    EXPECT_EQ(lines[0].at("spec").at("parity"), "even");
}

TEST(Cli, CountAZero)
{
    const CliRun r = run("count --a 0 --b 3 --c 4 --d 2 --p 1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_lines(r.out).at(0).at("value"), "1");
}

TEST(Cli, CountSeveralMethodsAgree)
{
    const CliRun r = run("count --a 1 --b 2 --c 2 --d 1 --p 0 --method det --method oracle");
    ASSERT_EQ(r.code, 0);
    const auto lines = json_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0].at("value"), "3");
    EXPECT_EQ(lines[1].at("value"), "3");
    EXPECT_EQ(lines[1].at("method"), "oracle");
}

TEST(Cli, CountNegativeOdd)
{
    const CliRun r = run("count --a 4 --b 5 --c 3 --d 3 --p 3 --parity odd --method det --method modular "
                      "--method condense --method oracle");
    ASSERT_EQ(r.code, 0);
    for (const auto& j : json_lines(r.out)) {
        EXPECT_EQ(j.at("value"), "-8008");
        EXPECT_EQ(j.at("sign"), -1);
    }
}

TEST(Cli, CountFormulas)
{
    CliRun r = run("count --a 2 --b 2 --c 2 --d 1 --p 1 --method det --method formula:byun_even --method formula:via_F");
    ASSERT_EQ(r.code, 0);
    for (const auto& j : json_lines(r.out))
        EXPECT_EQ(j.at("value"), "8");

    r = run("count --a 2 --b 3 --c 4 --d 2 --p 1 --method det --method formula:ansatz");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_lines(r.out).size(), 2u);

    r = run("count --a 3 --b 3 --c 3 --d 1 --p 1 --parity odd --method det --method formula:byun_odd");
    ASSERT_EQ(r.code, 0);

    r = run("count --a 1 --b 6 --c 4 --d 3 --p -2 --method formula:reflection_a1 --method det");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_lines(r.out).at(0).at("value"), "205");

    r = run("count --a 3 --b 4 --c 5 --d 2 --p -1 --method formula:p1md_simple --method formula:p1md_sum "
            "--method formula:p1md_polynomial --method det");
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, CountOutOfWindowIsUsageError)
{
    EXPECT_EQ(run("count --a 3 --b 2 --c 2 --d 1 --p 1 --method formula:byun_even").code, 1);
    EXPECT_EQ(run("count --a 3 --b 2 --c 2 --method bogus").code, 1);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("count --b 2 --c 2").code, 1);
    EXPECT_EQ(run("count --a 1 --b 2 --c 2 --parity sideways").code, 1);
    EXPECT_EQ(run("count --a -1 --b 2 --c 2").code, 1);
    EXPECT_EQ(run("verify nosuchsuite").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyLu)
{
    const CliRun r = run("verify lu --amax 6");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("ranges").at("amax"), 6);
}

TEST(Cli, VerifyByun)
{
    EXPECT_EQ(run("verify byun --amax 5").code, 0);
}

TEST(Cli, VerifyAllDefaultRanges)
{
    const CliRun r = run("verify all --amax 4 --bmax 5 --cmax 5 --dmax 3");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("suite"), "all");
    EXPECT_GT(j.at("checks").size(), 50u);
}

TEST(Cli, FitDTwo)
{
    const std::string out = tmp_path("q2.json");
    const CliRun r = run("fit --d 2 --out " + out);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Q(a,b,c,2,p) = a*b + 2*a*p - b*p + c*p - 2*p^2 + b + c - 2"), std::string::npos) << r.out;
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(j.at("d"), 2);
    EXPECT_EQ(j.at("terms").size(), 8u);
}

TEST(Cli, FitDOne)
{
    const std::string out = tmp_path("q1.json");
    const CliRun r = run("fit --d 1 --out " + out);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Q(a,b,c,1,p) = 1\n"), std::string::npos);
}

TEST(Cli, FitInconsistentDegree)
{
    EXPECT_EQ(run("fit --d 2 --degree 1 --out " + tmp_path("bad.json")).code, 2);
    EXPECT_EQ(run("fit --d 0").code, 1);
}

TEST(Cli, Render)
{
    const std::string out = tmp_path("plain.svg");
    ASSERT_EQ(run("render --a 3 --b 4 --c 5 --d 1 --p 0 --out " + out).code, 0);
    const std::string svg = slurp(out);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("class=\"intrusion\""), std::string::npos);
    EXPECT_EQ(svg.find("class=\"lozenge"), std::string::npos);

    const std::string tiled = tmp_path("tiled.svg");
    ASSERT_EQ(run("render --a 2 --b 2 --c 2 --d 1 --p 1 --with-tiling --out " + tiled).code, 0);
    EXPECT_NE(slurp(tiled).find("class=\"lozenge"), std::string::npos);
}

TEST(Cli, RenderUntileable)
{
    EXPECT_NE(run("render --a 3 --b 3 --c 3 --d 1 --p 3 --parity odd --with-tiling --out " + tmp_path("none.svg")).code,
              0);
}

TEST(Cli, Bench)
{
    const std::string csv = tmp_path("bench.csv");
    ASSERT_EQ(run("bench --dims 10,20,30 --csv " + csv).code, 0);
    std::istringstream is(slurp(csv));
    std::vector<std::string> rows;
    for (std::string line; std::getline(is, line);)
        rows.push_back(line);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0], "dim,kernel,elapsed_ms,result_digits");
    EXPECT_EQ(rows[1].rfind("10,bareiss,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("10,modular,", 0), 0u);

    const CliRun r = run("bench --dims 4 --kernel modular");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4,modular,"), std::string::npos);
}

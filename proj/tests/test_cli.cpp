#include <array>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    json parsed() const { return json::parse(out); }
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("teig_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

    static Outcome run(const std::string& args, const std::string& env = "") {
        const std::string cmd = env + " " + TEIG_CLI_PATH + " " + args + " 2>/dev/null";
        Outcome r;
        FILE* pipe = ::popen(cmd.c_str(), "r");
        if (!pipe) return r;
        std::array<char, 4096> buf{};
        std::size_t n = 0;
        while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
        const int status = ::pclose(pipe);
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return r;
    }

    fs::path dir_;
};

std::vector<std::complex<double>> values(const json& arr) {
    std::vector<std::complex<double>> v;
    for (const auto& c : arr) v.emplace_back(c[0].get<double>(), c[1].get<double>());
    return v;
}

void expect_error(const Outcome& r, int code, const std::string& kind) {
    EXPECT_EQ(r.code, code) << r.out;
    const json j = json::parse(r.out, nullptr, false);
    ASSERT_FALSE(j.is_discarded()) << r.out;
    ASSERT_TRUE(j.contains("error")) << r.out;
    EXPECT_EQ(j["error"]["kind"], kind) << r.out;
    EXPECT_TRUE(j["error"]["message"].is_string());
}

}  // namespace

TEST_F(Cli, Classify) {
    const Outcome r = run("classify --n 3 --m 3");
    ASSERT_EQ(r.code, 0);
    const json j = r.parsed();
    EXPECT_EQ(j["dominant"], true);
    EXPECT_EQ(j["reason"], "exceptional-pair");
}

TEST_F(Cli, ExpectedDim) {
    const Outcome r = run("expected-dim --n 3 --m 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["expected_dim"], 45);
}

TEST_F(Cli, CertifyFamily) {
    const Outcome r = run("certify --n 3 --m 2 --trials 3 --seed 1");
    ASSERT_EQ(r.code, 0) << r.out;
    const json j = r.parsed();
    EXPECT_EQ(j["status"], "certified");
    EXPECT_EQ(j["target_rank"], 12);
    EXPECT_EQ(j["points"].size(), 4u);
    EXPECT_EQ(j["points"][3]["label"], "p32");
    EXPECT_EQ(j["points"][3]["rank"], 12);
}

TEST_F(Cli, CertifyRefused) {
    const Outcome r = run("certify --n 5 --m 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.parsed()["status"], "refused");
}

TEST_F(Cli, EigOfZeroTensor) {
    const std::string zero = file("zero_tensor.json", R"({"n":3,"m":2,"slices":[[0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]]})");
    const Outcome r = run("eig --input " + zero);
    ASSERT_EQ(r.code, 0) << r.out;
    const auto v = values(r.parsed()["values"]);
    ASSERT_EQ(v.size(), 12u);
    for (const auto& c : v) EXPECT_EQ(c, std::complex<double>(0.0));
}

TEST_F(Cli, PaperPoints) {
    const Outcome p32 = run("paper-point p32");
    ASSERT_EQ(p32.code, 0);
    const json j = p32.parsed();
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["m"], 2);
    EXPECT_EQ(j["slices"][0][0][0], 1.0);
    EXPECT_EQ(j["slices"][2][5][0], 14.0);
    EXPECT_EQ(j["restriction"].size(), 4u);
    const json p33 = run("paper-point p33").parsed();
    EXPECT_EQ(p33["slices"][2].back()[0], -5.0);
    EXPECT_FALSE(p33["note"].get<std::string>().empty());
    const json p42 = run("paper-point p42").parsed();
    EXPECT_EQ(p42["slices"][3].back()[0], 10.0);
    expect_error(run("paper-point p77"), 1, "unknown-label");
}

TEST_F(Cli, RandomTensorIsDeterministic) {
    const Outcome a = run("random-tensor --n 3 --m 2 --seed 5");
    const Outcome b = run("random-tensor --n 3 --m 2 --seed 5");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run("random-tensor --n 3 --m 2 --seed 6").out);
    EXPECT_EQ(a.out, run("random-tensor --n 3 --m 2", "TEIG_SEED=5").out);
}

TEST_F(Cli, ByteIdenticalResults) {
    const std::string t = file("t.json", run("random-tensor --n 2 --m 3 --seed 2").out);
    EXPECT_EQ(run("charpoly --input " + t).out, run("charpoly --input " + t).out);
    EXPECT_EQ(run("jacobian --input " + t).out, run("jacobian --input " + t).out);
    const std::string s = file("s.json", R"({"values":[[0.1,0.2],[-0.5,0],[0.3,-0.7],[0.9,0.1]]})");
    const Outcome a = run("invert --seed 3 --input " + s);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, run("invert --seed 3 --input " + s).out);
    EXPECT_EQ(a.parsed()["status"], "success");
}

TEST_F(Cli, CharpolyRootsMatchEig) {
    const std::string t = file("t.json", run("random-tensor --n 3 --m 2 --seed 11").out);
    const std::string c = file("c.json", run("charpoly --input " + t).out);
    const auto via_roots = values(run("eig --input " + c).parsed()["values"]);
    const auto direct = values(run("eig --input " + t).parsed()["values"]);
    ASSERT_EQ(via_roots.size(), direct.size());
    for (std::size_t k = 0; k < direct.size(); ++k) EXPECT_LT(std::abs(via_roots[k] - direct[k]), 1e-9);
}

TEST_F(Cli, StdinInput) {
    const std::string t = file("t.json", R"({"n":2,"m":2,"slices":[[2,0,0],[0,0,5]]})");
    const Outcome r = run("charpoly < " + t);
    ASSERT_EQ(r.code, 0);
    const auto c = values(r.parsed()["coeffs"]);
    ASSERT_EQ(c.size(), 5u);
    EXPECT_NEAR(c[0].real(), 100.0, 1e-9);
    EXPECT_NEAR(c[3].real(), -14.0, 1e-9);
}

TEST_F(Cli, OutputFile) {
    const fs::path out = dir_ / "out.json";
    const Outcome r = run("classify --n 2 --m 4 --output " + out.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    EXPECT_EQ(json::parse(in)["reason"], "n-equals-2");
}

TEST_F(Cli, StructuredSpectra) {
    const Outcome s = run("sym-eig --input " + file("f.json", R"({"coeffs":[1,0,0,0]})"));
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(s.parsed()["values"].size(), 4u);
    expect_error(run("sym-eig --input " + file("g.json", R"({"coeffs":[1,0,0,1]})")), 2, "degenerate-numerator");
    const Outcome w = run("wedge-eig --input " + file("w.json", R"({"coeffs":[1,0]})"));
    ASSERT_EQ(w.code, 0);
    EXPECT_EQ(w.parsed()["values"].size(), 4u);
}

TEST_F(Cli, WedgeInverse) {
    const Outcome ok = run("invert-wedge --input " + file("ok.json", R"({"values":[0,0,0]})"));
    ASSERT_EQ(ok.code, 0);
    EXPECT_EQ(ok.parsed()["coeffs"].size(), 2u);
    const Outcome bad = run("invert-wedge --input " + file("bad.json", R"({"values":[1,0,0]})"));
    expect_error(bad, 2, "infeasible");
    EXPECT_GT(bad.parsed()["error"]["residual"].get<double>(), 0.1);
}

TEST_F(Cli, OtherInverseCommands) {
    const Outcome l = run("invert-L --seed 1 --input " + file("l.json", R"({"values":[1,-1,[0,1],[0,-1]]})"));
    ASSERT_EQ(l.code, 0) << l.out;
    EXPECT_EQ(l.parsed()["status"], "success");
    const Outcome s = run("invert-sylvester --p 1 --q 2 --seed 1 --input " + file("s.json", R"({"values":[0.3,[0.1,0.5],-0.7]})"));
    ASSERT_EQ(s.code, 0) << s.out;
    EXPECT_EQ(s.parsed()["a"].size(), 2u);
    expect_error(run("invert --input " + file("odd.json", R"({"values":[1,2,3]})")), 1, "dimension-mismatch");
}

TEST_F(Cli, BlockVerifyAndRank) {
    const Outcome b = run("block-verify --input " +
                      file("b.json", R"({"blocks":[{"n":2,"m":2,"slices":[[1,0,0],[0,0,2]]},{"n":2,"m":2,"slices":[[3,0,0],[0,0,4]]}]})"));
    ASSERT_EQ(b.code, 0) << b.out;
    EXPECT_EQ(b.parsed()["p"], 4);
    EXPECT_EQ(b.parsed()["matched"], true);
    const Outcome g = run("rank --golden");
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(g.parsed()["rank"], 12);
    const Outcome m = run("rank --input " + file("m.json", R"({"matrix":[[1,2],[2,4]]})"));
    EXPECT_EQ(m.parsed()["rank"], 1);
}

TEST_F(Cli, JacobianAtFixedPoint) {
    const Outcome r = run("jacobian --point p32");
    ASSERT_EQ(r.code, 0);
    const json j = r.parsed();
    EXPECT_EQ(j["rows"], 12);
    EXPECT_EQ(j["cols"], 14);
    EXPECT_EQ(j["rank"], 12);
    EXPECT_NEAR(j["matrix"][0][0][0].get<double>(), -4.0, 1e-6);
    const json fd = run("jacobian --point p32 --method fd --step 1e-4").parsed();
    EXPECT_EQ(fd["method"], "central-difference");
    EXPECT_EQ(fd["rank"], 12);
    expect_error(run("jacobian --point p32 --method symbolic"), 1, "usage");
}

TEST_F(Cli, UsageErrors) {
    expect_error(run("frobnicate"), 1, "usage");
    expect_error(run(""), 1, "usage");
    expect_error(run("classify --n 3"), 1, "usage");
    expect_error(run("classify --n three --m 2"), 1, "usage");
    expect_error(run("eig --input /nonexistent/file.json"), 1, "io");
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, MalformedInputsProduceJsonErrors) {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"{", "malformed-json"},
        {"[1, 2", "malformed-json"},
        {"", "malformed-json"},
        {"{\"n\":2,\"m\":2,\"slices\":[[1,0],[0,0,5]]}", "dimension-mismatch"},
        {"{\"n\":2,\"m\":2}", "dimension-mismatch"},
        {"{\"n\":\"2\",\"m\":2,\"slices\":[]}", "dimension-mismatch"},
        {"{\"n\":2,\"m\":2,\"slices\":[[1,0,0],[0,\"x\",5]]}", "dimension-mismatch"},
        {"[]", "dimension-mismatch"},
        {"42", "dimension-mismatch"},
    };
    int k = 0;
    for (const auto& [text, kind] : cases) {
        const std::string f = file("case" + std::to_string(k++) + ".json", text);
        expect_error(run("eig --input " + f), 1, kind);
    }
    const Outcome pos = run("charpoly --input " + file("pos.json", R"({"n":2,"m":2,"slices":[[1,0,0],[0,[1],5]]})"));
    EXPECT_NE(pos.parsed()["error"]["message"].get<std::string>().find("slices[1][1]"), std::string::npos);
    const Outcome byte = run("charpoly --input " + file("byte.json", "{\"n\":2,,}"));
    EXPECT_TRUE(byte.parsed()["error"].contains("byte"));
}

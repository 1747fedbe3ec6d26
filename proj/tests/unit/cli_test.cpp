#include "motiontx/cli.hpp"
#include "motiontx/csv.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace motiontx;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               (std::string("motiontx_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return cli_main(args, out_, err_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void make_pair() {
        ASSERT_EQ(run({"synth", "--n", "80", "--period", "16", "--trend-slope", "0", "--amplitude", "1",
                       "--noise-sigma", "0", "--seed", "1", "--out", path("hr.csv")}),
                  kExitOk)
            << err_.str();
        ASSERT_EQ(run({"synth", "--n", "200", "--period", "16", "--trend-slope", "0.01", "--amplitude", "1",
                       "--noise-sigma", "0.2", "--seed", "7", "--out", path("lr.csv"), "--truth-out",
                       path("truth.csv")}),
                  kExitOk)
            << err_.str();
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

} // namespace

TEST_F(Cli, TransferEndToEnd) {
    make_pair();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("lr.csv"), "--out", path("refined.csv"),
                   "--report", path("report.json")}),
              kExitOk)
        << err_.str();
    const auto refined = read_csv(path("refined.csv"));
    EXPECT_EQ(refined.frames, 200u);
    EXPECT_EQ(refined.channel_names, std::vector<std::string>{"theta"});
    std::ifstream in(path("report.json"));
    const auto report = nlohmann::json::parse(in);
    EXPECT_EQ(report["channels"][0]["status"], "transferred");
    EXPECT_TRUE(out_.str().empty());
}

TEST_F(Cli, MissingTargetIsUsageError) {
    make_pair();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--out", path("refined.csv")}), kExitUsage);
    EXPECT_NE(err_.str().find("--target"), std::string::npos);
    EXPECT_NE(err_.str().find("Usage"), std::string::npos) << err_.str();
    EXPECT_FALSE(fs::exists(path("refined.csv")));
}

TEST_F(Cli, NonNumericCellIsDataError) {
    make_pair();
    std::ofstream(path("bad.csv")) << "frame,theta\n0,1\n1,2\n2,abc\n";
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("bad.csv"), "--out", path("refined.csv")}),
              kExitData);
    EXPECT_NE(err_.str().find("bad.csv:4"), std::string::npos) << err_.str();
    EXPECT_FALSE(fs::exists(path("refined.csv")));
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}), kExitUsage);
    EXPECT_EQ(run({"frobnicate"}), kExitUsage);
    make_pair();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("lr.csv"), "--out", path("o.csv"),
                   "--alpha", "1.5"}),
              kExitUsage);
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("lr.csv"), "--out", path("o.csv"),
                   "--smooth-kind", "median"}),
              kExitUsage);
    EXPECT_EQ(run({"analyze", "--input", path("hr.csv"), "--report", path("r.json"), "--max-order", "0"}),
              kExitUsage);
}

TEST_F(Cli, Help) {
    EXPECT_EQ(run({"--help"}), kExitOk);
    EXPECT_NE(out_.str().find("transfer"), std::string::npos);
    EXPECT_EQ(run({"transfer", "--help"}), kExitOk);
    EXPECT_NE(out_.str().find("--smooth-kind"), std::string::npos);
}

TEST_F(Cli, AnalyzeReportsPeriod) {
    make_pair();
    EXPECT_EQ(run({"analyze", "--input", path("hr.csv"), "--report", path("r.json")}), kExitOk) << err_.str();
    std::ifstream in(path("r.json"));
    const auto report = nlohmann::json::parse(in);
    EXPECT_EQ(report["mode"], "analyze");
    EXPECT_EQ(report["channels"][0]["dominant_frequency"], 5);
    EXPECT_EQ(report["channels"][0]["reference_period"], 16.0);
}

TEST_F(Cli, ChannelFilterAndMismatch) {
    make_pair();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("lr.csv"), "--out", path("o.csv"),
                   "--channels", "theta", "--threads", "2", "--smooth-kind", "exponential"}),
              kExitOk)
        << err_.str();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("lr.csv"), "--out", path("o.csv"),
                   "--channels", "phi"}),
              kExitData);
    EXPECT_NE(err_.str().find("phi"), std::string::npos);
    ASSERT_EQ(run({"synth", "--n", "80", "--period", "16", "--trend-slope", "0", "--amplitude", "1",
                   "--noise-sigma", "0", "--seed", "1", "--channel", "psi", "--out", path("psi.csv")}),
              kExitOk);
    EXPECT_EQ(run({"transfer", "--ref", path("psi.csv"), "--target", path("lr.csv"), "--out", path("o.csv")}),
              kExitData);
}

TEST_F(Cli, WhiteNoiseIsReportedOnErrorStream) {
    make_pair();
    std::ostringstream csv;
    csv << "frame,theta\n";
    std::uint64_t state = 12345;
    for (int i = 0; i < 200; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        csv << i << ',' << static_cast<double>(state >> 11) / 9007199254740992.0 << '\n';
    }
    std::ofstream(path("noise.csv")) << csv.str();
    EXPECT_EQ(run({"transfer", "--ref", path("hr.csv"), "--target", path("noise.csv"), "--out", path("o.csv")}),
              kExitOk);
    if (err_.str().find("no seasonality") != std::string::npos) {
        EXPECT_EQ(read_csv(path("o.csv")).columns, read_csv(path("noise.csv")).columns);
    }
}

TEST_F(Cli, SynthInvalidSpecIsDataError) {
    EXPECT_EQ(run({"synth", "--n", "10", "--period", "16", "--trend-slope", "0", "--amplitude", "1",
                   "--noise-sigma", "0", "--seed", "1", "--out", path("s.csv")}),
              kExitData);
}

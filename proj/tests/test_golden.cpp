#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuchs/cli.hpp"

using namespace fuchs;

namespace {

struct Case {
    const char* file;
    int degree;
    bool normalized;
};

const Case cases[] = {
    {"situation1_raw.json", 5, false},   {"situation2_raw.json", 6, false},
    {"situation3_raw.json", 7, false},   {"situation4_raw.json", 8, false},
    {"case1_normalized.json", 5, true},  {"case2_normalized.json", 6, true},
    {"case3_normalized.json", 7, true},  {"case4_normalized.json", 8, true},
};

class GoldenTables : public ::testing::TestWithParam<Case> {};

} // namespace

// Every printed component against the CLI's JSON output, 1e-6 absolute.
TEST_P(GoldenTables, CliMatchesPrintedEntries) {
    const Case& c = GetParam();
    const GoldenTable table = load_golden(std::string(FUCHS_GOLDEN_DIR) + "/" + c.file);
    ASSERT_EQ(table.degree, c.degree);
    ASSERT_EQ(table.convention, c.normalized ? "normalized" : "raw");

    std::vector<std::string> args{"uniformize", "--degree", std::to_string(c.degree), "--precision", "12"};
    if (c.normalized) args.push_back("--normalize");
    std::ostringstream out, err;
    ASSERT_EQ(cli::run(args, out, err), 0) << err.str();
    const ReportDocument doc = from_json(json::parse(out.str()));

    int failures = 0;
    double worst = 0.0;
    for (const auto& [index, expected] : table.matrices) {
        const NamedMatrix* got = nullptr;
        for (const NamedMatrix& m : doc.generators)
            if (m.side == index) got = &m;
        ASSERT_NE(got, nullptr) << "S1S" << index;
        for (std::size_t k = 0; k < 4; ++k) {
            const double dr = std::abs(got->entries[k].real() - expected[k].real());
            const double di = std::abs(got->entries[k].imag() - expected[k].imag());
            worst = std::max({worst, dr, di});
            if (dr > 1e-6 || di > 1e-6) {
                ++failures;
                ADD_FAILURE() << got->name << " entry " << k << ": got " << got->entries[k] << " printed "
                              << expected[k];
            }
        }
    }
    RecordProperty("max_deviation", std::to_string(worst));
    EXPECT_EQ(failures, 0) << "max deviation " << worst;
}

INSTANTIATE_TEST_SUITE_P(Printed, GoldenTables, ::testing::ValuesIn(cases),
                         [](const ::testing::TestParamInfo<Case>& info) {
                             std::string name = info.param.file;
                             return name.substr(0, name.find('.'));
                         });

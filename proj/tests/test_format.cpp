#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <subpow/format.hpp>

namespace subpow {
namespace {

TEST(SpectrumJson, Layout) {
    std::ostringstream out;
    write_json(out, spectrum(6, 3));
    EXPECT_EQ(out.str(), R"({"l":6,"d":3,"cycles":[{"k":2,"count":"1"},{"k":6,"count":"3"}]})"
                         "\n");
}

TEST(SpectrumJson, RoundTripIsAFixedPoint) {
    for (std::uint64_t l = 1; l <= 70; l += 3) {
        for (std::uint64_t d = 1; d <= l; d += 2) {
            const auto s = spectrum(l, d);
            const auto text = to_json(s).dump();
            const auto parsed = spectrum_from_json(text);
            EXPECT_EQ(parsed, s);
            EXPECT_EQ(to_json(parsed).dump(), text);
        }
    }
}

TEST(SpectrumJson, RejectsMalformedInput) {
    EXPECT_THROW(spectrum_from_json("{"), parse_error);
    EXPECT_THROW(spectrum_from_json(R"({"l":6,"d":3,"cycles":[{"k":2,"count":1}]})"), parse_error);
    EXPECT_THROW(spectrum_from_json(R"({"l":6,"d":3,"cycles":[{"k":2,"count":"-1"}]})"), parse_error);
    EXPECT_THROW(spectrum_from_json(R"({"l":6,"cycles":[]})"), parse_error);
}

TEST(SpectrumCsv, Rows) {
    std::ostringstream out;
    write_csv(out, spectrum(6, 2));
    EXPECT_EQ(out.str(), "k,count\n3,1\n6,2\n");
}

TEST(SpectrumTable, PadsColumns) {
    std::ostringstream out;
    write_table(out, spectrum(12, 4));
    EXPECT_EQ(out.str(), " k  count\n 3      1\n 6      2\n12     40\n");
}

TEST(SubsetPowerDot, C4Squared) {
    std::ostringstream out;
    write_dot(out, record_of(build_subset_power(make_cycle(4), 2)));
    EXPECT_EQ(out.str(),
              "digraph subset_power {\n"
              "  0 [label=\"{0,1}\"];\n"
              "  1 [label=\"{0,2}\"];\n"
              "  2 [label=\"{0,3}\"];\n"
              "  3 [label=\"{1,2}\"];\n"
              "  4 [label=\"{1,3}\"];\n"
              "  5 [label=\"{2,3}\"];\n"
              "  0 -> 3;\n"
              "  1 -> 4;\n"
              "  2 -> 0;\n"
              "  3 -> 5;\n"
              "  4 -> 1;\n"
              "  5 -> 2;\n"
              "}\n");
}

TEST(SubsetPowerJson, Layout) {
    std::ostringstream out;
    write_json(out, record_of(build_subset_power(make_cycle(3), 1)));
    EXPECT_EQ(out.str(), R"({"base_l":3,"d":1,"vertices":[[0],[1],[2]],"edges":[[0,1],[1,2],[2,0]]})"
                         "\n");
}

TEST(SubsetPowerJson, RoundTripIsAFixedPoint) {
    for (std::size_t l = 1; l <= 8; ++l) {
        for (std::size_t d = 1; d <= std::min<std::size_t>(l, 4); ++d) {
            const auto record = record_of(build_subset_power(make_cycle(l), d));
            const auto text = to_json(record).dump();
            const auto parsed = subset_power_from_json(text);
            EXPECT_EQ(parsed, record);
            EXPECT_EQ(to_json(parsed).dump(), text);
        }
    }
    const auto loop = record_of(build_subset_power(Digraph(2, {{0, 1}, {1, 0}}), 2));
    EXPECT_EQ(subset_power_from_json(to_json(loop).dump()), loop);
}

TEST(SubsetPowerJson, RejectsInconsistentDocuments) {
    EXPECT_THROW(subset_power_from_json(R"({"base_l":3,"d":2,"vertices":[[0]],"edges":[]})"), parse_error);
    EXPECT_THROW(subset_power_from_json(R"({"base_l":3,"d":1,"vertices":[[3]],"edges":[]})"), parse_error);
    EXPECT_THROW(subset_power_from_json(R"({"base_l":3,"d":2,"vertices":[[1,0]],"edges":[]})"), parse_error);
    EXPECT_THROW(subset_power_from_json(R"({"base_l":3,"d":1,"vertices":[[0]],"edges":[[0,1]]})"), parse_error);
    EXPECT_THROW(subset_power_from_json(R"({"base_l":3,"d":1,"vertices":[[0]],"edges":[[0]]})"), parse_error);
    EXPECT_THROW(subset_power_from_json("[]"), parse_error);
}

} // namespace
} // namespace subpow

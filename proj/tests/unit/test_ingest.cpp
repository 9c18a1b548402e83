#include <sstream>

#include <gtest/gtest.h>

#include "fbopt/ingest.hpp"

using namespace fbopt;

namespace {

PerformanceSet parse(const std::string& text, IngestOptions opt = {}) {
    std::istringstream in(text);
    return ingest(in, opt);
}

template <class E>
std::size_t error_row(const std::string& text, IngestOptions opt = {}) {
    try {
        parse(text, opt);
    } catch (const E& e) {
        return e.row();
    }
    return 0;
}

}  // namespace

TEST(Ingest, Counts) {
    const auto set = parse("label,tn,fp,fn,tp\nm1,90,5,3,2\nm2,1,1,1,1\n");
    ASSERT_EQ(set.size(), 2u);
    EXPECT_EQ(set.labels[0], "m1");
    EXPECT_DOUBLE_EQ(set.items[0].ptn, 0.9);
    EXPECT_DOUBLE_EQ(set.items[0].pfp, 0.05);
    EXPECT_DOUBLE_EQ(set.items[0].pfn, 0.03);
    EXPECT_DOUBLE_EQ(set.items[0].ptp, 0.02);
}

TEST(Ingest, CountsWithoutLabelsAnyColumnOrder) {
    const auto set = parse("# comment\n\ntp,fn,fp,tn\r\n2,3,5,90\r\n");
    ASSERT_EQ(set.size(), 1u);
    EXPECT_TRUE(set.labels.empty());
    EXPECT_DOUBLE_EQ(set.items[0].ptn, 0.9);
    EXPECT_EQ(set.label(0), "0");
}

TEST(Ingest, Roc) {
    const auto set = parse("label,fpr,tpr\nm1,0.1,0.8\n", {0.2});
    EXPECT_NEAR(set.items[0].ptn, 0.72, 1e-15);
    EXPECT_NEAR(set.items[0].pfp, 0.08, 1e-15);
    EXPECT_NEAR(set.items[0].pfn, 0.04, 1e-15);
    EXPECT_NEAR(set.items[0].ptp, 0.16, 1e-15);
    const auto with_col = parse("label,fpr,tpr,prior_pos\nm1,0.1,0.8,0.2\nm2,0.3,0.9,0.2\n");
    EXPECT_EQ(with_col.items[0], set.items[0]);
    EXPECT_THROW(parse("fpr,tpr\n0.1,0.8\n"), InvalidArgument);
}

TEST(Ingest, Errors) {
    EXPECT_EQ(error_row<ZeroTotal>("label,tn,fp,fn,tp\nm1,1,1,1,1\nm2,0,0,0,0\n"), 3u);
    EXPECT_EQ(error_row<NegativeCount>("tn,fp,fn,tp\n1,-1,1,1\n"), 2u);
    EXPECT_EQ(error_row<MixedSchema>("tn,fp,fn,tp,fpr\n1,1,1,1,0.1\n"), 1u);
    EXPECT_EQ(error_row<MixedPriors>("fpr,tpr,prior_pos\n0.1,0.5,0.2\n\n0.2,0.6,0.3\n"), 4u);
    EXPECT_EQ(error_row<MixedPriors>("fpr,tpr,prior_pos\n0.1,0.5,0.2\n", {0.3}), 2u);
    EXPECT_EQ(error_row<ParseError>("tn,fp,fn,tp\n1,2,x,4\n"), 2u);
    EXPECT_EQ(error_row<ParseError>("tn,fp,fn,tp\n1,2,3\n"), 2u);
    EXPECT_EQ(error_row<ParseError>("tn,fp,fn,tp\n1,2,3,4,5\n"), 2u);
    EXPECT_EQ(error_row<ParseError>("fpr,tpr,prior_pos\n1.5,0.5,0.2\n"), 2u);
    EXPECT_EQ(error_row<ParseError>("a,b\n1,2\n"), 1u);
    EXPECT_EQ(error_row<ParseError>("tn,fp,fn,tp,label\n1,2,3,4,m\n"), 1u);
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("tn,fp,fn,tp\n"), ParseError);
    EXPECT_THROW(ingest(std::string("/nonexistent/file.csv")), InputError);
}

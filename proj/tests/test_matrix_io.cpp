#include "hhop/matrix_io.hpp"
#include "hhop/random_sampling.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace {

using namespace hhop;

HermitianMatrix parse(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix_text(in);
}

TEST(MatrixIo, ParsesRealAndComplexForms) {
    const HermitianMatrix a = parse(
        "dim 2\n"
        "1.5 1+2i\n"
        "1-2i -0.25\n");
    EXPECT_EQ(a(0, 0), Complex(1.5, 0.0));
    EXPECT_EQ(a(0, 1), Complex(1.0, 2.0));
    EXPECT_EQ(a(1, 0), Complex(1.0, -2.0));
    EXPECT_EQ(a(1, 1), Complex(-0.25, 0.0));
}

TEST(MatrixIo, AcceptsScientificNotation) {
    const HermitianMatrix a = parse(
        "dim 2\n"
        "1e-3 2.5e-2+1e-4i\n"
        "2.5e-2-1e-4i 4\n");
    EXPECT_EQ(a(0, 0).real(), 1e-3);
    EXPECT_EQ(a(0, 1), Complex(2.5e-2, 1e-4));
}

TEST(MatrixIo, RejectsNonHermitianNamingWorstPair) {
    try {
        parse(
            "dim 2\n"
            "0 1+2i\n"
            "1+2i 0\n");
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("(1,2)"), std::string::npos);
        EXPECT_NE(what.find("(2,1)"), std::string::npos);
    }
}

TEST(MatrixIo, ParseErrorsCiteLineAndColumn) {
    try {
        parse(
            "dim 2\n"
            "1 2\n"
            "2 zebra\n");
        FAIL() << "expected parse error";
    } catch (const MatrixParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 3);
    }

    EXPECT_THROW(parse("dim 0\n"), MatrixParseError);
    EXPECT_THROW(parse("size 2\n1 0\n0 1\n"), MatrixParseError);
    EXPECT_THROW(parse("dim 2\n1 0\n"), MatrixParseError);      // missing row
    EXPECT_THROW(parse("dim 2\n1\n0 1\n"), MatrixParseError);   // short row
    EXPECT_THROW(parse("dim 2\n1 0 3\n0 1\n"), MatrixParseError); // long row
    EXPECT_THROW(parse("dim 2\n1 2+i\n2-i 1\n"), MatrixParseError); // bare i
}

TEST(MatrixIo, RoundTripIdentity) {
    const HermitianMatrix a = HermitianMatrix::identity(3);
    std::ostringstream out;
    write_matrix_text(out, a);
    const HermitianMatrix back = parse(out.str());
    EXPECT_TRUE(back.same_entries(a));
}

TEST(MatrixIo, RoundTripRandomComplexIsExact) {
    // 17 significant digits reproduce every double exactly.
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + static_cast<int>(rng.bits() % 8);
        const HermitianMatrix a = rng.hermitian_in_interval(dim, -3.0, 4.0);
        std::ostringstream out;
        write_matrix_text(out, a);
        const HermitianMatrix back = parse(out.str());
        EXPECT_TRUE(back.same_entries(a)) << out.str();
    }
}

TEST(MatrixIo, SaveAndLoadFile) {
    Rng rng(52);
    const HermitianMatrix a = rng.hermitian_in_interval(4, -2.0, 2.0);
    const std::string path =
        (std::filesystem::temp_directory_path() / "hhop_matrix_io_test.txt").string();
    save_matrix(path, a);
    const HermitianMatrix back = load_matrix(path);
    EXPECT_TRUE(back.same_entries(a));
    std::remove(path.c_str());

    EXPECT_THROW(load_matrix("/nonexistent/path/matrix.txt"), std::runtime_error);
}

} // namespace

#include <catch2/catch_amalgamated.hpp>

#include <evoalg/io.hpp>

#include <sstream>

using namespace evoalg;

TEST_CASE("matrix files parse with comments and both fields") {
    std::istringstream in(
        "# structure matrix\n"
        "dim 2 field Q\n"
        "1 -1/2\n"
        "0 3  # trailing comment\n");
    MatrixFile mf = MatrixFile::parse(in);
    CHECK(mf.dim == 2);
    CHECK(mf.field.kind == FieldSpec::Kind::Rationals);
    auto a = mf.instantiate(Rationals{});
    CHECK(a.at(0, 1) == Rational(BigInt(-1), BigInt(2)));
    CHECK(a.at(1, 1) == Rational(3));

    std::istringstream in2("dim 2 field F7\n3 10\n0 1\n");
    MatrixFile mf2 = MatrixFile::parse(in2);
    REQUIRE(mf2.field.kind == FieldSpec::Kind::PrimeField);
    PrimeField f(mf2.field.modulus);
    auto b = mf2.instantiate(f);
    CHECK(b.at(0, 1) == 3);
}

TEST_CASE("matrix file errors") {
    std::istringstream bad1("dim 2 field Q\n1 2\n");
    CHECK_THROWS(MatrixFile::parse(bad1));
    std::istringstream bad2("dim 2 field Q\n1 2 3\n4 5 6\n");
    CHECK_THROWS(MatrixFile::parse(bad2));
    std::istringstream bad3("dimension 2 field Q\n1 2\n3 4\n");
    CHECK_THROWS(MatrixFile::parse(bad3));
    std::istringstream bad4("dim 2 field R\n1 2\n3 4\n");
    CHECK_THROWS(MatrixFile::parse(bad4));
    std::istringstream bad5("");
    CHECK_THROWS(MatrixFile::parse(bad5));
}

TEST_CASE("pattern files parse with pins") {
    std::istringstream in(
        "dim 3\n"
        "**0\n"
        "0*0\n"
        "00*\n"
        "pin 1 1 1\n"
        "pin 3 3 -1\n");
    PatternFile pf = PatternFile::parse(in);
    CHECK(pf.pattern.dim() == 3);
    CHECK(pf.pattern.count() == 4);
    REQUIRE(pf.pins.size() == 2);
    auto a = pf.instantiate_distinct_primes(Rationals{});
    CHECK(a.at(0, 0) == Rational(1));
    CHECK(a.at(2, 2) == Rational(-1));
    CHECK(a.at(0, 1) == Rational(2));  // first free prime
    CHECK(a.at(1, 1) == Rational(3));
}

TEST_CASE("pattern file errors") {
    std::istringstream bad1("dim 2\n**\n");
    CHECK_THROWS(PatternFile::parse(bad1));
    std::istringstream bad2("dim 2\n**\n*x\n");
    CHECK_THROWS(PatternFile::parse(bad2));
    std::istringstream bad3("dim 2\n*0\n0*\npin 1 2 1\n");  // pin on a zero cell
    CHECK_THROWS(PatternFile::parse(bad3));
    std::istringstream bad4("dim 9\n");
    CHECK_THROWS(PatternFile::parse(bad4));
}

TEST_CASE("distinct-prime instantiation is generically nonsingular") {
    std::istringstream in(
        "dim 4\n"
        "**00\n"
        "0*0*\n"
        "00**\n"
        "000*\n");
    PatternFile pf = PatternFile::parse(in);
    auto a = pf.instantiate_distinct_primes(Rationals{});
    CHECK(is_perfect(a));
    CHECK(support(a) == pf.pattern);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liouvep/render.hpp"

using namespace liouvep;

namespace {

std::string readGolden(const std::string& name)
{
    std::ifstream in(std::string(LIOUVEP_GOLDEN_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parseRational("3/4") == Rational(3, 4));
    CHECK(parseRational("2") == Rational(2));
    CHECK(parseRational("-7") == Rational(-7));
    CHECK(parseRational("0.5") == Rational(1, 2));
    CHECK(parseRational("-1.25") == Rational(-5, 4));
    CHECK_THROWS_AS(parseRational(""), std::invalid_argument);
}

TEST_CASE("format and model names")
{
    CHECK(parseFormat("csv") == OutputFormat::csv);
    CHECK(parseFormat("json") == OutputFormat::json);
    CHECK(parseFormat("text") == OutputFormat::text);
    CHECK_THROWS_AS(parseFormat("xml"), std::invalid_argument);
    CHECK(parseModel("cl") == Model::cl);
    CHECK(parseModel("mkl") == Model::mkl);
    CHECK(parseModel("hpz") == Model::hpz);
    CHECK_THROWS_AS(parseModel("nosuch"), std::invalid_argument);
}

TEST_CASE("spectrum sweep covers both sides of the exceptional point")
{
    auto rows = spectrumSweep({"1", "0", "1/2i"}, Rational(1, 2), 2);
    // per token: (m,n,sign) with sign dropped for n = 0 -> 9 rows for mMax=2
    REQUIRE(rows.size() == 27);

    // real omega: conjugate pair at (1,1)
    CHECK(rows[2].lambda == Coeff(SurdReal(Rational(1, 4)), SurdReal(1)));
    CHECK(rows[3].lambda == Coeff(SurdReal(Rational(1, 4)), SurdReal(-1)));

    // omega = 0: everything with the same N = 2m - n coalesces at N*gamma/2
    for (size_t i = 9; i < 18; ++i) {
        const auto& r = rows[i];
        CHECK(r.lambda == Coeff(Rational(2 * r.m - r.n) * Rational(1, 4)));
    }

    // imaginary omega: the pair splits along the real axis
    for (size_t i = 18; i < 27; ++i) {
        const auto& r = rows[i];
        CHECK(r.lambda.isReal());
        CHECK(r.lambda ==
              Coeff(Rational(2 * r.m - r.n) * Rational(1, 4) -
                    Rational(r.sign * r.n) * Rational(1, 2)));
    }
}

TEST_CASE("spectrum rendering")
{
    auto rows = spectrumSweep({"1"}, Rational(1, 2), 1);
    std::string csv = renderSpectrum(rows, OutputFormat::csv);
    CHECK(csv == "omega,m,n,sign,re_lambda,im_lambda\n"
                 "1,0,0,1,0,0\n"
                 "1,1,0,1,0.5,0\n"
                 "1,1,1,1,0.25,1\n"
                 "1,1,1,-1,0.25,-1\n");
    std::string json = renderSpectrum(rows, OutputFormat::json);
    CHECK(json.find("\"lambda\": \"(1/4)+(1)i\"") != std::string::npos);
}

TEST_CASE("chain tables reproduce the golden files byte for byte")
{
    CHECK(renderChains(Model::cl, 3, ChainFamily::phi, OutputFormat::text) ==
          readGolden("table1.txt"));
    CHECK(renderChains(Model::mkl, 3, ChainFamily::phi, OutputFormat::text) ==
          readGolden("table2.txt"));
    CHECK(renderChains(Model::cl, 3, ChainFamily::psi, OutputFormat::text) ==
          readGolden("table3.txt"));
    CHECK(renderChains(Model::mkl, 3, ChainFamily::psi, OutputFormat::text) ==
          readGolden("table4.txt"));
}

TEST_CASE("golden files contain the printed table entries verbatim")
{
    // -2s(Q - s) in the N=2 series of the damping route
    CHECK(readGolden("table1.txt").find("[N=2 z=1]\n"
                                        "(0,2): 2\n"
                                        "(1,1): -2\n") != std::string::npos);
    // (9/16) Q (Q^2 - 3/2) closing the N=3 series of the mass route
    CHECK(readGolden("table2.txt").find("[N=3 z=3]\n"
                                        "(1,0): -27/32\n"
                                        "(3,0): 9/16\n") != std::string::npos);
    // -2Q(Q - s) + 1 in the alternative damping-route family
    CHECK(readGolden("table3.txt").find("[N=2 z=1]\n"
                                        "(0,0): 1\n"
                                        "(1,1): 2\n"
                                        "(2,0): -2\n") != std::string::npos);
    // 2(Q/2 + s)^2 - 1/4 in the alternative mass-route family
    CHECK(readGolden("table4.txt").find("[N=2 z=2]\n"
                                        "(0,0): -1/4\n"
                                        "(0,2): 2\n"
                                        "(1,1): 2\n"
                                        "(2,0): 1/2\n") != std::string::npos);
}

TEST_CASE("chain rendering formats")
{
    std::string json = renderChains(Model::cl, 1, ChainFamily::phi,
                                    OutputFormat::json);
    CHECK(json.find("\"model\": \"cl\"") != std::string::npos);
    CHECK(json.find("\"variant\": \"primary\"") != std::string::npos);
    CHECK_THROWS_AS(renderChains(Model::cl, 1, ChainFamily::phi, OutputFormat::csv),
                    std::invalid_argument);
}

TEST_CASE("evolution rendering")
{
    std::vector<DatasetRow> rows{{"critical", 0.5, "diagonal", -1.5, 0.25}};
    CHECK(renderEvolve(rows, OutputFormat::csv) ==
          "regime,t,axis,coord,value\n"
          "critical,0.5,diagonal,-1.5,0.25\n");
    std::string json = renderEvolve(rows, OutputFormat::json);
    CHECK(json.find("\"regime\": \"critical\"") != std::string::npos);
}

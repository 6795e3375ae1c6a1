#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liouvep/render.hpp"
#include "liouvep/verify.hpp"

namespace {

using namespace liouvep;

void emit(const std::string& content, const std::string& outPath)
{
    if (outPath.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(outPath, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file: " + outPath);
    os << content;
}

std::vector<double> parseGrid(const std::string& spec)
{
    // "min:max:steps" with steps >= 2
    auto a = spec.find(':');
    auto b = spec.rfind(':');
    if (a == std::string::npos || a == b)
        throw std::invalid_argument("grid must be min:max:steps");
    double lo = std::stod(spec.substr(0, a));
    double hi = std::stod(spec.substr(a + 1, b - a - 1));
    int steps = std::stoi(spec.substr(b + 1));
    if (steps < 2 || hi <= lo)
        throw std::invalid_argument("grid must satisfy min < max and steps >= 2");
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i)
        g[i] = lo + (hi - lo) * i / (steps - 1);
    return g;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exceptional-point structure of the damped-oscillator Liouvillian"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string outPath;
    app.add_option("--format", format, "output format: csv, json, or text")
        ->capture_default_str();
    app.add_option("--out", outPath, "write output to a file instead of stdout");

    auto* spectrum = app.add_subcommand(
        "spectrum", "eigenvalue sweep across the modified frequency");
    std::vector<std::string> omegaSweep{"1", "3/4", "1/2", "1/4", "0",
                                        "1/4i", "1/2i"};
    std::string gammaStr = "1/2";
    int mMax = 2;
    spectrum->add_option("--omega-sweep", omegaSweep,
                         "modified frequencies; suffix i for imaginary values")
        ->delimiter(',');
    spectrum->add_option("--gamma", gammaStr, "damping rate")->capture_default_str();
    spectrum->add_option("--n-max", mMax, "largest index m")->capture_default_str();

    auto* chains = app.add_subcommand("chains", "generalized eigenvector tables");
    std::string modelStr = "cl";
    std::string variant = "primary";
    int nMax = 3;
    std::string omega0Str = "1";
    std::string chainGamma = "2";
    std::string h1Str;
    std::string bStr = "1/2";
    chains->add_option("--model", modelStr, "model: cl, mkl, or hpz")
        ->capture_default_str();
    chains->add_option("--variant", variant, "chain family: primary or alternative")
        ->capture_default_str();
    chains->add_option("--n-max", nMax, "largest subspace order N")
        ->capture_default_str();
    chains->add_option("--omega0", omega0Str, "natural frequency")
        ->capture_default_str();
    chains->add_option("--gamma", chainGamma, "damping rate")->capture_default_str();
    chains->add_option("--h1", h1Str, "frequency-shift coupling (mkl)");
    chains->add_option("--b", bStr, "thermal width b- for hpz")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::string suite = "all";
    int verifyNMax = 6;
    verify
        ->add_option("--suite", suite,
                     "kl-eigen, chains, freedom, trace, oracle, or all")
        ->capture_default_str();
    verify->add_option("--n-max", verifyNMax, "largest subspace order N")
        ->capture_default_str();

    auto* evolve = app.add_subcommand("evolve", "relaxation dataset for the three regimes");
    std::vector<double> times{0, 0.5, 1, 3};
    std::string gridSpec = "-4:4:81";
    evolve->add_option("--times", times, "sample times in units of 1/omega0")
        ->delimiter(',');
    evolve->add_option("--grid", gridSpec, "coordinate grid min:max:steps")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        OutputFormat fmt = parseFormat(format);
        if (spectrum->parsed()) {
            auto rows = spectrumSweep(omegaSweep, parseRational(gammaStr), mMax);
            emit(renderSpectrum(rows, fmt), outPath);
            return 0;
        }
        if (chains->parsed()) {
            Model model = parseModel(modelStr);
            ChainFamily family;
            if (variant == "primary")
                family = ChainFamily::phi;
            else if (variant == "alternative")
                family = ChainFamily::psi;
            else
                throw std::invalid_argument("unknown variant: " + variant);
            Rational omega0 = parseRational(omega0Str);
            Rational gamma = parseRational(chainGamma);
            Rational omegaTilde = 2 * omega0 / gamma;
            if (!h1Str.empty() && parseRational(h1Str) != 2 * omega0)
                throw std::invalid_argument("chains exist at the exceptional point h1 = 2*omega0 only");
            HPZParams hpz = HPZParams::atEP(1, parseRational(bStr), omega0);
            if (fmt == OutputFormat::csv)
                fmt = OutputFormat::text;
            emit(renderChains(model, nMax, family, fmt, omegaTilde, hpz), outPath);
            return 0;
        }
        if (verify->parsed()) {
            auto results = runSuite(suite, verifyNMax);
            std::ostringstream os;
            for (const auto& r : results) {
                os << (r.ok ? "ok   " : "FAIL ") << r.name;
                if (!r.detail.empty())
                    os << " (" << r.detail << ")";
                os << "\n";
            }
            bool ok = allPassed(results);
            os << (ok ? "all checks passed\n" : "checks failed\n");
            emit(os.str(), outPath);
            return ok ? 0 : 1;
        }
        if (evolve->parsed()) {
            auto rows = figure2Dataset(times, parseGrid(gridSpec));
            emit(renderEvolve(rows, fmt), outPath);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

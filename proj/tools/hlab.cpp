// hlab: command-line frontend over the header-only engines.
// Exit codes: 0 success, 1 engine error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hlab/commands.hpp>

namespace {

enum class OutputMode { Text, Machine };

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw hlab::parse_error("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const hlab::Report& r, OutputMode mode)
{
    if (mode == OutputMode::Machine) {
        std::cout << hlab::render_machine(r).dump(2) << '\n';
    } else {
        std::cout << hlab::render_text(r);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact characteristic-class, Lefschetz and Euler-characteristic bound calculator"};
    app.require_subcommand(1);

    std::string input_path;
    OutputMode mode = OutputMode::Text;
    const std::map<std::string, OutputMode> modes{{"text", OutputMode::Text}, {"machine", OutputMode::Machine}};
    app.add_option("--input", input_path, "input document (JSON); '-' or omitted reads stdin")->option_text("FILE");
    app.add_option("--output", mode, "output format")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    app.fallthrough();

    auto* genus = app.add_subcommand("genus", "Todd class, Chern character, chi_y and chi^p");
    auto* kcoeffs = app.add_subcommand("kcoeffs", "K_j coefficients of chi_y about y = -1 with closed-form checks");

    int hilbert_p = 0;
    auto* hilbert = app.add_subcommand("hilbert", "p-Hilbert polynomial of the line bundle");
    hilbert->add_option("--p", hilbert_p, "form degree p")->capture_default_str();

    std::optional<int> ineq_j;
    auto* ineq = app.add_subcommand("ineq", "Chern-number inequality (-1)^(n+j) K_j >= sum_p C(p, j)");
    ineq->add_option("--j", ineq_j, "single j (default: all)");

    std::optional<std::string> gammas;
    auto* comm = app.add_subcommand("commutator", "norm of [Lambda, i Theta] and its (p,q) table");
    comm->add_option("--gammas", gammas, "comma-separated curvature eigenvalues, e.g. 1,2,-1/3");

    int lc_n = 2;
    int lc_r = 1;
    auto* lcheck = app.add_subcommand("lefschetz-check", "sl2, star, injectivity and hard Lefschetz scans");
    lcheck->add_option("--n", lc_n, "complex dimension")->capture_default_str();
    lcheck->add_option("--r", lc_r, "fiber rank")->capture_default_str();

    hlab::BoundsOptions bopt;
    auto* bounds = app.add_subcommand("bounds", "Euler-characteristic lower bounds");
    bounds->add_option("--p", bopt.p, "form degree p (default: document or 0)");

    auto* verify = app.add_subcommand("verify", "run the built-in property suite");

    std::string fixture_kind;
    int fixture_n = 0;
    auto* fixture = app.add_subcommand("fixture", "emit a builtin input document");
    fixture->add_option("kind", fixture_kind, "fixture family")->required()->check(CLI::IsMember({"cp"}));
    fixture->add_option("n", fixture_n, "dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fixture->parsed()) {
            std::cout << hlab::to_json(hlab::cp_fixture(fixture_n)).dump(2) << '\n';
            return 0;
        }
        if (lcheck->parsed()) {
            emit(hlab::run_lefschetz_check(lc_n, lc_r), mode);
            return 0;
        }
        if (verify->parsed()) {
            auto [report, ok] = hlab::run_verify();
            emit(report, mode);
            return ok ? 0 : 1;
        }
        if (comm->parsed() && gammas && input_path.empty()) {
            emit(hlab::run_commutator(hlab::InputDocument{}, gammas), mode);
            return 0;
        }

        const hlab::InputDocument doc = hlab::parse_document_text(read_input(input_path));
        if (genus->parsed()) {
            emit(hlab::run_genus(doc), mode);
        } else if (kcoeffs->parsed()) {
            emit(hlab::run_kcoeffs(doc), mode);
        } else if (hilbert->parsed()) {
            emit(hlab::run_hilbert(doc, hilbert_p), mode);
        } else if (ineq->parsed()) {
            emit(hlab::run_ineq(doc, ineq_j), mode);
        } else if (comm->parsed()) {
            emit(hlab::run_commutator(doc, gammas), mode);
        } else if (bounds->parsed()) {
            emit(hlab::run_bounds(doc, bopt), mode);
        }
        return 0;
    } catch (const hlab::parse_error& e) {
        std::cerr << "hlab: parse error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "hlab: malformed input document: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hlab: error: " << e.what() << '\n';
        return 1;
    }
}

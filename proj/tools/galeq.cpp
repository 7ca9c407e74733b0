#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galeq/scenario.hpp"

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        galeq::raise(galeq::ErrorCode::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"galeq: exact checks of period relations, critical points and base change"};
    app.require_subcommand(1);

    std::string scenario_path, check_type, level, tate, d_exponent, format = "text";
    std::uint64_t seed = 0;
    bool timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("scenario", scenario_path, "scenario file (JSON)")->required();
        sub->add_option("--level", level, "rationality level")->check(CLI::IsMember({"q", "fgal", "e"}));
        sub->add_option("--tate", tate, "use the conditional Tate dictionary")->check(CLI::IsMember({"on", "off"}));
        sub->add_option("--d-exponent", d_exponent, "D exponent variant")->check(CLI::IsMember({"thm", "intro"}));
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"structured", "text"}));
        sub->add_option("--seed", seed, "random seed for sweeps");
        sub->add_flag("--timing", timing, "per-check wall time in text output");
    };
    auto* check = app.add_subcommand("check", "run the checks listed in a scenario");
    add_common(check);
    auto* sweep = app.add_subcommand("sweep", "randomized property sweeps");
    add_common(sweep);
    auto* expl = app.add_subcommand("explain", "citation tags and formulas behind a check type");
    expl->add_option("check", check_type, "check type")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*expl) {
            std::cout << galeq::explain(check_type);
            return 0;
        }
        galeq::Scenario sc = galeq::parse_scenario(slurp(scenario_path));
        galeq::OptionOverrides ov;
        if (!level.empty())
            ov.level = galeq::parse_level(level);
        if (!tate.empty())
            ov.tate = tate == "on";
        if (!d_exponent.empty())
            ov.d_exponent = galeq::parse_d_exponent(d_exponent);
        auto* sub = *check ? check : sweep;
        if (sub->count("--seed"))
            ov.seed = seed;
        galeq::apply_overrides(sc.options, ov);
        sc.options.timing = timing;

        galeq::Report rep = *check ? galeq::run_checks(sc) : galeq::run_sweep(sc);
        std::cout << (format == "structured" ? galeq::emit_structured(rep) : galeq::emit_text(rep));
        return galeq::exit_code(rep);
    } catch (const galeq::Error& e) {
        std::cerr << "error [" << galeq::to_string(e.code()) << "]: " << e.what() << "\n";
        return 2;
    }
}

#include "uniorb/uniorb.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitInvalid = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw uniorb::Error(uniorb::ErrorKind::InvalidInput, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int fail(const uniorb::Error& e) {
    std::cout << uniorb::error_json(e).dump() << "\n";
    return kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbits of maximal unipotent subgroups on complete simplicial toric varieties"};
    app.require_subcommand(1);

    std::string fan_path;
    std::string family;
    std::string format = "text";
    uniorb::ReportOptions options;
    auto* analyze = app.add_subcommand("analyze", "Decide finiteness and list unipotent orbits of a fan");
    analyze->add_option("fan", fan_path, "Fan file (JSON)");
    analyze->add_option("--family", family, "Built-in family: wps:1,d1,..,dn | hirzebruch:d | p1xp1 | pn:n");
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--orbits", options.orbits, "Include the orbit catalog");
    analyze->add_flag("--roots", options.roots, "Include the full list of Demazure roots");
    analyze->add_flag("--check", options.check, "Cross-check against the classifications and run the oracle");
    analyze->add_option("--seed", options.seed, "Seed of the sampling oracle");

    std::string spec;
    std::string out_path;
    auto* build = app.add_subcommand("build", "Write the fan file of a built-in family");
    build->add_option("spec", spec, "wps:1,d1,..,dn | hirzebruch:d | p1xp1 | pn:n")->required();
    build->add_option("-o,--output", out_path, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (analyze->parsed()) {
            if (fan_path.empty() == family.empty())
                throw uniorb::Error(uniorb::ErrorKind::InvalidInput, "give exactly one of a fan file or --family");
            uniorb::Fan fan = family.empty() ? uniorb::load_fan(read_file(fan_path))
                                             : uniorb::build(uniorb::parse_family(family));
            uniorb::Analysis analysis = uniorb::analyze(fan);
            if (format == "json")
                std::cout << uniorb::report_json(analysis, options).dump(2) << "\n";
            else
                std::cout << uniorb::report_text(analysis, options);
            return 0;
        }
        uniorb::Fan fan = uniorb::build(uniorb::parse_family(spec));
        const std::string text = uniorb::write_fan_file(fan);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw uniorb::Error(uniorb::ErrorKind::InvalidInput, "cannot write '" + out_path + "'");
            out << text;
        }
        return 0;
    } catch (const uniorb::Error& e) {
        return fail(e);
    }
}

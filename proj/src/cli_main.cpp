#include <CLI11.hpp>

#include <iostream>

#include "strataforge/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"projective covers and presentations of stratified algebras"};
    app.require_subcommand(1);

    std::string fixture_path;
    strataforge::RunOptions opt;
    long long budget = -1;
    std::string oracle = "on";

    std::vector<CLI::App*> subs;
    for (const char* name : {"check", "covers", "present", "extquiver"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("fixture", fixture_path, "fixture JSON file")->required();
        sub->add_option("--budget", budget, "enumeration work cap");
        sub->add_option("--report", opt.report, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--oracle", oracle, "on|off")->check(CLI::IsMember({"on", "off"}));
        sub->add_flag("--quiet", opt.quiet, "suppress the report");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        opt.oracle = oracle == "on";
        opt.budget = budget >= 0 ? budget : strataforge::default_budget();
        strataforge::Fixture fx = strataforge::load_fixture(fixture_path);
        std::string command = app.get_subcommands().front()->get_name();
        strataforge::RunResult res = strataforge::run_command(command, fx, opt);
        if (!opt.quiet) std::cout << res.report;
        return res.exit_code;
    } catch (const strataforge::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const strataforge::VerifyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

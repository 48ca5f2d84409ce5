#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "orient/jobs.hpp"

int main(int argc, char** argv) {
    CLI::App app{"orient-calc: exact calculator for orientation groups, index forms,\n"
                 "orientability verdicts, and simplicial skeleton constructions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format = "text";

    const std::pair<const char*, const char*> kinds[] = {
        {"group", "Smith normal form and primary decomposition of a presentation"},
        {"euler-form", "Euler form of an elliptic operator against K-class witnesses"},
        {"omega", "orientation-group multiplication and exchange signs"},
        {"orientability", "orientability verdict with its citation trail"},
        {"skeleton", "barycentric, dual, and prism constructions on a complex"},
    };
    for (const auto& [name, description] : kinds) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "job configuration file")->required();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "structured"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        auto kind = orient::cli::job_kind_from_name(app.get_subcommands()[0]->get_name());
        auto result = orient::cli::run_config(kind, config_path);
        std::cout << orient::cli::render(result, format == "structured"
                                                     ? orient::cli::OutputFormat::Structured
                                                     : orient::cli::OutputFormat::Text);
        return 0;
    } catch (const orient::ParseError& e) {
        std::cerr << "parse-error: " << e.what() << "\n";
        return 2;
    } catch (const orient::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

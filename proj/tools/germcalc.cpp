#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "germ/job.hpp"

namespace {

int run(const std::string& input_path, const std::string& json_path,
        germ::Command cmd) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "input error: cannot read `" << input_path << "`\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    germ::RunResult r = germ::run_document(buf.str(), cmd);
    if (r.json.empty()) {
        std::cerr << r.human;
        return r.exit_code;
    }
    if (json_path == "-") {
        std::cout << r.json;
        return r.exit_code;
    }
    std::cout << r.human;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "input error: cannot write `" << json_path << "`\n";
            return 2;
        }
        out << r.json;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact jet-level calculator for isolated hypersurface germs"};
    app.require_subcommand(1);

    std::string input_path;
    std::string json_path;

    struct Sub {
        const char* name;
        const char* desc;
    };
    const Sub subs[] = {
        {"invariants", "Milnor and Tjurina numbers, quasihomogeneity test"},
        {"cohomology", "stabilized Brieskorn and kernel dimensions with basis"},
        {"interpolate", "embed a diffeomorphism into a polynomial-in-t family"},
        {"class", "decide vanishing of the restriction class of a form"},
        {"verify-converse", "certify a volume-form equivalence by an exact primitive"},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.desc);
        sub->add_option("input", input_path, "job document")->required();
        sub->add_option("--json", json_path, "write the JSON report here (`-` for stdout)");
    }

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    auto cmd = germ::command_from_name(sub->get_name());
    if (!cmd) {
        std::cerr << "input error: unknown command\n";
        return 2;
    }
    return run(input_path, json_path, *cmd);
}

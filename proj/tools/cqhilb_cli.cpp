#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cqhilb/action.hpp"
#include "cqhilb/report.hpp"
#include "cqhilb/sweep.hpp"
#include "cqhilb/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    int s = 0, n = 0, r = 0;
    std::string format = "json";
    std::string out;
    int max_n = 6, max_r = 8;
    int jobs = 0;
};

cqh::Format parse_format(const std::string& f) {
    if (f == "md") return cqh::Format::Markdown;
    if (f == "csv") return cqh::Format::Csv;
    return cqh::Format::Json;
}

// Returns false if the output file could not be written.
bool emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream file(opt.out, std::ios::binary);
    file << text;
    return static_cast<bool>(file);
}

std::string render_certificate(const cqh::Certificate& cert, cqh::Format format) {
    std::ostringstream os;
    switch (format) {
        case cqh::Format::Json: os << cqh::to_json(cert).dump(2) << "\n"; break;
        case cqh::Format::Markdown:
            os << "# Verification (s, n, r) = (" << cert.s << ", " << cert.n << ", " << cert.r << ")\n\n"
               << "| check | status | detail |\n|---|---|---|\n";
            for (const auto& c : cert.checks) os << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
            if (!cert.errata.empty()) {
                os << "\n| erratum | computed | published |\n|---|---|---|\n";
                for (const auto& e : cert.errata) os << "| " << e.id << " | " << e.computed << " | " << e.published << " |\n";
            }
            os << "\n" << cert.passed_count() << "/" << cert.checks.size() << " checks passed\n";
            break;
        case cqh::Format::Csv:
            os << "check,status,detail\n";
            for (const auto& c : cert.checks) {
                std::string detail = c.detail;
                for (auto& ch : detail)
                    if (ch == '"') ch = '\'';
                os << c.name << "," << (c.passed ? "pass" : "fail") << ",\"" << detail << "\"\n";
            }
            break;
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of the cyclic quotient singularities 1/r(1,..,1, r-1,..,r-1) and their G-Hilbert resolutions"};
    app.require_subcommand(1);
    Options opt;

    auto add_triple = [&](CLI::App* cmd) {
        cmd->add_option("--s", opt.s, "size of the first coordinate block")->required();
        cmd->add_option("--n", opt.n, "dimension")->required();
        cmd->add_option("--r", opt.r, "group order")->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "json, md or csv")->check(CLI::IsMember({"json", "md", "csv"}));
        cmd->add_option("--out", opt.out, "output file (default: standard output)");
    };

    const std::map<std::string, cqh::Section> sections = {
        {"report", cqh::Section::All},         {"fixed-points", cqh::Section::FixedPoints},
        {"fan", cqh::Section::Fan},            {"mckay-table", cqh::Section::McKayTable},
        {"fm", cqh::Section::Fm},              {"quiver", cqh::Section::Quiver},
    };
    const std::map<std::string, std::string> help = {
        {"report", "full report"},
        {"fixed-points", "torus-fixed points, tangent dimensions and G-graphs"},
        {"fan", "resolution fan"},
        {"mckay-table", "M-divisor coefficients and the McKay bijection"},
        {"fm", "H^0 and H^-n supports of the Fourier-Mukai images"},
        {"quiver", "McKay quiver, charts and the connectedness witness"},
    };
    std::map<std::string, CLI::App*> report_cmds;
    for (const auto& [name, section] : sections) {
        auto* cmd = app.add_subcommand(name, help.at(name));
        add_triple(cmd);
        add_output(cmd);
        report_cmds[name] = cmd;
    }
    auto* verify_cmd = app.add_subcommand("verify", "run every invariant check and print a certificate");
    add_triple(verify_cmd);
    add_output(verify_cmd);
    auto* sweep_cmd = app.add_subcommand("sweep", "verify every triple up to the given bounds");
    sweep_cmd->add_option("--max-n", opt.max_n, "largest n (default 6)");
    sweep_cmd->add_option("--max-r", opt.max_r, "largest r (default 8)");
    sweep_cmd->add_option("--jobs", opt.jobs, "worker threads (default: hardware concurrency)");
    add_output(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const cqh::Format format = parse_format(opt.format);
    try {
        if (sweep_cmd->parsed()) {
            if (opt.max_n < 2 || opt.max_r < 2) {
                std::cerr << "error: --max-n and --max-r must be at least 2\n";
                return kExitUsage;
            }
            if (opt.jobs < 0) {
                std::cerr << "error: --jobs must be non-negative\n";
                return kExitUsage;
            }
            const int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
            const auto result = cqh::run_sweep(opt.max_n, opt.max_r, jobs);
            if (!emit(opt, cqh::render_sweep(result, format))) return kExitResource;
            return result.exit_code();
        }

        const cqh::GroupData g = cqh::GroupData::validate(opt.s, opt.n, opt.r);
        if (verify_cmd->parsed()) {
            const auto cert = cqh::verify(g);
            if (!emit(opt, render_certificate(cert, format))) return kExitResource;
            return cert.passed() ? kExitPass : kExitFail;
        }
        for (const auto& [name, cmd] : report_cmds) {
            if (!cmd->parsed()) continue;
            const auto report = cqh::build_report(g);
            if (!emit(opt, cqh::render(report, sections.at(name), format))) return kExitResource;
            return kExitPass;
        }
    } catch (const cqh::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

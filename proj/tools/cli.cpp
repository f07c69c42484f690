#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "nakayama/filtration.hpp"
#include "nakayama/invariants.hpp"
#include "nakayama/io.hpp"
#include "nakayama/verifier.hpp"

namespace nakayama {

namespace {

struct SourceOptions {
    std::string positional;
    std::string kupisch;
    std::string relations;
    std::string file;
    std::string kind;
};

struct OutputOptions {
    std::string format = "table";
    std::string out;
};

void add_source(CLI::App* cmd, SourceOptions& s)
{
    cmd->add_option("algebra", s.positional, "Kupisch series or shorthand (kupisch:... or rel:N:...)");
    cmd->add_option("--kupisch", s.kupisch, "Kupisch series, e.g. 5,5,6,6,6");
    cmd->add_option("--relations", s.relations, "relation document (JSON file) or rel:N:startxarrows,...");
    cmd->add_option("--file", s.file, "file holding an algebra or relation document");
    cmd->add_option("--kind", s.kind, "cyclic or linear (default: linear iff the series ends in 1)")
        ->check(CLI::IsMember({"cyclic", "linear"}));
}

void add_output(CLI::App* cmd, OutputOptions& o)
{
    cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", o.out, "write the output to this file");
}

Algebra load_source(const SourceOptions& s)
{
    const int given = !s.positional.empty() + !s.kupisch.empty() + !s.relations.empty() + !s.file.empty();
    if (given != 1)
        throw std::invalid_argument("give exactly one algebra source: --kupisch, --relations or --file");
    std::optional<Kind> kind;
    if (!s.kind.empty())
        kind = io::parse_kind(s.kind);

    if (!s.kupisch.empty())
        return io::parse_algebra(s.kupisch, kind);
    if (!s.positional.empty())
        return io::parse_algebra(s.positional, kind);
    if (!s.relations.empty()) {
        if (std::filesystem::is_regular_file(s.relations))
            return kupisch_from_relations(io::load_relations(s.relations));
        return kupisch_from_relations(io::parse_relations(s.relations));
    }
    Algebra a = io::load_algebra(s.file);
    if (kind && *kind != a.kind) {
        a.kind = *kind;
        require_valid(a);
    }
    return a;
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file)
        throw std::invalid_argument("cannot write " + o.out);
    file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homological invariants of Nakayama algebras"};
    app.name("nakayama");
    app.require_subcommand(1);

    SourceOptions source;
    OutputOptions output;

    auto* analyze = app.add_subcommand("analyze", "invariant report of one algebra");
    add_source(analyze, source);
    add_output(analyze, output);

    int steps = 64;
    auto* reduce = app.add_subcommand("reduce", "the syzygy filtered chain of a cyclic algebra");
    add_source(reduce, source);
    add_output(reduce, output);
    reduce->add_option("--steps", steps, "maximum number of reductions")->check(CLI::NonNegativeNumber);

    std::string module_text;
    std::string direction = "proj";
    int max_steps = 64;
    auto* resolve = app.add_subcommand("resolve", "minimal projective or injective resolution of a module");
    add_source(resolve, source);
    add_output(resolve, output);
    resolve->add_option("--module", module_text, "module as top,length")->required();
    resolve->add_option("--direction", direction, "proj or inj")->check(CLI::IsMember({"proj", "inj"}));
    resolve->add_option("--max", max_steps, "maximum number of steps")->check(CLI::PositiveNumber);

    auto* op = app.add_subcommand("op", "the opposite algebra");
    add_source(op, source);
    add_output(op, output);

    int vertices = 0;
    int min_vertices = 2;
    int max_vertices = 4;
    int max_length = 0;
    std::string kinds;
    bool no_dedup = false;
    bool count_only = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list Nakayama algebras within a budget");
    add_output(enumerate_cmd, output);
    auto* exact_opt = enumerate_cmd->add_option("--vertices", vertices, "exact vertex count")->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--max-vertices", max_vertices, "largest vertex count")->excludes(exact_opt);
    enumerate_cmd->add_option("--min-vertices", min_vertices, "smallest vertex count")->excludes(exact_opt);
    enumerate_cmd->add_option("--max-length", max_length, "largest Kupisch entry (default 2N+1)");
    enumerate_cmd->add_option("--kinds", kinds, "cyclic, linear or both (default cyclic)")
        ->check(CLI::IsMember({"cyclic", "linear", "both"}));
    enumerate_cmd->add_flag("--no-dedup", no_dedup, "keep every rotation of a cyclic series");
    enumerate_cmd->add_flag("--count-only", count_only, "print only the number of algebras");

    std::vector<std::string> theorems;
    VerifyOptions vopts;
    int verify_max_vertices = 4;
    int verify_max_length = 0;
    std::string verify_kinds = "both";
    bool verify_no_dedup = false;
    auto* verify_cmd = app.add_subcommand("verify", "check every theorem over all algebras within a budget");
    add_output(verify_cmd, output);
    verify_cmd->add_option("--max-vertices", verify_max_vertices, "largest vertex count");
    verify_cmd->add_option("--max-length", verify_max_length, "largest Kupisch entry (default 2N+1)");
    verify_cmd->add_option("--kinds", verify_kinds, "cyclic, linear or both (default both)")
        ->check(CLI::IsMember({"cyclic", "linear", "both"}));
    verify_cmd->add_flag("--no-dedup", verify_no_dedup, "keep every rotation of a cyclic series");
    verify_cmd->add_option("--theorems", theorems, "comma separated check ids, e.g. T1,T5")->delimiter(',');
    verify_cmd->add_option("--jobs", vopts.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", vopts.seed, "seed for random spot checks");
    verify_cmd->add_option("--spot", vopts.spot_checks, "number of random spot-check algebras beyond the budget")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_flag("--timing", vopts.timing, "include wall time in the report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError& e) {
        // Subcommand help requests surface here as well.
        if (e.get_exit_code() == 0) {
            for (auto* sub : app.get_subcommands())
                out << sub->help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const bool json = output.format == "json";
    try {
        if (analyze->parsed()) {
            const Algebra a = load_source(source);
            const auto report = compute_report(a);
            std::optional<EpsilonChain> chain;
            if (a.is_cyclic())
                chain = epsilon_chain(a);
            emit(output, json ? io::dump(io::report_json(report, chain)) : io::report_table(report, chain), out);
            return 0;
        }
        if (reduce->parsed()) {
            const Algebra a = load_source(source);
            const auto rows = io::chain_rows(a, steps);
            emit(output, json ? io::dump(io::chain_json(rows)) : io::chain_table(rows), out);
            return 0;
        }
        if (resolve->parsed()) {
            const Algebra a = load_source(source);
            const Module m = io::parse_module(module_text);
            const Direction dir = direction == "proj" ? Direction::projective : Direction::injective;
            const auto listing = io::resolution(a, m, dir, max_steps);
            emit(output, json ? io::dump(io::resolution_json(listing, dir)) : io::resolution_table(a, m, listing, dir),
                 out);
            return 0;
        }
        if (op->parsed()) {
            const Algebra a = load_source(source);
            const Algebra o = opposite(a);
            emit(output, json ? io::dump(io::to_json(o)) : kupisch_string(o) + "\n", out);
            return 0;
        }
        if (enumerate_cmd->parsed()) {
            EnumerationBudget budget;
            if (vertices > 0) {
                budget.min_vertices = vertices;
                budget.max_vertices = vertices;
            }
            else {
                budget.min_vertices = min_vertices;
                budget.max_vertices = max_vertices;
            }
            budget.max_length = max_length > 0 ? max_length : 2 * budget.max_vertices + 1;
            budget.cyclic = kinds != "linear";
            budget.linear = kinds == "linear" || kinds == "both";
            budget.dedup = !no_dedup;
            const auto list = enumerate(budget);
            std::string text;
            if (count_only) {
                text = json ? io::dump(io::Json{{"count", list.size()}}) : std::to_string(list.size()) + "\n";
            }
            else if (json) {
                io::Json doc = io::Json::array();
                for (const auto& a : list)
                    doc.push_back(io::to_json(a));
                text = io::dump(doc);
            }
            else {
                for (const auto& a : list)
                    text += to_string(a.kind) + " " + kupisch_string(a) + "\n";
            }
            emit(output, text, out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            EnumerationBudget budget = EnumerationBudget::with_defaults(verify_max_vertices);
            if (verify_max_length > 0)
                budget.max_length = verify_max_length;
            budget.cyclic = verify_kinds != "linear";
            budget.linear = verify_kinds != "cyclic";
            budget.dedup = !verify_no_dedup;
            vopts.theorems = theorems;
            const auto report = verify(budget, vopts);
            emit(output, json ? io::dump(io::verify_json(report)) : io::verify_table(report), out);
            return report.clean() ? 0 : 2;
        }
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace nakayama

#include "nakayama/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace nakayama::io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

int parse_int(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("expected an integer, got an empty field");
    int value = 0;
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
        if (value > 1000000)
            throw std::invalid_argument("integer out of range: '" + std::string(text) + "'");
    }
    return negative ? -value : value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    for (;;) {
        const auto next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return parts;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += items[i];
    }
    return out;
}

std::string series_label(const Algebra& a) { return "(" + kupisch_string(a) + ")"; }

std::string vertex_list(const std::vector<int>& vs)
{
    std::vector<std::string> items;
    for (int v : vs)
        items.push_back(std::to_string(v));
    return "{" + join(items, ",") + "}";
}

std::string arc_list(const std::vector<Module>& arcs)
{
    std::vector<std::string> items;
    for (const auto& m : arcs)
        items.push_back(arc_label(m));
    return "{" + join(items, ", ") + "}";
}

/// Left-aligned text table.
std::string render(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            text += cells[c];
            if (c + 1 < cells.size())
                text += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << text << "\n";
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width)
        rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : rows)
        line(row);
    return os.str();
}

const char* chain_end_name(ChainEnd end)
{
    switch (end) {
    case ChainEnd::self_injective:
        return "self_injective";
    case ChainEnd::linear:
        return "linear";
    case ChainEnd::truncated:
        return "truncated";
    }
    return "";
}

Json algebra_entry(const Algebra& a)
{
    Json j;
    j["kind"] = to_string(a.kind);
    j["kupisch"] = a.kupisch;
    return j;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    if (trim(text).empty())
        throw std::invalid_argument("empty integer list");
    std::vector<int> out;
    for (auto part : split(text, ','))
        out.push_back(parse_int(part));
    return out;
}

Kind parse_kind(std::string_view text)
{
    text = trim(text);
    if (text == "cyclic")
        return Kind::cyclic;
    if (text == "linear")
        return Kind::linear;
    throw std::invalid_argument("unknown algebra kind '" + std::string(text) + "'");
}

RelationSystem parse_relations(std::string_view text)
{
    text = trim(text);
    if (starts_with(text, "rel:"))
        text.remove_prefix(4);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("relation shorthand must look like rel:N:startxarrows,...");
    RelationSystem system;
    system.vertices = parse_int(text.substr(0, colon));
    const auto body = trim(text.substr(colon + 1));
    if (!body.empty())
        for (auto part : split(body, ',')) {
            const auto x = part.find('x');
            if (x == std::string_view::npos)
                throw std::invalid_argument("relation '" + std::string(trim(part)) + "' must look like startxarrows");
            system.relations.push_back({parse_int(part.substr(0, x)), parse_int(part.substr(x + 1))});
        }
    std::sort(system.relations.begin(), system.relations.end());
    return system;
}

Algebra parse_algebra(std::string_view text, std::optional<Kind> kind)
{
    text = trim(text);
    if (starts_with(text, "rel:")) {
        if (kind == Kind::linear)
            throw std::invalid_argument("relation systems describe cyclic algebras");
        return kupisch_from_relations(parse_relations(text));
    }
    if (starts_with(text, "kupisch:"))
        text.remove_prefix(8);
    Algebra a;
    a.kupisch = parse_int_list(text);
    if (kind)
        a.kind = *kind;
    else
        a.kind = (a.kupisch.size() > 1 && a.kupisch.back() == 1) ? Kind::linear : Kind::cyclic;
    require_valid(a);
    return a;
}

Module parse_module(std::string_view text)
{
    const auto values = parse_int_list(text);
    if (values.size() != 2)
        throw std::invalid_argument("module must be given as t,l");
    return {values[0], values[1]};
}

RelationSystem relations_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("relations"))
        throw std::invalid_argument("relation document needs \"vertices\" and \"relations\"");
    RelationSystem system;
    try {
        system.vertices = doc.at("vertices").get<int>();
        for (const auto& rel : doc.at("relations"))
            system.relations.push_back({rel.at("start").get<int>(), rel.at("arrows").get<int>()});
    }
    catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed relation document: ") + e.what());
    }
    std::sort(system.relations.begin(), system.relations.end());
    return system;
}

Algebra algebra_from_json(const Json& doc)
{
    if (doc.is_object() && doc.contains("relations"))
        return kupisch_from_relations(relations_from_json(doc));
    if (!doc.is_object() || !doc.contains("kupisch"))
        throw std::invalid_argument("algebra document needs \"kupisch\"");
    Algebra a;
    try {
        a.kupisch = doc.at("kupisch").get<std::vector<int>>();
        a.kind = doc.contains("kind") ? parse_kind(doc.at("kind").get<std::string>()) : Kind::cyclic;
    }
    catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra document: ") + e.what());
    }
    require_valid(a);
    return a;
}

Algebra load_algebra(const std::string& path)
{
    const std::string text = read_file(path);
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{')
        return algebra_from_json(Json::parse(body, nullptr, true, false));
    return parse_algebra(body);
}

RelationSystem load_relations(const std::string& path)
{
    const std::string text = read_file(path);
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{')
        return relations_from_json(Json::parse(body, nullptr, true, false));
    return parse_relations(body);
}

Json to_json(ExtNat x) { return x.is_finite() ? Json(x.value()) : Json("inf"); }

Json to_json(const Algebra& algebra) { return algebra_entry(algebra); }

Json to_json(const RelationSystem& system)
{
    Json j;
    j["vertices"] = system.vertices;
    j["relations"] = Json::array();
    for (const auto& rel : system.relations)
        j["relations"].push_back({{"start", rel.start}, {"arrows", rel.arrows}});
    return j;
}

Json to_json(Module m) { return Json::array({m.top, m.length}); }

std::string arc_label(Module m) { return std::to_string(m.top) + ":" + std::to_string(m.length); }

std::string module_label(const Algebra& algebra, Module m)
{
    return arc_label(m) + " [S_" + std::to_string(m.top) + "..S_" + std::to_string(socle(algebra, m)) + "]";
}

Json report_json(const InvariantReport& report, const std::optional<EpsilonChain>& chain)
{
    Json j;
    j["kind"] = to_string(report.algebra.kind);
    j["kupisch"] = report.algebra.kupisch;
    j["N"] = report.algebra.vertices();
    j["r"] = report.r;
    j["phi_dim"] = to_json(report.phi_dim);
    j["phi_dim_op"] = to_json(report.phi_dim_op);
    j["findim"] = to_json(report.findim);
    j["findim_op"] = to_json(report.findim_op);
    j["gldim"] = to_json(report.gldim);
    j["gorenstein"] = report.gorenstein;
    j["gordim"] = to_json(report.gordim);
    j["domdim"] = to_json(report.domdim);
    j["m"] = to_json(report.m);
    j["self_injective"] = report.self_injective;
    if (chain) {
        Json c;
        c["depth"] = chain->depth();
        c["end"] = chain_end_name(chain->end);
        c["levels"] = Json::array();
        for (const auto& level : chain->levels) {
            Json comps = Json::array();
            for (const auto& comp : level.components)
                comps.push_back(algebra_entry(comp.algebra));
            c["levels"].push_back(std::move(comps));
        }
        j["epsilon_chain"] = std::move(c);
    }
    return j;
}

std::string report_table(const InvariantReport& report, const std::optional<EpsilonChain>& chain)
{
    std::vector<std::vector<std::string>> rows = {
        {"algebra", to_string(report.algebra.kind) + " " + series_label(report.algebra)},
        {"N", std::to_string(report.algebra.vertices())},
        {"r", std::to_string(report.r)},
        {"phi_dim", report.phi_dim.to_string()},
        {"phi_dim_op", report.phi_dim_op.to_string()},
        {"findim", report.findim.to_string()},
        {"findim_op", report.findim_op.to_string()},
        {"gldim", report.gldim.to_string()},
        {"gorenstein", report.gorenstein ? "yes" : "no"},
        {"gordim", report.gordim.to_string()},
        {"domdim", report.domdim.to_string()},
        {"m", report.m.to_string()},
        {"self_injective", report.self_injective ? "yes" : "no"},
    };
    if (chain) {
        std::vector<std::string> path{series_label(report.algebra)};
        for (const auto& level : chain->levels) {
            std::vector<std::string> comps;
            for (const auto& comp : level.components)
                comps.push_back(series_label(comp.algebra));
            path.push_back(join(comps, " x "));
        }
        rows.push_back({"epsilon_chain", join(path, " -> ")});
        rows.push_back({"chain_depth", std::to_string(chain->depth()) + " (" + chain_end_name(chain->end) + ")"});
    }
    return render({"invariant", "value"}, rows);
}

std::vector<ChainRow> chain_rows(const Algebra& algebra, int max_steps)
{
    if (!algebra.is_cyclic())
        throw std::invalid_argument("reduce needs a cyclic algebra");
    const auto chain = epsilon_chain(algebra, max_steps);
    std::vector<ChainRow> rows;
    auto add_row = [&](std::vector<Algebra> comps) {
        ChainRow row;
        row.level = static_cast<int>(rows.size());
        row.phi_dim = 0;
        for (const auto& c : comps)
            row.phi_dim = max(row.phi_dim, phi_dim(c));
        if (comps.size() == 1 && comps.front().is_cyclic())
            row.filtration = filtration_data(comps.front());
        row.components = std::move(comps);
        rows.push_back(std::move(row));
    };
    add_row({algebra});
    for (const auto& level : chain.levels) {
        std::vector<Algebra> comps;
        for (const auto& comp : level.components)
            comps.push_back(comp.algebra);
        add_row(std::move(comps));
    }
    return rows;
}

Json chain_json(const std::vector<ChainRow>& rows)
{
    Json levels = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["level"] = row.level;
        if (row.filtration) {
            j["kind"] = "cyclic";
            j["kupisch"] = row.components.front().kupisch;
            j["S"] = row.filtration->socles;
            j["S_prime"] = row.filtration->shifted;
            Json arcs = Json::array();
            for (const auto& m : row.filtration->arcs)
                arcs.push_back(arc_label(m));
            j["B"] = std::move(arcs);
        }
        else {
            j["kind"] = "linear";
            Json comps = Json::array();
            for (const auto& c : row.components)
                comps.push_back(c.kupisch);
            j["components"] = std::move(comps);
        }
        j["phi_dim"] = to_json(row.phi_dim);
        levels.push_back(std::move(j));
    }
    return Json{{"levels", std::move(levels)}};
}

std::string chain_table(const std::vector<ChainRow>& rows)
{
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        const std::string name = row.level == 0 ? "A" : row.level == 1 ? "eps(A)" : "eps^" + std::to_string(row.level) + "(A)";
        if (row.filtration) {
            cells.push_back({name, series_label(row.components.front()), vertex_list(row.filtration->socles),
                             vertex_list(row.filtration->shifted), arc_list(row.filtration->arcs),
                             row.phi_dim.to_string()});
        }
        else {
            std::vector<std::string> comps;
            for (const auto& c : row.components)
                comps.push_back(series_label(c));
            cells.push_back({name, join(comps, " x ") + " linear", "-", "-", "-", row.phi_dim.to_string()});
        }
    }
    return render({"level", "kupisch", "S", "S'", "B", "phi_dim"}, cells);
}

std::vector<ResolutionStep> resolution(const Algebra& algebra, Module m, Direction dir, int max_steps)
{
    if (!is_valid(algebra, m))
        throw std::invalid_argument("module " + to_string(m) + " does not exist over (" + kupisch_string(algebra) +
                                    ")");
    std::vector<ResolutionStep> steps;
    if (is_terminal(algebra, m, dir))
        return steps;
    std::vector<Module> seen{m};
    Module current = m;
    for (int n = 1; n <= max_steps; ++n) {
        ResolutionStep s;
        s.step = n;
        s.cover = dir == Direction::projective ? projective_cover(algebra, current) : injective_envelope(algebra, current);
        const auto next = step(algebra, current, dir);
        if (!next) {
            steps.push_back(s);
            break;
        }
        const auto it = std::find(seen.begin(), seen.end(), *next);
        if (it != seen.end()) {
            s.cycle_at = static_cast<int>(it - seen.begin());
            steps.push_back(s);
            break;
        }
        s.module = *next;
        steps.push_back(s);
        seen.push_back(*next);
        current = *next;
    }
    return steps;
}

Json resolution_json(const std::vector<ResolutionStep>& steps, Direction dir)
{
    const char* cover_key = dir == Direction::projective ? "cover" : "envelope";
    Json out = Json::array();
    for (const auto& s : steps) {
        Json j;
        j["step"] = s.step;
        if (s.module)
            j["module"] = to_json(*s.module);
        else if (s.cycle_at)
            j["module"] = Json{{"cycle_at", *s.cycle_at}};
        else
            j["module"] = "zero";
        j[cover_key] = to_json(s.cover);
        out.push_back(std::move(j));
    }
    return out;
}

std::string resolution_table(const Algebra& algebra, Module m, const std::vector<ResolutionStep>& steps,
                             Direction dir)
{
    const bool proj = dir == Direction::projective;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"0", module_label(algebra, m), "-"});
    for (const auto& s : steps) {
        std::string module;
        if (s.module)
            module = module_label(algebra, *s.module);
        else if (s.cycle_at)
            module = "cycle: repeats step " + std::to_string(*s.cycle_at);
        else
            module = "zero";
        rows.push_back({std::to_string(s.step), module, module_label(algebra, s.cover)});
    }
    std::string out = render({"step", proj ? "syzygy" : "cosyzygy", proj ? "cover of previous" : "envelope of previous"}, rows);
    if (steps.empty())
        out += proj ? "module is projective\n" : "module is injective\n";
    return out;
}

Json verify_json(const VerificationReport& report)
{
    Json j;
    Json budget;
    budget["min_vertices"] = report.budget.min_vertices;
    budget["max_vertices"] = report.budget.max_vertices;
    budget["max_length"] = report.budget.max_length;
    Json kinds = Json::array();
    if (report.budget.cyclic)
        kinds.push_back("cyclic");
    if (report.budget.linear)
        kinds.push_back("linear");
    budget["kinds"] = std::move(kinds);
    budget["dedup"] = report.budget.dedup;
    j["budget"] = std::move(budget);
    j["enumerated"] = report.enumerated;

    Json theorems = Json::object();
    for (const auto& t : report.theorems) {
        Json violations = Json::array();
        for (const auto& [algebra, detail] : t.violations) {
            Json v = algebra_entry(algebra);
            v["detail"] = detail;
            violations.push_back(std::move(v));
        }
        theorems[t.id] = Json{{"checked", t.checked}, {"vacuous", t.vacuous}, {"violations", std::move(violations)}};
    }
    j["theorems"] = std::move(theorems);

    Json mismatches = Json::array();
    for (const auto& [algebra, mm] : report.mismatches) {
        Json v = algebra_entry(algebra);
        v["oracle"] = mm.oracle;
        v["witness"] = mm.witness;
        mismatches.push_back(std::move(v));
    }
    j["oracles"] = Json{{"mismatches", std::move(mismatches)}};

    Json observations = Json::object();
    for (const auto& o : report.observations)
        observations[o.key] = Json{{"holds", o.holds}, {"fails", o.fails}};
    j["observations"] = std::move(observations);

    if (report.options.spot_checks > 0) {
        Json failures = Json::array();
        for (const auto& [algebra, detail] : report.spot_failures) {
            Json v = algebra_entry(algebra);
            v["detail"] = detail;
            failures.push_back(std::move(v));
        }
        j["spot_checks"] =
            Json{{"seed", report.options.seed}, {"count", report.spot_count}, {"failures", std::move(failures)}};
    }
    if (report.options.timing)
        j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string verify_table(const VerificationReport& report)
{
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : report.theorems)
        rows.push_back({t.id, std::to_string(t.checked), std::to_string(t.vacuous), std::to_string(t.violations.size())});
    std::ostringstream os;
    os << "enumerated " << report.enumerated << " algebras (N " << report.budget.min_vertices << ".."
       << report.budget.max_vertices << ", entries <= " << report.budget.max_length << ")\n\n";
    os << render({"check", "checked", "vacuous", "violations"}, rows);
    for (const auto& t : report.theorems)
        for (const auto& [algebra, detail] : t.violations)
            os << t.id << " violated by " << to_string(algebra.kind) << " " << series_label(algebra) << ": " << detail
               << "\n";
    os << "\noracle mismatches: " << report.mismatches.size() << "\n";
    for (const auto& [algebra, mm] : report.mismatches)
        os << "  " << mm.oracle << " on " << series_label(algebra) << ": " << mm.witness << "\n";
    if (!report.observations.empty()) {
        os << "\nobservations (not asserted)\n";
        for (const auto& o : report.observations)
            os << "  " << o.key << ": holds " << o.holds << ", fails " << o.fails << "\n";
    }
    if (report.options.spot_checks > 0) {
        os << "\nspot checks: " << report.spot_count << " random algebras (seed " << report.options.seed << "), "
           << report.spot_failures.size() << " failures\n";
        for (const auto& [algebra, detail] : report.spot_failures)
            os << "  " << series_label(algebra) << ": " << detail << "\n";
    }
    if (report.options.timing)
        os << "\nelapsed " << report.elapsed_ms << " ms\n";
    return os.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace nakayama::io

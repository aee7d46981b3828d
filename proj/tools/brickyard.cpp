// brickyard: command-line front end. JSON goes to stdout, diagnostics to
// stderr. Exit codes: 0 ok, 1 property failure, 2 bad input.

#include "brickyard.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace brickyard;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw io::InputError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw io::InputError(std::string("invalid JSON: ") + e.what());
    }
}

Permutation parse_permutation(const std::string& s) {
    try {
        auto w = Permutation::parse(s);
        if (w.size() < 2) throw io::InputError("a permutation needs at least two letters");
        return w;
    } catch (const io::InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw io::InputError(std::string("malformed permutation: ") + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string table_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) out << std::left << std::setw(static_cast<int>(widths[i]) + 2) << cells[i];
    auto s = out.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + '\n';
}

int cmd_bricks(int n, const std::string& format) {
    if (n < 1 || n > 8) throw io::InputError("--n must lie in 1..8");
    auto bricks = enumerate_bricks(n);
    if (format == "json") {
        json list = json::array();
        for (std::size_t i = 0; i < bricks.size(); ++i) {
            const auto& b = bricks[i];
            list.push_back({{"id", i},
                            {"label", stacked_label(b)},
                            {"brick", io::to_json(b)},
                            {"green_arc", io::to_json(sigma_inverse(b, Color::Green))},
                            {"red_arc", io::to_json(sigma_inverse(b, Color::Red))}});
        }
        emit({{"n", n}, {"count", bricks.size()}, {"bricks", list}});
        return kOk;
    }
    std::vector<std::vector<std::string>> rows = {{"id", "label", "string", "arc"}};
    for (std::size_t i = 0; i < bricks.size(); ++i) {
        auto a = sigma_inverse(bricks[i], Color::Green);
        std::string arc = "(" + std::to_string(a.bottom()) + "," + std::to_string(a.top());
        if (!a.sides().empty()) {
            arc += ":";
            for (auto s : a.sides()) arc += side_char(s);
        }
        arc += ")";
        rows.push_back({std::to_string(i), stacked_label(bricks[i]), bricks[i].to_string(), arc});
    }
    std::vector<std::size_t> widths(4, 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], r[c].size());
    for (const auto& r : rows) std::cout << table_row(r, widths);
    std::cout << bricks.size() << " bricks\n";
    return kOk;
}

json smc_record(const BrickUniverse& U, const Permutation& w) {
    auto j = io::to_json(U, smc_from_permutation(U, w));
    j["permutation"] = w.word();
    return j;
}

int cmd_smc(const std::string& perm, int n, bool all) {
    auto p = io::characteristic_from_env();
    if (!perm.empty()) {
        if (all) throw io::InputError("--perm and --all exclude each other");
        auto w = parse_permutation(perm);
        auto U = BrickUniverse::ra(w.rank(), p);
        emit(smc_record(U, w));
        return kOk;
    }
    if (!all) throw io::InputError("give --perm, or --n with --all");
    if (n < 1 || n > 6) throw io::InputError("--n must lie in 1..6");
    auto U = BrickUniverse::ra(n, p);
    for (const auto& w : all_permutations(n + 1)) std::cout << smc_record(U, w).dump() << '\n';
    return kOk;
}

json completion_witness(BrickUniverse& U, const SemibrickPair& X) {
    json w = json::object();
    if (U.is_ra()) {
        if (auto perm = PermutationOracle(U).witness(X)) {
            w["permutation"] = perm->word();
            w["smc"] = io::to_json(U, smc_from_permutation(U, *perm));
        }
    }
    return w;
}

int cmd_check(const std::string& input, const std::string& assert_what, const std::string& backend) {
    auto loaded = io::pair_from_json(read_json(input), backend == "matrix" ? Backend::Matrix : Backend::Arc);
    auto& U = loaded.universe;
    const auto& X = loaded.pair;
    json report = {{"pair", io::pair_labels(U, X)}};
    auto violation = find_violation(U, X);
    report["is_semibrick_pair"] = !violation;
    bool pairwise = false, completable = false;
    report["witness"] = nullptr;
    report["mutation_trace"] = nullptr;
    if (violation) {
        report["violation"] = violation->describe(U);
        report["is_pairwise_completable"] = nullptr;
        report["is_completable"] = nullptr;
    } else {
        auto pw = is_pairwise_completable(U, X);
        pairwise = pw.pairwise;
        report["is_pairwise_completable"] = pairwise;
        auto c = is_completable(U, X);
        completable = c.completable;
        report["is_completable"] = completable;
        report["mutation_trace"] = io::trace_to_json(U, c.trace);
        json w = json::object();
        if (!pairwise) w["pairwise_obstruction"] = {{"S", U.label(pw.bad_S)}, {"T", U.label(pw.bad_T)}};
        if (completable) {
            w["terminal"] = io::pair_labels(U, *c.terminal);
            w.update(completion_witness(U, X));
        } else if (c.dead_end) {
            w["dead_end"] = io::pair_labels(U, *c.dead_end);
            w["obstruction"] = {{"S", U.label(c.obstruction_S)}, {"T", U.label(c.obstruction_T)}};
        }
        report["witness"] = w;
    }
    bool pass = !violation;
    if (assert_what == "pairwise") pass = pass && pairwise;
    else if (assert_what == "completable") pass = pass && completable;
    else if (assert_what == "not-completable") pass = pass && !completable;
    report["pass"] = pass;
    emit(report);
    if (!assert_what.empty() && !pass) return kFail;
    return kOk;
}

int cmd_mutate(const std::string& input, int left, int right) {
    if ((left < 0) == (right < 0)) throw io::InputError("give exactly one of --left or --right");
    auto loaded = io::pair_from_json(read_json(input));
    auto& U = loaded.universe;
    const auto& X = loaded.pair;
    if (auto v = find_violation(U, X)) throw io::InputError("not a semibrick pair: " + v->describe(U));
    const auto& order = left >= 0 ? loaded.D_order : loaded.U_order;
    int index = left >= 0 ? left : right;
    if (index >= static_cast<int>(order.size()))
        throw io::InputError("index " + std::to_string(index) + " is out of range");
    int at = order[index];
    auto c = left >= 0 ? singly_left_compatible(U, X, at) : singly_right_compatible(U, X, at);
    if (!c.compatible) {
        std::cerr << "not singly " << (left >= 0 ? "left" : "right") << " mutation compatible at " << U.label(at) << "\n";
        emit({{"pass", false}, {"compatibility", io::compatibility_to_json(U, c)}});
        return kFail;
    }
    auto Y = left >= 0 ? mutate_left(U, X, at) : mutate_right(U, X, at);
    auto j = io::to_json(U, Y);
    j["labels"] = io::pair_labels(U, Y);
    emit(j);
    return kOk;
}

int cmd_complete(const std::string& input, const std::string& from) {
    auto loaded = io::pair_from_json(read_json(input));
    auto& U = loaded.universe;
    const auto& X = loaded.pair;
    if (from == "U" || from == "D") {
        if (!U.is_ra()) throw io::InputError("completion from one side needs an RA_n universe");
        try {
            SemibrickPair Y = from == "U" ? SemibrickPair(completion_of_U(U, X.U), X.U) : SemibrickPair(X.D, completion_of_D(U, X.D));
            emit(io::to_json(U, Y));
            return kOk;
        } catch (const std::invalid_argument& e) {
            throw io::InputError(e.what());
        }
    }
    if (auto v = find_violation(U, X)) throw io::InputError("not a semibrick pair: " + v->describe(U));
    if (U.is_ra() && static_cast<int>(X.size()) == U.rank()) {
        try {
            auto w = complete_full_rank(U, X);
            emit({{"pass", true}, {"method", "full-rank"}, {"permutation", w.word()}, {"smc", io::to_json(U, X)}});
            return kOk;
        } catch (const CompletionError& e) {
            std::cerr << e.what() << "\n";
            emit({{"pass", false}, {"method", "full-rank"}, {"error", CompletionError::kind_name(e.kind())}, {"message", e.what()}});
            return kFail;
        }
    }
    auto c = is_completable(U, X);
    json out = {{"pass", c.completable}, {"method", "mutation-search"}, {"mutation_trace", io::trace_to_json(U, c.trace)}};
    if (c.completable) out.update(completion_witness(U, X));
    else if (c.dead_end) out["obstruction"] = {{"S", U.label(c.obstruction_S)}, {"T", U.label(c.obstruction_T)}};
    emit(out);
    return c.completable ? kOk : kFail;
}

int cmd_render(const std::string& input, const std::string& perm, const std::string& format) {
    if (input.empty() == perm.empty()) throw io::InputError("give exactly one of --input or --perm");
    ArcDiagram d;
    if (!perm.empty()) {
        auto w = parse_permutation(perm);
        d = delta(w);
        auto r = delta_bar(w);
        d.arcs.insert(d.arcs.end(), r.arcs.begin(), r.arcs.end());
        d.sort();
    } else {
        auto j = read_json(input);
        if (j.contains("universe")) {
            auto loaded = io::pair_from_json(j);
            if (!loaded.universe.is_ra()) throw io::InputError("only RA_n pairs have arc diagrams");
            d = two_colored_diagram(loaded.universe, loaded.pair);
        } else {
            d = io::diagram_from_json(j);
        }
    }
    for (auto c : {Color::Green, Color::Red}) {
        ArcDiagram part;
        part.nodes = d.nodes;
        for (const auto& a : d.arcs)
            if (a.color() == c) part.arcs.push_back(a);
        if (auto v = diagram_violation(part)) throw io::InputError("invalid diagram: " + *v);
    }
    std::cout << (format == "tikz" ? render_tikz(d) : render_ascii(d));
    return kOk;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, std::size_t samples) {
    SuiteOptions o;
    o.n = n;
    o.seed = seed;
    o.samples = samples;
    o.p = io::characteristic_from_env();
    std::vector<std::string> names;
    if (normalize_suite_name(suite) == "all") names = suite_names();
    else names.push_back(suite);
    bool all_pass = true;
    for (const auto& name : names) {
        SuiteReport r;
        try {
            r = verify_suite(name, names.size() > 1 ? SuiteOptions{-1, seed, o.p, samples} : o);
        } catch (const std::out_of_range& e) {
            std::string known;
            for (const auto& k : suite_names()) known += " " + k;
            throw io::InputError(std::string(e.what()) + "; known suites:" + known);
        } catch (const std::invalid_argument& e) {
            throw io::InputError(e.what());
        }
        std::cerr << r.name << " n=" << r.n << (r.pass ? " pass" : " FAIL") << " (" << r.checked << " checks, "
                  << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
        if (names.size() > 1) std::cout << r.to_json().dump() << '\n';
        else emit(r.to_json());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semibrick pairs, arc diagrams and mutation over RA_n and the D4 preprojective algebra"};
    app.require_subcommand(1);

    int n = 0;
    std::string format = "json", perm, input, assert_what, backend = "arc", from, suite;
    bool all = false;
    int left = -1, right = -1;
    std::uint64_t seed = 1;
    std::size_t samples = 10000;

    auto* bricks = app.add_subcommand("bricks", "list every brick of RA_n");
    bricks->add_option("--n", n, "rank, 1..8")->required();
    bricks->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    auto* smc = app.add_subcommand("smc", "2-term simple minded collections from permutations");
    smc->add_option("--perm", perm, "one-line permutation such as 53412");
    smc->add_option("--n", n, "rank for --all, 1..6");
    smc->add_flag("--all", all, "stream every SMC as one JSON object per line");

    auto* check = app.add_subcommand("check", "semibrick pair, pairwise and full completability");
    check->add_option("--input", input, "pair JSON file, - for stdin")->required();
    check->add_option("--assert", assert_what, "exit 1 unless the property holds")
        ->check(CLI::IsMember({"semibrick", "pairwise", "completable", "not-completable"}));
    check->add_option("--backend", backend, "arc or matrix")->check(CLI::IsMember({"arc", "matrix"}));

    auto* mutate = app.add_subcommand("mutate", "left or right mutation at one brick");
    mutate->add_option("--input", input, "pair JSON file, - for stdin")->required();
    auto* lopt = mutate->add_option("--left", left, "0-based index into D as listed in the file");
    auto* ropt = mutate->add_option("--right", right, "0-based index into U as listed in the file");
    lopt->excludes(ropt);
    lopt->check(CLI::NonNegativeNumber);
    ropt->check(CLI::NonNegativeNumber);

    auto* complete = app.add_subcommand("complete", "complete a pair to a 2-term simple minded collection");
    complete->add_option("--input", input, "pair JSON file, - for stdin")->required();
    complete->add_option("--from", from, "U or D: complete one side alone")->check(CLI::IsMember({"U", "D"}));

    auto* render = app.add_subcommand("render", "draw an arc diagram");
    render->add_option("--input", input, "diagram or RA pair JSON file, - for stdin");
    render->add_option("--perm", perm, "draw the two-colored diagram of a permutation");
    std::string rformat = "ascii";
    render->add_option("--format", rformat, "ascii or tikz")->check(CLI::IsMember({"ascii", "tikz"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name, or all")->required();
    verify->add_option("--n", n, "rank; the suite's default when omitted");
    verify->add_option("--seed", seed, "seed for sampled suites");
    verify->add_option("--samples", samples, "sample count for sampled suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*bricks) return cmd_bricks(n, format);
        if (*smc) return cmd_smc(perm, n, all);
        if (*check) return cmd_check(input, assert_what, backend);
        if (*mutate) return cmd_mutate(input, left, right);
        if (*complete) return cmd_complete(input, from);
        if (*render) return cmd_render(input, perm, rformat);
        if (*verify) return cmd_verify(suite, verify->count("--n") ? n : -1, seed, samples);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kOk;
}

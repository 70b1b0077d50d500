#include <tourney/canonical.hpp>
#include <tourney/cli.hpp>
#include <tourney/decomposition.hpp>
#include <tourney/embedding.hpp>
#include <tourney/enumerate.hpp>
#include <tourney/error.hpp>
#include <tourney/families.hpp>
#include <tourney/tournament.hpp>
#include <tourney/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace tourney::cli {

namespace {
    using nlohmann::json;

    struct IoError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    bool use_color(const std::ostream & err)
    {
        if (&err != &std::cerr || ! ::isatty(STDERR_FILENO))
            return false;
        const char * env = std::getenv("TOURNEY_COLOR");
        return ! (env && std::string_view(env) == "0");
    }

    void diagnose(std::ostream & err, std::string_view message)
    {
        if (use_color(err))
            err << "\033[1;31merror:\033[0m " << message << '\n';
        else
            err << "error: " << message << '\n';
    }

    std::string_view trim(std::string_view s)
    {
        const auto space = " \t\r\n";
        const auto b = s.find_first_not_of(space);
        if (b == std::string_view::npos)
            return {};
        return s.substr(b, s.find_last_not_of(space) - b + 1);
    }

    /// Calls f on each code in a file or standard
    /// input. Blank lines and lines starting with '#' are skipped.
    void for_each_input(const std::string & path, std::istream & in, const std::function<void(const Tournament &)> & f)
    {
        std::ifstream file;
        std::istream * source = &in;
        if (path != "-") {
            file.open(path);
            if (! file)
                throw IoError("cannot open '" + path + "'");
            source = &file;
        }
        std::string line;
        for (std::size_t number = 1; std::getline(*source, line); ++number) {
            const auto text = trim(line);
            if (text.empty() || text.front() == '#')
                continue;
            try {
                f(parse_code(text));
            }
            catch (const Error & e) {
                if (e.code() != Errc::parse_error && e.code() != Errc::bad_size)
                    throw;
                throw Error(e.code(), (path == "-" ? std::string("<stdin>") : path) + ":" + std::to_string(number) + ": " + e.what());
            }
        }
        if (source->bad())
            throw IoError("read error on '" + path + "'");
    }

    /// A tournament code, or a compact family name such as "w7" or "p7".
    Tournament parse_inline(std::string_view text)
    {
        if (text.find(':') != std::string_view::npos)
            return parse_code(text);
        return build(parse_family_spec(text));
    }

    /// Output sink that is either `out` or a freshly opened file.
    class Sink {
    public:
        Sink(const std::string & path, std::ostream & out)
            : stream_(&out)
        {
            if (! path.empty() && path != "-") {
                file_.open(path);
                if (! file_)
                    throw IoError("cannot write '" + path + "'");
                stream_ = &file_;
            }
        }

        std::ostream & operator*() { return *stream_; }

        void close(const std::string & path)
        {
            stream_->flush();
            if (! *stream_)
                throw IoError("write error on '" + (path.empty() ? std::string("-") : path) + "'");
        }

    private:
        std::ofstream file_;
        std::ostream * stream_;
    };

    json vertex_list(VertexSet s)
    {
        return s.to_vector();
    }

    VertexSet parse_csv_set(std::string_view csv, int n)
    {
        VertexSet s;
        while (! csv.empty()) {
            const auto comma = csv.find(',');
            const auto item = trim(csv.substr(0, comma));
            int v = -1;
            const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
            if (item.empty() || ec != std::errc() || end != item.data() + item.size())
                throw Error(Errc::parse_error, "bad vertex '" + std::string(item) + "' in --partition");
            if (v < 0 || v >= n)
                throw Error(Errc::out_of_range, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            s.insert(v);
            csv = comma == std::string_view::npos ? std::string_view() : csv.substr(comma + 1);
        }
        return s;
    }

    Tournament gen_tournament(const std::string & name, int order)
    {
        if (order != 0)
            return build({parse_family_name(name), order});
        std::optional<Family> plain;
        try {
            plain = parse_family_name(name);
        }
        catch (const Error & e) {
            if (e.code() != Errc::parse_error)
                throw;
        }
        if (! plain)
            return build(parse_family_spec(name));
        if (fixed_order(*plain) == 0)
            throw Error(Errc::bad_size, "family '" + name + "' needs --order");
        return build({*plain, fixed_order(*plain)});
    }

    json analyze_record(const Tournament & t, const std::optional<VertexSet> & partition_base, bool list_intervals)
    {
        json r;
        r["code"] = to_code(t);
        r["n"] = t.order();
        r["indecomposable"] = is_indecomposable(t);
        r["critical"] = is_critical(t);
        if (t.order() <= max_scan_order) {
            const auto intervals = nontrivial_intervals(t);
            r["nontrivial_interval_count"] = intervals.size();
            if (list_intervals) {
                json list = json::array();
                for (VertexSet i : intervals.intervals)
                    list.push_back(vertex_list(i));
                r["intervals"] = std::move(list);
            }
        }
        else {
            r["nontrivial_interval_count"] = nullptr;
        }
        if (partition_base) {
            json p;
            try {
                const auto part = exterior_partition(t, *partition_base);
                p["base"] = vertex_list(part.base);
                p["ext"] = vertex_list(part.ext);
                p["bracket"] = vertex_list(part.bracket);
                json per = json::object();
                for (int u : part.base)
                    per[std::to_string(u)] = vertex_list(part.part_of(u));
                p["per_vertex"] = std::move(per);
            }
            catch (const Error & e) {
                p["error"] = e.what();
            }
            r["partition"] = std::move(p);
        }
        return r;
    }

    std::string summary_line(const VerificationReport & r)
    {
        std::string s = r.claim + " " + (r.pass ? "pass" : "FAIL") + " n=" + std::to_string(r.min_n) + ".." + std::to_string(r.max_n);
        std::size_t total = 0;
        for (auto c : r.examined)
            total += c;
        s += " examined=" + std::to_string(total);
        if (! r.pass)
            s += " violations=" + std::to_string(r.violation_count);
        if (! r.witnesses.empty() || r.claim == "X17")
            s += " witnesses=" + std::to_string(r.witnesses.size());
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.2fs", r.seconds);
        return s + buf;
    }
}

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Finite tournament toolkit: constructions, intervals, embeddings, enumeration and claim verification.", "tourney"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    std::string family;
    int order = 0;
    bool dot = false;
    auto * gen = app.add_subcommand("gen", "Print a named tournament as a code (or DOT)");
    gen->add_option("--family", family, "t u w p7 b6 c3 d4 d4d tr e f g, or a compact form such as w7")->required();
    gen->add_option("--order", order, "Number of vertices (implied for fixed-size families)")->check(CLI::Range(1, max_order));
    gen->add_flag("--dot", dot, "Graphviz output with every arc drawn");

    std::string input = "-";
    bool list_intervals = false, only_critical = false;
    std::string partition;
    auto * analyze = app.add_subcommand("analyze", "JSON-lines report per input tournament");
    analyze->add_option("--in", input, "File of codes, one per line, or - for standard input");
    analyze->add_flag("--intervals", list_intervals, "List the nontrivial intervals");
    analyze->add_flag("--critical", only_critical, "Report critical tournaments only");
    analyze->add_option("--partition", partition, "X=<csv>: classify V - X relative to base X");

    std::string pattern_text, host_text;
    auto * embed = app.add_subcommand("embed", "Search for an induced copy of a pattern");
    embed->add_option("--pattern", pattern_text, "Code or compact family name")->required();
    embed->add_option("--host", host_text, "Code, or file of codes (- for standard input)")->required();

    auto * profile5 = app.add_subcommand("profile5", "Which of T5, U5, W5 embed, per input tournament");
    profile5->add_option("--in", input, "File of codes, or - for standard input");

    int enum_n = 0;
    bool only_indecomposable = false, count_only = false, allow_big = false;
    std::string out_path;
    int jobs = 0;
    auto * enumerate = app.add_subcommand("enumerate", "One code per isomorphism class, ascending canonical order");
    enumerate->add_option("--n", enum_n, "Order")->required()->check(CLI::Range(1, max_enumeration_order));
    auto * ind_flag = enumerate->add_flag("--indecomposable", only_indecomposable, "Indecomposable classes only");
    auto * crit_flag = enumerate->add_flag("--critical", only_critical, "Critical classes only");
    ind_flag->excludes(crit_flag);
    enumerate->add_flag("--count-only", count_only, "Print the number of classes instead");
    enumerate->add_option("--out", out_path, "Output file (- for standard output)");
    enumerate->add_option("--jobs", jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--allow-big", allow_big, "Permit order 10");

    std::string claim_name, json_path;
    std::optional<int> max_n;
    bool all_counterexamples = false;
    auto * verify = app.add_subcommand("verify", "Check a claim exhaustively up to a bound");
    verify->add_option("--claim", claim_name, "Claim id, or all")->required();
    verify->add_option("--max-n", max_n, "Bound; with 'all' it caps every claim's default");
    verify->add_option("--jobs", jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    verify->add_option("--json", json_path, "Write JSON-lines reports to a file, or - for standard output");
    verify->add_flag("--all-counterexamples", all_counterexamples, "Keep every counterexample");
    verify->add_flag("--allow-big", allow_big, "Permit order 10");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (gen->parsed()) {
            const auto t = gen_tournament(family, order);
            if (dot)
                out << to_dot(t);
            else
                out << to_code(t) << '\n';
        }
        else if (analyze->parsed()) {
            if (! partition.empty() && partition.rfind("X=", 0) != 0)
                throw Error(Errc::parse_error, "--partition expects X=<csv>");
            for_each_input(input, in, [&](const Tournament & t) {
                std::optional<VertexSet> base;
                if (! partition.empty())
                    base = parse_csv_set(std::string_view(partition).substr(2), t.order());
                if (only_critical && ! is_critical(t))
                    return;
                out << analyze_record(t, base, list_intervals).dump() << '\n';
            });
        }
        else if (embed->parsed()) {
            const auto pattern = parse_inline(pattern_text);
            auto one = [&](const Tournament & host) {
                json r;
                r["pattern"] = to_code(pattern);
                r["host"] = to_code(host);
                const auto e = find_embedding(pattern, host);
                r["embeds"] = e.has_value();
                if (e)
                    r["witness"] = e->image;
                out << r.dump() << '\n';
            };
            if (host_text == "-" || std::filesystem::is_regular_file(host_text))
                for_each_input(host_text, in, one);
            else
                one(parse_code(host_text));
        }
        else if (profile5->parsed()) {
            for_each_input(input, in, [&](const Tournament & t) {
                const auto p = i5_profile(t);
                json r;
                r["code"] = to_code(t);
                r["T5"] = p.t5;
                r["U5"] = p.u5;
                r["W5"] = p.w5;
                r["profile"] = p.to_string();
                r["indecomposable"] = is_indecomposable(t);
                out << r.dump() << '\n';
            });
        }
        else if (enumerate->parsed()) {
            const Filter filter = only_indecomposable ? Filter::indecomposable : only_critical ? Filter::critical : Filter::all;
            const EnumerateOptions options{jobs, allow_big};
            Sink sink(out_path, out);
            if (count_only) {
                json r;
                r["n"] = enum_n;
                r["filter"] = to_string(filter);
                r["count"] = count_tournaments(enum_n, filter, options);
                *sink << r.dump() << '\n';
            }
            else {
                EnumerationCursor cursor(enum_n, filter, options);
                while (auto t = cursor.next())
                    *sink << to_code(*t) << '\n';
            }
            sink.close(out_path);
        }
        else if (verify->parsed()) {
            VerifyOptions options;
            options.jobs = jobs;
            options.allow_big = allow_big;
            options.counterexample_cap = all_counterexamples ? 0 : 10;

            std::vector<VerificationReport> reports;
            if (claim_name == "all") {
                std::map<ClaimId, int> bounds;
                if (max_n)
                    for (const auto & c : claims())
                        bounds[c.id] = std::max(c.min_n, std::min(c.default_max_n, *max_n));
                reports = verify_all(bounds, options);
            }
            else {
                const ClaimId id = parse_claim_id(claim_name);
                reports.push_back(verify_claim(id, max_n.value_or(claim(id).default_max_n), options));
            }

            const bool json_to_stdout = json_path == "-";
            if (! json_path.empty()) {
                Sink sink(json_path, out);
                for (const auto & r : reports)
                    *sink << to_json(r) << '\n';
                sink.close(json_path);
            }
            auto & human = json_to_stdout ? err : out;
            bool pass = true;
            for (const auto & r : reports) {
                human << summary_line(r) << '\n';
                for (const auto & c : r.counterexamples)
                    human << "  " << c.code << "  " << c.condition << '\n';
                pass = pass && r.pass;
            }
            return pass ? exit_ok : exit_verification_failed;
        }
        out.flush();
        if (! out)
            throw IoError("write error on standard output");
        return exit_ok;
    }
    catch (const Error & e) {
        diagnose(err, e.what());
    }
    catch (const IoError & e) {
        diagnose(err, e.what());
    }
    return exit_usage;
}

}

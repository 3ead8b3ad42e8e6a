#include "eszk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "eszk/convexity.hpp"
#include "eszk/error.hpp"
#include "eszk/extremal.hpp"
#include "eszk/io.hpp"
#include "eszk/subgons.hpp"

namespace eszk::cli {
namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    std::string svg;
    std::string file;
    std::size_t k = 4;
    std::size_t n = 7;
    std::string store;
    bool list = false;
    SearchConfig search;
    std::string initial;
};

struct Outcome {
    json result;
    int code = kOk;
    std::string digest{};
    std::optional<Polygon> drawing{};
};

json subset_to_json(const IndexSubset& subset) { return subset.indices(); }

Outcome run_classify(const Polygon& p) {
    const auto report = classify(p);
    return {{{"n", report.n},
             {"strict", report.strict},
             {"ordinary", report.ordinary},
             {"dimension", report.dimension}},
            kOk};
}

Outcome run_check(const Polygon& p) {
    const auto verdict = is_convex(p);
    json result{{"convex", verdict.convex},
                {"method", std::string(to_string(verdict.method))},
                {"witness", nullptr}};
    if (verdict.witness) result["witness"] = *verdict.witness;
    return {result, verdict.convex ? kOk : kNegative};
}

Outcome run_pre_convex(const Polygon& p) {
    const bool pre = is_pre_convex(p);
    return {{{"pre_convex", pre}}, pre ? kOk : kNegative};
}

Outcome run_permutations(const Polygon& p) {
    const auto census = convex_permutations(p);
    return {{{"count", census.convex.size()},
             {"total", census.total},
             {"permutations", census.convex}},
            kOk};
}

Outcome run_count(const Polygon& p, const Options& o) {
    const auto counted = count_convex_subgons(p, o.k, {.collect = o.list});
    json result{{"k", o.k}, {"count", counted.count}, {"total", counted.total}};
    if (o.list) {
        json subsets = json::array();
        for (const auto& s : counted.subsets) subsets.push_back(subset_to_json(s));
        result["subsets"] = subsets;
    }
    return {result, kOk};
}

Outcome run_find(const Polygon& p, const Options& o) {
    const auto found = find_convex_subgon(p, o.k);
    json result{{"k", o.k}, {"found", found.has_value()}, {"subset", nullptr}, {"vertices", nullptr}};
    if (found) {
        result["subset"] = subset_to_json(*found);
        result["vertices"] = vertices_to_json(sub_polygon(p, *found));
    }
    return {result, found ? kOk : kNegative};
}

json certificate_report(const Certificate& cert) {
    json result = certificate_to_json(cert);
    result["convex_count"] = cert.convex_count;
    result["bound"] = cert.verified ? json("F(" + std::to_string(cert.k) + ") >= " +
                                           std::to_string(cert.claimed_bound))
                                    : json(nullptr);
    return result;
}

json persist(const Certificate& cert, const std::string& flag) {
    CertificateStore store(resolve_store_path(flag));
    store.load();
    if (store.add(cert)) store.save();
    return store.path().string();
}

Outcome run_verify(const Polygon& p, const Options& o) {
    const auto cert = verify_certificate(p, o.k);
    json result = certificate_report(cert);
    result["stored"] = cert.verified ? persist(cert, o.store) : json(nullptr);
    return {result, cert.verified ? kOk : kNegative};
}

Outcome run_bounds(const Options& o) {
    CertificateStore store(resolve_store_path(o.store));
    store.load();
    return {bounds_to_json(f_bounds(o.k, store.certificates())), kOk};
}

Outcome run_search(const Options& o) {
    auto cfg = o.search;
    cfg.n = o.n;
    cfg.k = o.k;
    if (!o.initial.empty()) cfg.initial = read_polygon_file(o.initial);
    const auto found = search_extremal(cfg);

    json result{{"n", cfg.n},
                {"k", cfg.k},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"iterations", cfg.max_iterations},
                {"objective", found.objective},
                {"best_restart", found.best_restart},
                {"vertices", vertices_to_json(found.best)},
                {"restart_objectives", found.restart_objectives},
                {"certificate", nullptr},
                {"stored", nullptr}};
    if (found.certificate) {
        result["certificate"] = certificate_report(*found.certificate);
        if (found.certificate->verified) result["stored"] = persist(*found.certificate, o.store);
    }
    return {result, kOk, {}, found.best};
}

Outcome run_grow(const Polygon& p, const Options& o) {
    auto cfg = o.search;
    cfg.k = o.k;
    const auto grown = grow(p, cfg);
    json result{{"k", o.k}, {"found", grown.has_value()}, {"vertices", nullptr},
                {"certificate", nullptr}, {"stored", nullptr}};
    std::optional<Polygon> drawing;
    if (grown) {
        const auto cert = verify_certificate(*grown, o.k);
        result["vertices"] = vertices_to_json(*grown);
        result["certificate"] = certificate_report(cert);
        result["stored"] = persist(cert, o.store);
        drawing = *grown;
    }
    return {result, grown ? kOk : kNegative, {}, drawing};
}

std::string scalar_text(const json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

void print_report(std::ostream& out, const std::string& format, const json& report) {
    if (format == "json") {
        out << report.dump() << '\n';
        return;
    }
    out << "command: " << report["command"].get<std::string>() << '\n';
    out << "input_digest: " << report["input_digest"].get<std::string>() << '\n';
    for (const auto& [key, value] : report["result"].items())
        out << key << ": " << scalar_text(value) << '\n';
    out << "timing_ms: " << report["timing_ms"].dump() << '\n';
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact convexity toolkit for ordered polygons", "eszk"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--svg", o.svg, "Write an SVG drawing of the polygon and its hull");

    auto with_file = [&](CLI::App* sub) {
        sub->add_option("FILE", o.file, "Polygon file (JSON or text)")->required();
        return sub;
    };
    auto with_k = [&](CLI::App* sub) {
        sub->add_option("-k", o.k, "Sub-polygon size")->required()->check(CLI::PositiveNumber);
        return sub;
    };
    auto with_store = [&](CLI::App* sub) {
        sub->add_option("--store", o.store, "Certificate store (default $ESZK_STORE or ./eszk-store.json)");
        return sub;
    };
    auto with_search = [&](CLI::App* sub) {
        sub->add_option("--seed", o.search.seed, "RNG seed")->required();
        sub->add_option("--iters", o.search.max_iterations, "Iterations per restart");
        sub->add_option("--box", o.search.box, "Coordinate box half-width");
        return sub;
    };

    with_file(app.add_subcommand("classify", "Strictness, ordinarity and dimension"));
    with_file(app.add_subcommand("check", "Convexity verdict (exit 0 convex, 1 not)"));
    with_file(app.add_subcommand("pre-convex", "Whether some vertex order is convex"));
    with_file(app.add_subcommand("permutations", "All convex vertex orders (n <= 8)"));
    auto* count = with_k(with_file(app.add_subcommand("count-subgons", "Count convex sub-k-gons")));
    count->add_flag("--list", o.list, "Include the convex index subsets");
    with_k(with_file(app.add_subcommand("find-subgon", "Find a convex sub-k-gon (exit 0 found, 1 none)")));
    with_store(with_k(with_file(app.add_subcommand("verify-cert", "Verify a lower-bound certificate"))));
    with_store(with_k(app.add_subcommand("bounds", "Known bounds on F(k)")));

    auto* search = with_store(with_search(with_k(app.add_subcommand("search", "Annealing search for polygons without convex sub-k-gons"))));
    search->add_option("-n", o.n, "Polygon size")->required()->check(CLI::PositiveNumber);
    search->add_option("--restarts", o.search.restarts, "Independent restarts");
    search->add_option("--temp", o.search.initial_temperature, "Initial temperature");
    search->add_option("--decay", o.search.decay, "Temperature decay per iteration");
    search->add_option("--radius", o.search.radius, "Move radius");
    search->add_option("--parallel", o.search.workers, "Worker threads for restarts");
    search->add_option("--initial", o.initial, "Polygon file used as the first restart's start");

    with_store(with_search(with_k(with_file(app.add_subcommand("grow", "Extend a certificate by one vertex")))));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome outcome;
        std::optional<Polygon> polygon;
        if (!o.file.empty()) polygon = read_polygon_file(o.file);

        static const std::map<std::string, std::function<Outcome(const Polygon&, const Options&)>>
            polygon_commands{
                {"classify", [](const Polygon& p, const Options&) { return run_classify(p); }},
                {"check", [](const Polygon& p, const Options&) { return run_check(p); }},
                {"pre-convex", [](const Polygon& p, const Options&) { return run_pre_convex(p); }},
                {"permutations", [](const Polygon& p, const Options&) { return run_permutations(p); }},
                {"count-subgons", run_count},
                {"find-subgon", run_find},
                {"verify-cert", run_verify},
                {"grow", run_grow},
            };
        if (auto it = polygon_commands.find(command); it != polygon_commands.end()) {
            outcome = it->second(*polygon, o);
            outcome.digest = digest(*polygon);
            if (!outcome.drawing) outcome.drawing = polygon;
        } else if (command == "bounds") {
            outcome = run_bounds(o);
            outcome.digest = digest("bounds -k " + std::to_string(o.k));
        } else {
            outcome = run_search(o);
            outcome.digest = digest("search -n " + std::to_string(o.n) + " -k " +
                                    std::to_string(o.k) + " --seed " +
                                    std::to_string(o.search.seed));
        }

        if (!o.svg.empty() && outcome.drawing) {
            std::ofstream svg(o.svg);
            if (!svg) throw InputError("cannot write " + o.svg);
            svg << render_svg(*outcome.drawing);
        }

        const auto elapsed = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        print_report(out, o.format,
                     {{"command", command},
                      {"input_digest", outcome.digest},
                      {"result", outcome.result},
                      {"timing_ms", elapsed}});
        return outcome.code;
    } catch (const InputError& e) {
        err << "eszk " << command << ": " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "eszk " << command << ": " << e.what() << '\n';
        return kUsage;
    } catch (const CapabilityError& e) {
        err << "eszk " << command << ": " << e.what() << '\n';
        return kCapability;
    } catch (const ExhaustionError& e) {
        err << "eszk " << command << ": " << e.what() << '\n';
        return kCapability;
    } catch (const std::exception& e) {
        err << "eszk " << command << ": internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace eszk::cli

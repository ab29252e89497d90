#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mulli/mulli.hpp"

namespace mulli::cli {

namespace {

enum class Format { text, json, csv };

struct Options {
    int p = 0;
    std::optional<int> n;
    std::string partition;
    std::string format = "text";
    std::string out_path;
    std::string direction;
    bool strict_prime = false;
    bool star = false;
    std::optional<int> layer;
};

Format format_of(const Options& opts) {
    if (opts.format == "json") return Format::json;
    if (opts.format == "csv") return Format::csv;
    return Format::text;
}

int max_n_from_env() {
    const char* raw = std::getenv("MULLI_MAX_N");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxN;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value < 0 || value > kMaxPartitionSize) {
        throw Error(ErrorKind::precondition, std::string("MULLI_MAX_N is not a valid size: ") + raw);
    }
    return static_cast<int>(value);
}

// Validated modulus; warns about composite p unless --strict-prime rejects it.
Modulus modulus(const Options& opts, std::ostream& err) {
    const Modulus p(opts.p);
    if (!p.is_prime()) {
        if (opts.strict_prime) {
            throw Error(ErrorKind::invalid_p,
                        "p = " + std::to_string(opts.p) + " is not prime (--strict-prime)");
        }
        err << "warning: p = " << opts.p << " is not prime; theorems proved for prime p\n";
    }
    return p;
}

int bounded_n(const Options& opts) {
    const int n = opts.n.value();
    const int cap = max_n_from_env();
    if (n > cap) {
        throw Error(ErrorKind::precondition, "n = " + std::to_string(n) +
                                                 " exceeds the enumeration cap " +
                                                 std::to_string(cap) + " (set MULLI_MAX_N)");
    }
    return n;
}

std::string join_partitions(const std::vector<Partition>& xs) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) out += "  ";
        out += "(" + format_partition(x) + ")";
    }
    return out;
}

std::string census_text(const CensusReport& r) {
    std::ostringstream out;
    const int p = r.p.value();
    out << "p = " << p << ", n = " << r.n << '\n'
        << "partitions: " << r.all_count << '\n'
        << p << "-regular: " << r.p_regular_count << '\n'
        << "self-conjugate (" << r.self_conjugate.size() << "): " << join_partitions(r.self_conjugate) << '\n'
        << "BG (" << r.bg.size() << "): " << join_partitions(r.bg) << '\n'
        << "self-Mullineux (" << r.self_mullineux.size() << "): " << join_partitions(r.self_mullineux) << '\n'
        << "distinct odd parts, none divisible by " << p << " (" << r.distinct_odd_nondiv.size()
        << "): " << join_partitions(r.distinct_odd_nondiv) << '\n'
        << "bijection BG -> self-Mullineux:\n";
    for (const auto& pair : r.pairs) {
        out << "  " << format_partition(pair.bg) << " -> " << format_partition(pair.mullineux) << '\n';
    }
    return out.str();
}

// Each handler writes its result into `out` and returns an exit status.
using Handler = std::function<int(const Options&, std::ostream& out, std::ostream& err)>;

int do_symbol(const Options& o, std::ostream& out, std::ostream& err, bool bg) {
    const Modulus p = modulus(o, err);
    const Partition lambda = parse_partition(o.partition);
    const Symbol s = bg ? compute_bg_symbol(lambda, p) : compute_symbol(lambda, p);
    if (format_of(o) == Format::json) {
        out << symbol_to_json(s).dump() << '\n';
    } else {
        out << format_symbol(s) << '\n';
    }
    return kSuccess;
}

void print_partition(const Options& o, std::ostream& out, const Partition& lambda) {
    if (format_of(o) == Format::json) {
        out << partition_to_json(lambda).dump() << '\n';
    } else {
        out << format_partition(lambda) << '\n';
    }
}

int do_map(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    print_partition(o, out, mullineux_map(parse_partition(o.partition), p));
    return kSuccess;
}

int do_bijection(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    const Partition lambda = parse_partition(o.partition);
    print_partition(o, out, o.direction == "bg2m" ? bg_to_mullineux(lambda, p)
                                                  : mullineux_to_bg(lambda, p));
    return kSuccess;
}

int do_census(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    const CensusReport report = census(p, bounded_n(o));
    switch (format_of(o)) {
        case Format::json: out << census_to_json(report).dump(2) << '\n'; break;
        case Format::csv: out << census_to_csv(report); break;
        case Format::text: out << census_text(report); break;
    }
    return kSuccess;
}

int do_gf(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    const int n_max = bounded_n(o);
    const auto coef = bg_count_via_gf(p, n_max);
    if (format_of(o) == Format::json) {
        out << nlohmann::json{{"p", p.value()}, {"n_max", n_max}, {"coefficients", coef}}.dump() << '\n';
    } else {
        for (std::size_t n = 0; n < coef.size(); ++n) out << n << ' ' << coef[n] << '\n';
    }
    return kSuccess;
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    const int n_max = bounded_n(o);
    const auto results = verify_properties(p, n_max);
    bool all = true;
    if (format_of(o) == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& r : results) {
            arr.push_back({{"property", r.name}, {"passed", r.passed}, {"cases", r.cases},
                           {"counterexample", r.counterexample}});
            all = all && r.passed;
        }
        out << nlohmann::json{{"p", p.value()}, {"n_max", n_max}, {"passed", all}, {"properties", arr}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
            if (!r.passed) out << ": " << r.counterexample;
            out << '\n';
            all = all && r.passed;
        }
        out << (all ? "all properties hold" : "some properties FAILED") << " for p = " << p.value()
            << ", n <= " << n_max << '\n';
    }
    return all ? kSuccess : kVerifyFailed;
}

int do_render(const Options& o, std::ostream& out, std::ostream& err) {
    const Modulus p = modulus(o, err);
    const Partition lambda = parse_partition(o.partition);
    const LayerKind kind = o.star ? LayerKind::p_rim_star : LayerKind::p_rim;
    const auto all = layers(lambda, p, kind);
    if (o.layer && (*o.layer < 0 || *o.layer >= static_cast<int>(all.size()))) {
        throw Error(ErrorKind::precondition, "layer " + std::to_string(*o.layer) + " does not exist (" +
                                                 std::to_string(all.size()) + " layers)");
    }
    if (format_of(o) == Format::json) {
        auto arr = nlohmann::json::array();
        for (const auto& nodes : all) arr.push_back(node_set_to_json(nodes));
        out << nlohmann::json{{"p", p.value()},
                              {"partition", partition_to_json(lambda)},
                              {"kind", o.star ? "p-rim*" : "p-rim"},
                              {"layers", arr}}
                   .dump()
            << '\n';
    } else if (o.layer) {
        out << render_highlight(lambda, all[static_cast<std::size_t>(*o.layer)]);
    } else {
        out << render_layers(lambda, p, kind);
    }
    return kSuccess;
}

void print_error(const Options& o, std::ostream& out, std::ostream& err, std::string_view kind,
                 const std::string& message) {
    if (format_of(o) == Format::json) {
        out << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    } else {
        err << "error: " << kind << ": " << message << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mullineux symbols, BG-symbols and the BG <-> self-Mullineux bijection", "mulli"};
    app.require_subcommand(1);

    Options opts;
    std::vector<std::pair<CLI::App*, Handler>> commands;

    auto add = [&](const std::string& name, const std::string& help, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("-p", opts.p, "odd modulus >= 3")->required();
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember(name == "census" ? std::vector<std::string>{"text", "json", "csv"}
                                                   : std::vector<std::string>{"text", "json"}));
        sub->add_option("--out", opts.out_path, "write the result to this file");
        sub->add_flag("--strict-prime", opts.strict_prime, "reject composite p");
        commands.emplace_back(sub, std::move(handler));
        return sub;
    };
    auto needs_partition = [&](CLI::App* sub) {
        sub->add_option("partition", opts.partition, "partition, e.g. 7,5,2^3,1^2")->required();
    };

    needs_partition(add("symbol", "Mullineux symbol G_p of a p-regular partition",
                        [](auto& o, auto& out, auto& err) { return do_symbol(o, out, err, false); }));
    needs_partition(add("bg-symbol", "BG-symbol of a self-conjugate partition",
                        [](auto& o, auto& out, auto& err) { return do_symbol(o, out, err, true); }));
    needs_partition(add("map", "Mullineux map m(lambda)", do_map));
    {
        CLI::App* sub = add("bijection", "BG-partition <-> self-Mullineux partition", do_bijection);
        needs_partition(sub);
        sub->add_option("--direction", opts.direction, "bg2m or m2bg")
            ->required()
            ->check(CLI::IsMember({"bg2m", "m2bg"}));
    }
    add("census", "enumerate the partition families of n", do_census)
        ->add_option("-n", opts.n, "size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add("gf", "coefficients of the BG generating function up to t^n", do_gf)
        ->add_option("-n", opts.n, "largest exponent")
        ->required()
        ->check(CLI::NonNegativeNumber);
    {
        CLI::App* sub = add("verify", "exhaustively check every property for n <= N", do_verify);
        opts.n = 22;
        sub->add_option("-n", opts.n, "largest n checked (default 22)")->check(CLI::NonNegativeNumber);
    }
    {
        CLI::App* sub = add("render", "ASCII diagram labeled by p-rim layers", do_render);
        needs_partition(sub);
        sub->add_flag("--star", opts.star, "use p-rim* layers (self-conjugate input)");
        sub->add_option("--layer", opts.layer, "highlight only this layer with [#]");
    }

    std::vector<const char*> argv{"mulli"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        try {
            if (opts.out_path.empty()) return handler(opts, out, err);
            std::ostringstream buffer;
            const int status = handler(opts, buffer, err);
            std::ofstream file(opts.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open " << opts.out_path << " for writing\n";
                return kDomainError;
            }
            file << buffer.str();
            return status;
        } catch (const Error& e) {
            print_error(opts, out, err, to_string(e.kind()), e.what());
            return kDomainError;
        }
    }
    return kUsageError;
}

}  // namespace mulli::cli

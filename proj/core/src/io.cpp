#include "mulli/io.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "mulli/error.hpp"
#include "mulli/mullineux.hpp"

namespace mulli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error(ErrorKind::parse_error, "cannot parse '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view token, std::string_view whole) {
    token = trim(token);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        parse_fail(whole, "'" + std::string(token) + "' is not an integer");
    }
    return value;
}

Partition from_unsorted(std::vector<int> parts, std::string_view whole) {
    long long total = 0;
    for (int v : parts) {
        if (v < 1) parse_fail(whole, "parts must be positive");
        total += v;
        if (total > kMaxPartitionSize) parse_fail(whole, "partition is too large");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<int> parse_row(std::string_view row, std::string_view whole) {
    std::vector<int> out;
    std::istringstream in{std::string(row)};
    std::string token;
    while (in >> token) out.push_back(parse_int(token, whole));
    return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty() || body == "()") return {};
    if (body.front() == '[') {
        try {
            return partition_from_json(nlohmann::json::parse(body));
        } catch (const nlohmann::json::exception& e) {
            parse_fail(text, e.what());
        }
    }
    std::string_view rest = body;
    if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);

    std::vector<int> parts;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view token = trim(rest.substr(0, comma));
        const auto caret = token.find('^');
        const int value = parse_int(token.substr(0, caret), text);
        const int times = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), text);
        if (times < 1 || times > kMaxPartitionSize) parse_fail(text, "bad exponent");
        if (value >= 1 && static_cast<long long>(value) * times > kMaxPartitionSize) {
            parse_fail(text, "partition is too large");
        }
        parts.insert(parts.end(), static_cast<std::size_t>(times), value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return from_unsorted(std::move(parts), text);
}

std::string format_partition(const Partition& lambda) {
    if (lambda.empty()) return "()";
    std::string out;
    for (int part : lambda.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(part);
    }
    return out;
}

std::string format_symbol(const Symbol& symbol) {
    auto row = [](const std::vector<int>& values) {
        std::string out;
        for (int v : values) {
            if (!out.empty()) out += ' ';
            out += std::to_string(v);
        }
        return out;
    };
    return row(symbol.a_row()) + " / " + row(symbol.r_row());
}

Symbol parse_symbol(std::string_view text, Modulus p, SymbolKind kind) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) parse_fail(text, "expected 'a row / r row'");
    const auto a = parse_row(text.substr(0, slash), text);
    const auto r = parse_row(text.substr(slash + 1), text);
    if (a.size() != r.size()) parse_fail(text, "rows have different lengths");
    std::vector<SymbolColumn> columns;
    for (std::size_t i = 0; i < a.size(); ++i) columns.push_back({a[i], r[i]});
    return Symbol(p, std::move(columns), kind);
}

nlohmann::json partition_to_json(const Partition& lambda) {
    return nlohmann::json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "partition JSON must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(ErrorKind::parse_error, "partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return from_unsorted(std::move(parts), j.dump());
}

nlohmann::json node_set_to_json(const NodeSet& nodes) {
    auto out = nlohmann::json::array();
    for (Cell c : nodes) out.push_back({c.row, c.col});
    return out;
}

NodeSet node_set_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "node set JSON must be an array");
    NodeSet out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw Error(ErrorKind::parse_error, "nodes must be [row, col] integer pairs");
        }
        const Cell c{pair[0].get<int>(), pair[1].get<int>()};
        if (c.row < 1 || c.col < 1) throw Error(ErrorKind::parse_error, "node indices are 1-based");
        out.insert(c);
    }
    return out;
}

nlohmann::json symbol_to_json(const Symbol& symbol) {
    nlohmann::json j;
    j["p"] = symbol.p().value();
    j["a"] = symbol.a_row();
    j["r"] = symbol.r_row();
    if (symbol.kind() == SymbolKind::bg) j["kind"] = "bg";
    return j;
}

Symbol symbol_from_json(const nlohmann::json& j) {
    try {
        const Modulus p(j.at("p").get<int>());
        const auto a = j.at("a").get<std::vector<int>>();
        const auto r = j.at("r").get<std::vector<int>>();
        if (a.size() != r.size()) throw Error(ErrorKind::parse_error, "symbol rows differ in length");
        SymbolKind kind = SymbolKind::mullineux;
        if (j.contains("kind")) {
            const auto tag = j["kind"].get<std::string>();
            if (tag == "bg") {
                kind = SymbolKind::bg;
            } else if (tag != "mullineux") {
                throw Error(ErrorKind::parse_error, "unknown symbol kind '" + tag + "'");
            }
        }
        std::vector<SymbolColumn> columns;
        for (std::size_t i = 0; i < a.size(); ++i) columns.push_back({a[i], r[i]});
        return Symbol(p, std::move(columns), kind);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse_error, std::string("bad symbol JSON: ") + e.what());
    }
}

nlohmann::json census_to_json(const CensusReport& report) {
    auto list = [](const std::vector<Partition>& xs) {
        auto out = nlohmann::json::array();
        for (const auto& x : xs) out.push_back(partition_to_json(x));
        return out;
    };
    nlohmann::json j;
    j["p"] = report.p.value();
    j["n"] = report.n;
    j["all_count"] = report.all_count;
    j["p_regular_count"] = report.p_regular_count;
    j["self_conjugate"] = list(report.self_conjugate);
    j["bg"] = list(report.bg);
    j["self_mullineux"] = list(report.self_mullineux);
    j["distinct_odd_nondiv"] = list(report.distinct_odd_nondiv);
    auto pairs = nlohmann::json::array();
    for (const auto& pair : report.pairs) {
        pairs.push_back({{"bg", partition_to_json(pair.bg)},
                         {"mull", partition_to_json(pair.mullineux)}});
    }
    j["pairs"] = std::move(pairs);
    return j;
}

std::string census_to_csv(const CensusReport& report) {
    auto member = [](const std::vector<Partition>& xs, const Partition& x) {
        // Lists are sorted in decreasing order.
        return std::binary_search(xs.begin(), xs.end(), x, std::greater<>()) ? '1' : '0';
    };
    std::map<Partition, Partition> partner;
    for (const auto& pair : report.pairs) partner.emplace(pair.bg, pair.mullineux);

    std::ostringstream out;
    out << "partition,p_regular,self_conjugate,bg,self_mullineux,distinct_odd_nondiv,mullineux_partner\n";
    for_each_partition(report.n, [&](const Partition& lambda) {
        const auto it = partner.find(lambda);
        out << '"' << format_partition(lambda) << '"' << ','
            << (is_p_regular(lambda, report.p) ? '1' : '0') << ','
            << member(report.self_conjugate, lambda) << ',' << member(report.bg, lambda) << ','
            << member(report.self_mullineux, lambda) << ','
            << member(report.distinct_odd_nondiv, lambda) << ',';
        if (it != partner.end()) out << '"' << format_partition(it->second) << '"';
        out << '\n';
    });
    return out.str();
}

}  // namespace mulli

#include "asmlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

namespace asmlat {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
    throw AsmError(ErrorKind::ParseError, what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

int parse_int(std::string_view token) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        parse_error("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string> split_ws(std::string_view line) {
    std::istringstream is{std::string(line)};
    return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

json coefficient_json(const mpz_class& c) {
    if (c.fits_slong_p()) {
        return json(static_cast<std::int64_t>(c.get_si()));
    }
    return json(c.get_str());
}

Asm parse_json_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        parse_error("JSON matrix needs an \"entries\" array");
    }
    RawMatrix raw;
    try {
        raw = doc["entries"].get<RawMatrix>();
    } catch (const json::exception& e) {
        parse_error(std::string("entries must be integer rows: ") + e.what());
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(raw.size())) {
            parse_error("\"n\" does not match the number of rows");
        }
    }
    return Asm::validate(raw);
}

}  // namespace

Permutation parse_permutation(std::string_view token) {
    token = trim(token);
    if (token.starts_with("perm:")) {
        token.remove_prefix(5);
    }
    if (token.empty()) {
        parse_error("empty permutation");
    }
    std::vector<int> images;
    if (token.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= token.size()) {
            const auto comma = token.find(',', start);
            const auto piece = trim(token.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            images.push_back(parse_int(piece));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    } else {
        if (!std::all_of(token.begin(), token.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            parse_error("permutation '" + std::string(token) + "' is not digits or comma-separated");
        }
        if (token.size() > 9) {
            parse_error("digit-string permutations are limited to n <= 9; use commas");
        }
        for (char ch : token) {
            images.push_back(ch - '0');
        }
    }
    return Permutation::from_images(std::move(images));
}

Asm parse_matrix(std::string_view text) {
    const auto body = trim(text);
    if (body.empty()) {
        parse_error("empty input");
    }
    if (body.front() == '{') {
        return parse_json_matrix(body);
    }
    if (body.starts_with("perm:")) {
        return from_permutation(parse_permutation(body));
    }

    std::vector<std::vector<std::string>> lines;
    std::istringstream is{std::string(body)};
    std::string line;
    while (std::getline(is, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        lines.push_back(split_ws(t));
    }
    std::optional<int> declared;
    if (!lines.empty() && !lines.front().empty() && lines.front().front() == "n") {
        if (lines.front().size() != 2) {
            parse_error("header must be 'n <size>'");
        }
        declared = parse_int(lines.front()[1]);
        if (*declared < 1) {
            parse_error("size must be positive");
        }
        lines.erase(lines.begin());
    }
    RawMatrix raw;
    for (const auto& tokens : lines) {
        std::vector<int> row;
        for (const auto& tok : tokens) {
            row.push_back(parse_int(tok));
        }
        raw.push_back(std::move(row));
    }
    if (declared && static_cast<int>(raw.size()) != *declared) {
        parse_error("header declares n " + std::to_string(*declared) + " but " + std::to_string(raw.size()) +
                    " rows follow");
    }
    return Asm::validate(raw);
}

Asm read_matrix(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str());
}

std::string format_matrix_text(const Asm& a) {
    std::ostringstream os;
    os << "n " << a.size() << '\n';
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            os << (j > 1 ? " " : "") << a.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

json to_json(const Asm& a) {
    return json{{"n", a.size()}, {"entries", a.rows()}};
}

json to_json(const StatRecord& s) {
    return json{{"I", s.inv}, {"Istar", s.dual_inv}, {"N", s.minus}, {"H2", s.weak.units}, {"beta", s.beta}};
}

json to_json(const CoverEdge& e) {
    return json{{"r", e.r},
                {"s", e.s},
                {"type", e.type},
                {"dI", e.deltas.dI},
                {"dN2x", e.deltas.dN2x},
                {"dH2x", e.deltas.dH2x}};
}

json to_json(const HalfIntPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(json::array({e, coefficient_json(c)}));
    }
    return json{{"var", json_name(p.variable())}, {"half_units", true}, {"terms", terms}};
}

json to_json(const BivariatePolynomial& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) {
        terms.push_back(json::array({k.first, k.second, coefficient_json(c)}));
    }
    return json{{"vars", json::array({"lambda", "q"})}, {"half_units", true}, {"terms", terms}};
}

json to_json(const HasseGraph& g) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& node = g.nodes[i];
        nodes.push_back(json{{"id", i},
                             {"label", node_label(node.matrix)},
                             {"entries", node.matrix.rows()},
                             {"stats", to_json(node.stats)},
                             {"join_irreducible", node.join_irreducible}});
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back(json{{"lower", e.lower},
                             {"upper", e.upper},
                             {"r", e.r},
                             {"s", e.s},
                             {"type", e.type},
                             {"dI", e.deltas.dI},
                             {"dN2x", e.deltas.dN2x},
                             {"dH2x", e.deltas.dH2x}});
    }
    return json{{"n", g.n}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace asmlat

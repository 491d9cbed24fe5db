#pragma once

#include "precur/rational.hpp"
#include "precur/recurrence.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace precur {

/// A parsed recurrence input. Coefficients are positional pairs
/// (n-coefficient, constant coefficient) for the leading, middle and (order 2)
/// trailing terms of (l0*n + l1) s_n + (m0*n + m1) s_{n-1} [+ (t0*n + t1) s_{n-2}] = 0.
///
/// Text form: one "key: value" per line, '#' comments, exact rationals only.
///   label: motzkin
///   order: 2
///   lead: 1 2
///   mid: -2 -1
///   trail: -3 3
///   init: 1 1
/// JSON form: the same keys, pairs as arrays of rational strings.
struct RecurrenceDocument {
    static constexpr int schema_version = 1;

    int order = 2;
    std::string label;
    std::pair<Rational, Rational> lead, mid;
    std::optional<std::pair<Rational, Rational>> trail;
    std::optional<Rational> init0, init1;
    std::optional<long> guess_deg_x, guess_deg_y; // per-document guesser overrides

    Order2Rec to_order2() const {
        if (order != 2 || !trail) throw std::invalid_argument("document is not an order-2 recurrence");
        return normalize(lead, mid, *trail);
    }
    Order1Rec to_order1() const {
        if (order != 1) throw std::invalid_argument("document is not an order-1 recurrence");
        return normalize1(lead, mid);
    }
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::pair<Rational, Rational> parse_pair(const std::string& value, const std::string& key) {
    std::istringstream in(value);
    std::string a, b, extra;
    if (!(in >> a >> b) || (in >> extra))
        throw ParseError("'" + key + "' expects exactly two rationals");
    try {
        return {parse_rational(a), parse_rational(b)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " in '" + key + "'");
    }
}

inline RecurrenceDocument document_from_json(const nlohmann::json& j) {
    RecurrenceDocument doc;
    try {
        if (j.contains("schema_version") && j.at("schema_version").get<int>() != RecurrenceDocument::schema_version)
            throw ParseError("unsupported schema_version");
        doc.order = j.at("order").get<int>();
        if (j.contains("label")) doc.label = j.at("label").get<std::string>();
        auto pair_of = [](const nlohmann::json& arr) -> std::pair<Rational, Rational> {
            if (!arr.is_array() || arr.size() != 2) throw ParseError("coefficient pair must be a 2-array");
            return {parse_rational(arr[0].get<std::string>()), parse_rational(arr[1].get<std::string>())};
        };
        doc.lead = pair_of(j.at("lead"));
        doc.mid = pair_of(j.at("mid"));
        if (j.contains("trail")) doc.trail = pair_of(j.at("trail"));
        if (j.contains("init")) {
            const auto& init = j.at("init");
            if (!init.is_array() || init.empty() || init.size() > 2)
                throw ParseError("'init' must hold one or two rationals");
            doc.init0 = parse_rational(init[0].get<std::string>());
            if (init.size() == 2) doc.init1 = parse_rational(init[1].get<std::string>());
        }
        if (j.contains("guess_deg_x")) doc.guess_deg_x = j.at("guess_deg_x").get<long>();
        if (j.contains("guess_deg_y")) doc.guess_deg_y = j.at("guess_deg_y").get<long>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad document JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (doc.order != 1 && doc.order != 2) throw ParseError("'order' must be 1 or 2");
    if (doc.order == 2 && !doc.trail) throw ParseError("order-2 document lacks 'trail'");
    if (doc.order == 1 && doc.trail) throw ParseError("order-1 document carries 'trail'");
    return doc;
}

} // namespace detail

inline RecurrenceDocument parse_document(const std::string& text) {
    // JSON documents start with '{'; everything else is the line format.
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') {
            nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded()) throw ParseError("malformed JSON document");
            return detail::document_from_json(j);
        }
        break;
    }

    RecurrenceDocument doc;
    bool saw_order = false, saw_lead = false, saw_mid = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ParseError("expected 'key: value', got '" + line + "'");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "label") {
            doc.label = value;
        } else if (key == "order") {
            if (value == "1") doc.order = 1;
            else if (value == "2") doc.order = 2;
            else throw ParseError("'order' must be 1 or 2");
            saw_order = true;
        } else if (key == "lead") {
            doc.lead = detail::parse_pair(value, key);
            saw_lead = true;
        } else if (key == "mid") {
            doc.mid = detail::parse_pair(value, key);
            saw_mid = true;
        } else if (key == "trail") {
            doc.trail = detail::parse_pair(value, key);
        } else if (key == "init") {
            std::istringstream iv(value);
            std::string a, b, extra;
            if (!(iv >> a) || (iv >> b && iv >> extra))
                throw ParseError("'init' must hold one or two rationals");
            doc.init0 = parse_rational(a);
            if (!b.empty()) doc.init1 = parse_rational(b);
        } else if (key == "guess_deg_x") {
            doc.guess_deg_x = std::stol(value);
        } else if (key == "guess_deg_y") {
            doc.guess_deg_y = std::stol(value);
        } else {
            throw ParseError("unknown key '" + key + "'");
        }
    }
    if (!saw_order || !saw_lead || !saw_mid) throw ParseError("document needs order, lead and mid");
    if (doc.order == 2 && !doc.trail) throw ParseError("order-2 document lacks 'trail'");
    if (doc.order == 1 && doc.trail) throw ParseError("order-1 document carries 'trail'");
    return doc;
}

inline RecurrenceDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    RecurrenceDocument doc = parse_document(buf.str());
    if (doc.label.empty()) {
        auto slash = path.find_last_of('/');
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        if (auto dot = base.rfind('.'); dot != std::string::npos) base.erase(dot);
        doc.label = base;
    }
    return doc;
}

} // namespace precur

#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetcalc/error.hpp"
#include "posetcalc/poset.hpp"
#include "posetcalc/rlabeling.hpp"

namespace posetcalc {

// On-disk poset description: element names, covers as name pairs, and an
// optional integer label per cover. Ranks are never stored; they are always
// derived during validation.
struct PosetDocument {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    std::optional<std::vector<std::tuple<std::string, std::string, long long>>> labels;
};

struct ParsedPoset {
    PosetDocument document;
    Poset poset;
    std::optional<EdgeLabeling> labeling;
};

namespace detail {

inline const nlohmann::json& doc_field(const nlohmann::json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        raise(ErrorKind::ParseError, "document is missing required field '" + std::string(key) + "'");
    return *it;
}

} // namespace detail

inline PosetDocument parse_document(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::ParseError, e.what());
    }
    if (!root.is_object()) raise(ErrorKind::ParseError, "document must be an object");

    PosetDocument doc;
    if (auto it = root.find("name"); it != root.end()) {
        if (!it->is_string()) raise(ErrorKind::ParseError, "'name' must be a string");
        doc.name = it->get<std::string>();
    }

    const auto& elements = detail::doc_field(root, "elements");
    if (!elements.is_array()) raise(ErrorKind::ParseError, "'elements' must be an array");
    std::set<std::string> seen;
    for (const auto& e : elements) {
        if (!e.is_string()) raise(ErrorKind::ParseError, "'elements' entries must be strings");
        std::string nm = e.get<std::string>();
        if (!seen.insert(nm).second)
            raise(ErrorKind::ParseError, "duplicate element name '" + nm + "'");
        doc.elements.push_back(std::move(nm));
    }

    if (auto it = root.find("covers"); it != root.end()) {
        if (!it->is_array()) raise(ErrorKind::ParseError, "'covers' must be an array");
        for (const auto& c : *it) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                raise(ErrorKind::ParseError, "'covers' entries must be [lower, upper] name pairs");
            doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    }

    if (auto it = root.find("labels"); it != root.end()) {
        if (!it->is_array()) raise(ErrorKind::ParseError, "'labels' must be an array");
        doc.labels.emplace();
        for (const auto& l : *it) {
            if (!l.is_array() || l.size() != 3 || !l[0].is_string() || !l[1].is_string() ||
                !l[2].is_number_integer())
                raise(ErrorKind::ParseError, "'labels' entries must be [lower, upper, integer]");
            doc.labels->emplace_back(l[0].get<std::string>(), l[1].get<std::string>(),
                                     l[2].get<long long>());
        }
    }
    return doc;
}

// Attach the document's labels to the built poset; labels must cover every
// cover relation exactly once.
inline EdgeLabeling document_labeling(const PosetDocument& doc, const Poset& poset) {
    EdgeLabeling labeling;
    for (const auto& [lo, hi, value] : *doc.labels) {
        int u, v;
        try {
            u = poset.index_of(lo);
            v = poset.index_of(hi);
        } catch (const Error&) {
            raise(ErrorKind::ParseError, "label references unknown element");
        }
        bool is_cover = false;
        for (int c : poset.upper_covers(u)) is_cover = is_cover || (c == v);
        if (!is_cover)
            raise(ErrorKind::ParseError, "label on (" + lo + ", " + hi + ") is not a cover");
        if (!labeling.labels.emplace(std::pair(u, v), value).second)
            raise(ErrorKind::ParseError, "duplicate label for cover (" + lo + ", " + hi + ")");
    }
    if (labeling.labels.size() != poset.covers().size())
        raise(ErrorKind::ParseError, "labels must cover every cover relation");
    return labeling;
}

inline ParsedPoset parse_poset(const std::string& text) {
    ParsedPoset parsed{parse_document(text), Poset{}, std::nullopt};
    parsed.poset = build_poset(parsed.document.elements, parsed.document.covers);
    if (parsed.document.labels) parsed.labeling = document_labeling(parsed.document, parsed.poset);
    return parsed;
}

inline std::string render_document(const Poset& poset, const EdgeLabeling* labeling = nullptr,
                                   const std::string& name = {}) {
    nlohmann::ordered_json root;
    if (!name.empty()) root["name"] = name;
    root["elements"] = poset.names();
    auto& covers = root["covers"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : poset.covers())
        covers.push_back({poset.name(u), poset.name(v)});
    if (labeling) {
        auto& labels = root["labels"] = nlohmann::ordered_json::array();
        for (const auto& [u, v] : poset.covers())
            labels.push_back({poset.name(u), poset.name(v), labeling->at(u, v)});
    }
    return root.dump(2) + "\n";
}

} // namespace posetcalc

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "distsem/error.hpp"

namespace distsem {

// Separator between path steps (and before the context lexeme) in feature
// text, and the marker prefix for inverse steps.
inline constexpr std::string_view kPathSep = "\xc2\xbb"; // »
inline constexpr char kInverseMark = '_';

enum class StepDir : std::uint8_t { forward, inverse };

// One dependency relation traversal. Forward steps descend from a head to a
// dependent, inverse steps ascend from a dependent to its head.
struct PathStep {
    std::string label;
    StepDir dir = StepDir::forward;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

// A dependency path between two tokens: the ordered relation steps of the
// unique tree walk. The empty path denotes the anchor position itself.
struct DepPath {
    std::vector<PathStep> steps;

    bool empty() const { return steps.empty(); }
    int order() const { return static_cast<int>(steps.size()); }

    friend bool operator==(const DepPath&, const DepPath&) = default;
};

inline std::string step_text(const PathStep& s) {
    std::string out;
    if (s.dir == StepDir::inverse) out.push_back(kInverseMark);
    out += s.label;
    return out;
}

inline std::string path_text(const DepPath& p) {
    std::string out;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (i > 0) out += kPathSep;
        out += step_text(p.steps[i]);
    }
    return out;
}

inline PathStep parse_step(std::string_view text) {
    if (text.empty()) throw Error("empty path step");
    if (text[0] == kInverseMark) {
        if (text.size() == 1) throw Error("inverse step with no label");
        return PathStep{std::string(text.substr(1)), StepDir::inverse};
    }
    return PathStep{std::string(text), StepDir::forward};
}

inline std::vector<std::string_view> split_on_sep(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t at = s.find(kPathSep, start);
        if (at == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + kPathSep.size();
    }
}

// "" parses to the empty path.
inline DepPath parse_path(std::string_view text) {
    DepPath p;
    if (text.empty()) return p;
    for (std::string_view part : split_on_sep(text)) p.steps.push_back(parse_step(part));
    return p;
}

// Reverses step order and flips every direction flag.
inline DepPath inverse(const DepPath& p) {
    DepPath out;
    out.steps.reserve(p.steps.size());
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
        out.steps.push_back(PathStep{
            it->label, it->dir == StepDir::forward ? StepDir::inverse : StepDir::forward});
    return out;
}

inline DepPath concat(const DepPath& a, const DepPath& b) {
    DepPath out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

inline bool cancels(const PathStep& a, const PathStep& b) {
    return a.label == b.label && a.dir != b.dir;
}

// Cancels adjacent (r, r̄) / (r̄, r) pairs until none remain. The result is
// the free-group normal form, independent of cancellation order.
inline DepPath reduced(const DepPath& p) {
    DepPath out;
    out.steps.reserve(p.steps.size());
    for (const PathStep& s : p.steps) {
        if (!out.steps.empty() && cancels(out.steps.back(), s))
            out.steps.pop_back();
        else
            out.steps.push_back(s);
    }
    return out;
}

inline bool is_reduced(const DepPath& p) {
    for (std::size_t i = 1; i < p.steps.size(); ++i)
        if (cancels(p.steps[i - 1], p.steps[i])) return false;
    return true;
}

// A typed distributional dimension: a dependency path plus the lexeme seen at
// its end.
struct TypedFeature {
    DepPath path;
    std::string lexeme;

    friend bool operator==(const TypedFeature&, const TypedFeature&) = default;
};

// Canonical text: path steps then the lexeme, all »-joined. A feature with
// the empty path is spelled as the bare lexeme.
inline std::string typed_feature_text(const DepPath& path, std::string_view lexeme) {
    if (path.empty()) return std::string(lexeme);
    std::string out = path_text(path);
    out += kPathSep;
    out += lexeme;
    return out;
}

inline std::string typed_feature_text(const TypedFeature& f) {
    return typed_feature_text(f.path, f.lexeme);
}

// The last »-component is the lexeme, everything before it the path.
inline TypedFeature parse_typed_feature(std::string_view text) {
    std::vector<std::string_view> parts = split_on_sep(text);
    TypedFeature f;
    if (parts.back().empty()) throw Error("typed feature with empty lexeme: '" + std::string(text) + "'");
    f.lexeme = std::string(parts.back());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        f.path.steps.push_back(parse_step(parts[i]));
    return f;
}

} // namespace distsem

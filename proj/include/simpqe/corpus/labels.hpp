#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace simpqe {

/// Three-valued quality label. Enumerator order is also the tie-break priority.
enum class AspectLabel { Good = 0, Ok = 1, Bad = 2 };

inline constexpr std::array<AspectLabel, 3> kAllLabels{AspectLabel::Good, AspectLabel::Ok, AspectLabel::Bad};
inline constexpr std::size_t kNumLabels = kAllLabels.size();

enum class Aspect { Grammaticality = 0, Meaning = 1, Simplicity = 2, Overall = 3 };

inline constexpr std::array<Aspect, 4> kAllAspects{Aspect::Grammaticality, Aspect::Meaning, Aspect::Simplicity,
                                                   Aspect::Overall};
inline constexpr std::size_t kNumAspects = kAllAspects.size();

constexpr std::size_t index_of(AspectLabel label) { return static_cast<std::size_t>(label); }
constexpr std::size_t index_of(Aspect aspect) { return static_cast<std::size_t>(aspect); }

/// Case-insensitive; throws ParseError("unparseable label ...") for anything else.
AspectLabel parse_label(std::string_view token);
/// Lowercase file form: "good", "ok", "bad".
std::string_view to_string(AspectLabel label);

/// Accepts the file column names (grammaticality, meaning, simplicity, overall), case-insensitive.
Aspect parse_aspect(std::string_view token);
std::string_view to_string(Aspect aspect);
/// "Grammaticality", "Meaning preservation", ... for report rows.
std::string_view display_name(Aspect aspect);

/// GOOD -> 100, OK -> 50, BAD -> 0.
constexpr double label_to_score(AspectLabel label) {
    switch (label) {
        case AspectLabel::Good: return 100.0;
        case AspectLabel::Ok: return 50.0;
        case AspectLabel::Bad: return 0.0;
    }
    return 0.0;
}

/// Nearest of {0, 50, 100}; the midpoints 25 and 75 go to OK. Throws Error outside [0, 100].
AspectLabel score_to_label(double score);

}  // namespace simpqe

#include "simpqe/corpus/labels.hpp"

#include <cmath>
#include <string>

#include "simpqe/util/error.hpp"
#include "simpqe/util/text_io.hpp"

namespace simpqe {

AspectLabel parse_label(std::string_view token) {
    if (iequals_ascii(token, "good")) {
        return AspectLabel::Good;
    }
    if (iequals_ascii(token, "ok")) {
        return AspectLabel::Ok;
    }
    if (iequals_ascii(token, "bad")) {
        return AspectLabel::Bad;
    }
    throw ParseError("", 0, "unparseable label '" + std::string(token) + "'");
}

std::string_view to_string(AspectLabel label) {
    switch (label) {
        case AspectLabel::Good: return "good";
        case AspectLabel::Ok: return "ok";
        case AspectLabel::Bad: return "bad";
    }
    return "?";
}

Aspect parse_aspect(std::string_view token) {
    for (Aspect a : kAllAspects) {
        if (iequals_ascii(token, to_string(a))) {
            return a;
        }
    }
    throw Error("unknown aspect '" + std::string(token) + "' (expected grammaticality, meaning, simplicity or overall)");
}

std::string_view to_string(Aspect aspect) {
    switch (aspect) {
        case Aspect::Grammaticality: return "grammaticality";
        case Aspect::Meaning: return "meaning";
        case Aspect::Simplicity: return "simplicity";
        case Aspect::Overall: return "overall";
    }
    return "?";
}

std::string_view display_name(Aspect aspect) {
    switch (aspect) {
        case Aspect::Grammaticality: return "Grammaticality";
        case Aspect::Meaning: return "Meaning preservation";
        case Aspect::Simplicity: return "Simplicity";
        case Aspect::Overall: return "Overall";
    }
    return "?";
}

AspectLabel score_to_label(double score) {
    if (!(score >= 0.0 && score <= 100.0)) {
        throw Error("score out of range [0, 100]: " + format_exact(score));
    }
    if (score < 25.0) {
        return AspectLabel::Bad;
    }
    if (score > 75.0) {
        return AspectLabel::Good;
    }
    return AspectLabel::Ok;
}

}  // namespace simpqe

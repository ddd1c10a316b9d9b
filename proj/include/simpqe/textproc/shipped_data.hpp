#pragma once

#include <string_view>

// Contents of the versioned files under data/, embedded at build time.
namespace simpqe::shipped {

std::string_view stopwords();
std::string_view closed_class();
std::string_view cue_phrases();

}  // namespace simpqe::shipped

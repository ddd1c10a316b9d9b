#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simpqe {

/// Splits on Unicode whitespace, then peels the characters . , ; : ! ? " ' ( ) [ ]
/// off both ends of each chunk as one-character tokens. Internal hyphens and apostrophes
/// stay attached ("don't", "well-known"). Never yields an empty token.
std::vector<std::string> tokenize(std::string_view text);

/// True for the one-character tokens peeled off by tokenize.
bool is_edge_punct(char c);

/// A token with no letter or digit in it (ASCII alphanumerics or any non-ASCII byte
/// count as word characters).
bool is_punct_token(std::string_view token);

}  // namespace simpqe

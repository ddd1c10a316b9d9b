#pragma once

#include <string>
#include <string_view>

namespace simpqe {

/// Porter (1980) suffix-stripping stemmer, all five steps. Follows Martin Porter's
/// reference C implementation, including its two published departures from the
/// original article ("bli" -> "ble" in step 2 and the extra "logi" -> "log" rule),
/// which is the behaviour the standard voc.txt/output.txt vocabulary encodes.
///
/// Input is expected to be lowercase. Words of one or two characters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace simpqe

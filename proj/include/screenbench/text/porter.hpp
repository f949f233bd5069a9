#pragma once

#include <string>
#include <string_view>

namespace screenbench::text {

/// Classic Porter (1980) suffix stripper, steps 1a through 5b, without the
/// short-word guard some later implementations added. Expects a lowercase
/// ASCII-alphabetic token; anything else is returned unchanged.
std::string porter_stem(std::string_view token);

} // namespace screenbench::text

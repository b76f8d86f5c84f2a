#pragma once

#include <stdexcept>
#include <string>

namespace foliage {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct BadCode : Error { using Error::Error; };
struct NotGoodWord : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };
struct NotEndTile : Error { using Error::Error; };
struct NotExtendedWord : Error { using Error::Error; };
struct Inadmissible : Error { using Error::Error; };

}  // namespace foliage

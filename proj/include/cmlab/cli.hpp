#pragma once

// Command-line front end. dispatch() is the whole program minus main().

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cmlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

/// Flat "key = value" lines; '#' starts a comment. Throws ValidationError
/// on a malformed line.
std::map<std::string, std::string> parse_config(std::istream& in);

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmlab::cli

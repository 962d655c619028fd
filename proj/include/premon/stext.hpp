#ifndef PREMON_STEXT_HPP
#define PREMON_STEXT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace premon {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) +
                             ": " + msg),
          line(l), column(c) {}
};

// Minimal section/key-value text format shared by config files and algebra
// presentation files:
//
//   [section]
//   key = value
//   key."quoted part" = value
//
// Values: bare scalars, lists [a, b, c], maps {k: v, k2: v2}.
// '#' starts a comment. Keys keep quoted parts verbatim (quotes stripped).
struct STextValue {
    enum class Kind { Scalar, List, Map } kind = Kind::Scalar;
    std::string scalar;
    std::vector<std::string> list;
    std::vector<std::pair<std::string, std::string>> map;  // insertion order kept
};

struct STextEntry {
    std::string key;  // full key, quoted segment unescaped, e.g. bracket.h,e
    STextValue value;
    int line = 0;
};

struct STextSection {
    std::string name;
    std::vector<STextEntry> entries;
    int line = 0;
};

std::vector<STextSection> parse_stext(const std::string& text);

} // namespace premon

#endif
